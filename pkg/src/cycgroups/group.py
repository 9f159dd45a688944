"""
Finite groups as multiplication tables.

Every group is stored as an ``n x n`` table of element indices with the
identity at index 0. Element subsets are Python ints used as bitmasks
(bit ``i`` set means element ``i`` is present).
"""

from __future__ import annotations

from collections import Counter, deque
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .numtheory import is_prime

MAX_ORDER = 64


class OrderCapExceeded(ValueError):
    """A construction would produce a group larger than ``MAX_ORDER``."""


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class CayleyGroup:
    """
    A finite group given by its multiplication table.

    ``table[i][j]`` is the index of the product ``i*j``. Instances are
    treated as immutable; derived data is computed once and cached.
    """

    def __init__(self, table, label: str = "G", gens: Sequence[int] | None = None, check: bool = True):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError("table must be a non-empty square array")
        n = arr.shape[0]
        if n > MAX_ORDER:
            raise OrderCapExceeded(f"order {n} exceeds cap {MAX_ORDER}")
        arr.flags.writeable = False
        self.n = n
        self.table = arr
        self.label = label
        # element indices of the generators used to build the group, if any
        self.gens = tuple(gens) if gens is not None else None
        self.rows = tuple(tuple(int(v) for v in row) for row in arr)
        if check:
            self.check()
        rows = self.rows
        self.inverse = tuple(row.index(0) for row in rows)
        orders = []
        for x in range(n):
            y, k = x, 1
            while y != 0:
                y = rows[y][x]
                k += 1
            orders.append(k)
        self.elem_order = tuple(orders)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"CayleyGroup({self.label}, order={self.n})"

    def check(self):
        """Raise ``ValueError`` unless the table satisfies the group axioms."""
        t = self.table
        n = self.n
        ident = np.arange(n)
        if not (np.array_equal(t[0], ident) and np.array_equal(t[:, 0], ident)):
            raise ValueError("index 0 is not a two-sided identity")
        srt = np.sort(t, axis=1)
        if not (srt == ident).all():
            raise ValueError("some row is not a permutation")
        if not (np.sort(t, axis=0) == ident[:, None]).all():
            raise ValueError("some column is not a permutation")
        # (i*j)*k == i*(j*k) over all triples at once
        if not np.array_equal(t[t, :], t[:, t]):
            raise ValueError("table is not associative")

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def power(self, x: int, k: int) -> int:
        k %= self.elem_order[x]
        y = 0
        for _ in range(k):
            y = self.rows[y][x]
        return y

    def conj(self, x: int, g: int) -> int:
        """``g * x * g^-1``."""
        r = self.rows
        return r[r[g][x]][self.inverse[g]]

    def evaluate(self, word: Iterable[tuple[int, int]]) -> int:
        """Evaluate a word of ``(generator number, +1|-1)`` letters."""
        if self.gens is None:
            raise ValueError(f"{self.label} has no recorded generators")
        y = 0
        for g, s in word:
            x = self.gens[g]
            y = self.rows[y][x if s > 0 else self.inverse[x]]
        return y

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def center(self) -> int:
        """Bitmask of central elements."""
        t = self.table
        return mask_of(int(i) for i in np.nonzero((t == t.T).all(axis=1))[0])

    @cached_property
    def order_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.elem_order).items()))

    def cyclic_mask(self, x: int) -> int:
        m, y = 1, x
        while y != 0:
            m |= 1 << y
            y = self.rows[y][x]
        return m


class Subgroup:
    """Subset of a ``CayleyGroup`` closed under the product, held as a bitmask."""

    __slots__ = ("parent", "mask", "elements")

    def __init__(self, parent: CayleyGroup, mask: int):
        self.parent = parent
        self.mask = mask
        self.elements = tuple(bits(mask))
        assert self.elements and self.elements[0] == 0, "subgroup must contain the identity"
        assert parent.n % len(self.elements) == 0, "Lagrange violated: closure bug"

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.mask == self.mask

    def __hash__(self):
        return hash(self.mask)

    def __repr__(self):
        return f"Subgroup(order={self.order}, elements={list(self.elements)})"

    def is_closed(self) -> bool:
        rows, inv = self.parent.rows, self.parent.inverse
        m = self.mask
        return all(m >> rows[a][b] & 1 for a in self.elements for b in self.elements) and all(
            m >> inv[a] & 1 for a in self.elements
        )


class CyclicSubgroup:
    """A cyclic subgroup together with its smallest-index generator."""

    __slots__ = ("base", "generator", "order")

    def __init__(self, base: Subgroup, generator: int):
        self.base = base
        self.generator = generator
        self.order = base.order

    @property
    def elements(self):
        return self.base.elements

    @property
    def mask(self):
        return self.base.mask

    def __repr__(self):
        return f"CyclicSubgroup(order={self.order}, generator={self.generator})"


def generated_subgroup(g: CayleyGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``seed``."""
    return Subgroup(g, closure_mask(g, mask_of(seed)))


def closure_mask(g: CayleyGroup, mask: int) -> int:
    """Close a bitmask under the group product (finite, so inverses follow)."""
    rows = g.rows
    gens = [x for x in bits(mask) if x != 0]
    mask |= 1
    frontier = bits(mask)
    while frontier:
        new = []
        for a in frontier:
            ra = rows[a]
            for s in gens:
                c = ra[s]
                if not mask >> c & 1:
                    mask |= 1 << c
                    new.append(c)
        frontier = new
    return mask


# -- constructors --------------------------------------------------------------


def _require_order(n: int):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"group order must be a positive int, got {n!r}")
    if n > MAX_ORDER:
        raise OrderCapExceeded(f"order {n} exceeds cap {MAX_ORDER}")


def make_cyclic(n: int) -> CayleyGroup:
    _require_order(n)
    i = np.arange(n)
    return CayleyGroup((i[:, None] + i[None, :]) % n, label=f"Z{n}", gens=[1 % n], check=False)


def make_dihedral(n: int) -> CayleyGroup:
    """Dihedral group of order ``n``; element ``i + k*(n/2)`` is ``r^i s^k``."""
    if not isinstance(n, int) or n < 4 or n % 2:
        raise ValueError(f"dihedral order must be even and >= 4, got {n!r}")
    _require_order(n)
    h = n // 2
    t = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        i, a = x % h, x // h
        for y in range(n):
            j, b = y % h, y // h
            t[x, y] = (i + (-j if a else j)) % h + h * ((a + b) % 2)
    return CayleyGroup(t, label=f"D{n}", gens=[1, h], check=False)


def make_modular_2group(m: int) -> CayleyGroup:
    """``M_{2^m}``: ``a^(2^(m-1)) = b^2 = 1``, ``b^-1 a b = a^(1 + 2^(m-2))``."""
    if not isinstance(m, int) or m < 4:
        raise ValueError(f"modular 2-group needs m >= 4, got {m!r}")
    n = 2**m
    _require_order(n)
    h = n // 2
    k = 1 + 2 ** (m - 2)
    t = np.empty((n, n), dtype=np.int64)
    # (a^i b^e)(a^j b^f) = a^(i + j k^e) b^(e+f)
    for x in range(n):
        i, e = x % h, x // h
        for y in range(n):
            j, f = y % h, y // h
            t[x, y] = (i + j * (k if e else 1)) % h + h * ((e + f) % 2)
    return CayleyGroup(t, label=f"M{n}", gens=[1, h], check=False)


def make_elementary_abelian(p: int, k: int) -> CayleyGroup:
    if not is_prime(p):
        raise ValueError(f"{p!r} is not prime")
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"rank must be a non-negative int, got {k!r}")
    if p**k > MAX_ORDER:
        raise OrderCapExceeded(f"order {p}^{k} exceeds cap {MAX_ORDER}")
    g = make_cyclic(1)
    for _ in range(k):
        g = direct_product(g, make_cyclic(p))
    g.label = f"E({p},{k})" if k != 1 else f"Z{p}"
    return g


def direct_product(g: CayleyGroup, h: CayleyGroup) -> CayleyGroup:
    """Componentwise product; the pair ``(a, b)`` gets index ``a*|h| + b``."""
    if g.n * h.n > MAX_ORDER:
        raise OrderCapExceeded(f"order {g.n}*{h.n} exceeds cap {MAX_ORDER}")
    tg, th = g.table, h.table
    t = (tg[:, None, :, None] * h.n + th[None, :, None, :]).reshape(g.n * h.n, g.n * h.n)
    gens = None
    if g.gens is not None and h.gens is not None:
        gens = [a * h.n for a in g.gens] + list(h.gens)
    if g.n == 1:
        label = h.label
    elif h.n == 1:
        label = g.label
    else:
        label = f"{g.label}x{h.label}"
    return CayleyGroup(t, label=label, gens=gens, check=False)


def from_generators(degree: int, gens: Sequence[Sequence[int]], label: str = "G") -> CayleyGroup:
    """
    Abstract group generated by permutations of ``range(degree)``.

    Products compose left to right: ``(x*y)[i] == y[x[i]]``. Elements are
    numbered in breadth-first order from the identity; ``gens`` of the
    result holds the index of each input permutation.
    """
    perms = []
    for p in gens:
        p = tuple(int(v) for v in p)
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise ValueError(f"not a permutation of range({degree}): {p}")
        perms.append(p)
    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in perms:
            y = tuple(s[v] for v in x)
            if y not in index:
                if len(elems) >= MAX_ORDER:
                    raise OrderCapExceeded(f"closure exceeds cap {MAX_ORDER}")
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    n = len(elems)
    t = [[index[tuple(y[v] for v in x)] for y in elems] for x in elems]
    return CayleyGroup(t, label=label, gens=[index[p] for p in perms], check=False)


def make_symmetric(n: int) -> CayleyGroup:
    if not isinstance(n, int) or not 1 <= n <= 4:
        raise ValueError(f"symmetric degree must be in 1..4, got {n!r}")
    if n == 1:
        g = make_cyclic(1)
    else:
        cycle = list(range(1, n)) + [0]
        swap = [1, 0] + list(range(2, n))
        g = from_generators(n, [cycle, swap] if n > 2 else [swap])
    g.label = f"S{n}"
    return g


def relabel(g: CayleyGroup, perm: Sequence[int], label: str | None = None) -> CayleyGroup:
    """Isomorphic copy where old element ``x`` becomes ``perm[x]`` (``perm[0]`` must be 0)."""
    perm = np.asarray(perm, dtype=np.int64)
    if perm[0] != 0:
        raise ValueError("relabelling must fix the identity")
    inv = np.argsort(perm)
    t = perm[g.table[np.ix_(inv, inv)]]
    gens = [int(perm[x]) for x in g.gens] if g.gens is not None else None
    return CayleyGroup(t, label=label or g.label, gens=gens)


def lcm_order_multiset(a: CayleyGroup, b: CayleyGroup) -> Counter:
    out = Counter()
    for x, cx in a.order_counts.items():
        for y, cy in b.order_counts.items():
            out[x * y // gcd(x, y)] += cx * cy
    return out
