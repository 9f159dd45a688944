"""Sylow subgroups, conjugation, normal cores and isomorphism testing."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .census import census
from .group import CayleyGroup, Subgroup, bits, closure_mask, mask_of
from .numtheory import is_prime, p_part


@dataclass
class SylowReport:
    p: int
    pk: int
    subgroups: list[Subgroup]
    count: int


@dataclass
class IsoResult:
    isomorphic: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.isomorphic


def conjugate_mask(g: CayleyGroup, mask: int, y: int) -> int:
    """Bitmask of ``y H y^-1``."""
    r, yi = g.rows, g.inverse[y]
    ry = r[y]
    out = 0
    for x in bits(mask):
        out |= 1 << r[ry[x]][yi]
    return out


def _as_mask(h) -> int:
    if isinstance(h, Subgroup):
        return h.mask
    return h if isinstance(h, int) else mask_of(h)


def normalizer_mask(g: CayleyGroup, mask: int) -> int:
    return mask_of(y for y in range(g.n) if conjugate_mask(g, mask, y) == mask)


def is_normal(g: CayleyGroup, h) -> bool:
    m = _as_mask(h)
    if g.is_abelian:
        return True
    return all(conjugate_mask(g, m, y) == m for y in range(g.n))


def normal_core(g: CayleyGroup, h) -> Subgroup:
    """Intersection of all conjugates of ``h``."""
    m = _as_mask(h)
    core = m
    for y in range(g.n):
        core &= conjugate_mask(g, m, y)
    return Subgroup(g, core)


def quotient_order_divides(g: CayleyGroup, h, bound: int) -> bool:
    """Whether ``|G/H|`` divides ``bound``; ``h`` must be normal."""
    if not is_normal(g, h):
        raise ValueError("subgroup is not normal")
    size = _as_mask(h).bit_count()
    return bound % (g.n // size) == 0


def _is_p_power(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def sylow(g: CayleyGroup, p: int) -> SylowReport:
    """
    One Sylow ``p``-subgroup grown greedily inside successive normalizers,
    plus its full conjugacy class.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    pk = p_part(g.n, p)
    if pk == 1:
        return SylowReport(p, 1, [Subgroup(g, 1)], 1)
    orders = g.elem_order
    P = 1
    while P.bit_count() < pk:
        N = normalizer_mask(g, P)
        for x in bits(N & ~P):
            if _is_p_power(orders[x], p):
                P = closure_mask(g, P | 1 << x)
                break
        else:
            raise AssertionError("no p-element in N(P) \\ P below Sylow order: Sylow growth bug")
        assert _is_p_power(P.bit_count(), p)
    seen = {}
    for y in range(g.n):
        c = conjugate_mask(g, P, y)
        seen.setdefault(c, None)
    subs = [Subgroup(g, m) for m in seen]
    return SylowReport(p, pk, subs, len(subs))


def has_cyclic_of_order(g: CayleyGroup, d: int) -> bool:
    return d in g.elem_order


def all_subgroups(g: CayleyGroup) -> list[Subgroup]:
    """Every subgroup, as joins of cyclic subgroups. Intended for order <= 24."""
    cyclic = sorted({g.cyclic_mask(x) for x in range(g.n)})
    found = set(cyclic)
    queue = deque(cyclic)
    while queue:
        m = queue.popleft()
        for c in cyclic:
            if c & ~m:
                j = closure_mask(g, m | c)
                if j not in found:
                    found.add(j)
                    queue.append(j)
    subs = [Subgroup(g, m) for m in found]
    subs.sort(key=lambda s: (s.order, s.elements))
    return subs


# -- isomorphism ---------------------------------------------------------------


def fingerprint(g: CayleyGroup) -> tuple:
    fp = g.__dict__.get("_fingerprint")
    if fp is None:
        fp = (
            g.n,
            g.is_abelian,
            tuple(g.order_counts.items()),
            g.center.bit_count(),
            census(g).rows,
        )
        g.__dict__["_fingerprint"] = fp
    return fp


def greedy_generators(g: CayleyGroup) -> tuple[int, ...]:
    """Generating set built by always adding the element with the largest closure jump."""
    gens = g.__dict__.get("_greedy_gens")
    if gens is None:
        gens = []
        m = 1
        while m != g.full_mask:
            best, best_m = None, m
            for x in range(1, g.n):
                if m >> x & 1:
                    continue
                j = closure_mask(g, m | 1 << x)
                if j.bit_count() > best_m.bit_count():
                    best, best_m = x, j
            gens.append(best)
            m = best_m
        gens = tuple(gens)
        g.__dict__["_greedy_gens"] = gens
    return gens


def _extend(g: CayleyGroup, h: CayleyGroup, gens, images):
    """Propagate generator images along the Cayley graph of ``<gens>``; None on conflict."""
    f = [-1] * g.n
    used = [False] * h.n
    f[0] = 0
    used[0] = True
    gr, hr = g.rows, h.rows
    queue = deque([0])
    while queue:
        x = queue.popleft()
        fx = hr[f[x]]
        for s, im in zip(gens, images):
            y = gr[x][s]
            fy = fx[im]
            if f[y] < 0:
                if used[fy]:
                    return None
                f[y] = fy
                used[fy] = True
                queue.append(y)
            elif f[y] != fy:
                return None
    return f


def isomorphic(g: CayleyGroup, h: CayleyGroup) -> IsoResult:
    if fingerprint(g) != fingerprint(h):
        return IsoResult(False)
    if g.n == 1:
        return IsoResult(True, (0,))
    gens = greedy_generators(g)
    by_order: dict[int, list[int]] = {}
    for y in range(h.n):
        by_order.setdefault(h.elem_order[y], []).append(y)
    candidates = [by_order.get(g.elem_order[s], []) for s in gens]

    def search(k, images):
        if k == len(gens):
            f = _extend(g, h, gens, images)
            if f is not None and -1 not in f:
                return f
            return None
        for y in candidates[k]:
            images.append(y)
            if _extend(g, h, gens[: k + 1], images) is not None:
                f = search(k + 1, images)
                if f is not None:
                    return f
            images.pop()
        return None

    f = search(0, [])
    if f is None:
        return IsoResult(False)
    return IsoResult(True, tuple(f))


def is_homomorphism(g: CayleyGroup, h: CayleyGroup, f) -> bool:
    gr, hr = g.rows, h.rows
    return all(f[gr[x][y]] == hr[f[x]][f[y]] for x in range(g.n) for y in range(g.n))
