"""
Exhaustive enumeration of group tables of order n, one per isomorphism class.

Cells of the table (identity row and column excluded) are filled in row-major
order. Each assignment is checked against the Latin-square constraints and
propagated through every associativity triple it takes part in. Unused
element labels are interchangeable, so for each decision only one label
beyond the largest already in play is tried.

A completed table is first compared against the classes found so far with
the same invariant fingerprint; a match only counts once its isomorphism
witness has been checked on every product. Otherwise the table is reduced to
its lexicographically smallest relabelling, which becomes the class
representative.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..group import CayleyGroup
from ..structure import fingerprint, is_homomorphism, isomorphic

log = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**8


class NodeBudgetExceeded(RuntimeError):
    def __init__(self, budget: int, nodes: int, tables: int, classes: int):
        super().__init__(
            f"search exceeded {budget} nodes ({tables} complete tables, {classes} classes found so far)"
        )
        self.budget = budget
        self.nodes = nodes
        self.tables = tables
        self.classes = classes


class _Contradiction(Exception):
    pass


class _Search:
    def __init__(self, n: int, budget: int):
        self.n = n
        self.budget = budget
        self.nodes = 0
        self.tables = 0
        self.found: set[tuple[int, ...]] = set()
        self.buckets: dict[tuple, list[CayleyGroup]] = {}
        nn = n * n
        t = [-1] * nn
        rpos = [-1] * nn  # rpos[x*n + v] = column where row x holds v
        cpos = [-1] * nn  # cpos[y*n + v] = row where column y holds v
        for x in range(n):
            t[x] = x
            t[x * n] = x
            rpos[x] = x
            cpos[x] = x
            rpos[x * n + x] = 0
            cpos[x * n + x] = 0
        self.t, self.rpos, self.cpos = t, rpos, cpos
        self.trail: list[int] = []
        self.cells = [i * n + j for i in range(1, n) for j in range(1, n)]

    def set(self, i: int, j: int, k: int, stack: list):
        n = self.n
        c = i * n + j
        cur = self.t[c]
        if cur >= 0:
            if cur != k:
                raise _Contradiction
            return
        if self.rpos[i * n + k] >= 0 or self.cpos[j * n + k] >= 0:
            raise _Contradiction
        self.t[c] = k
        self.rpos[i * n + k] = j
        self.cpos[j * n + k] = i
        self.trail.append(c)
        stack.append(c)

    def undo(self, mark: int):
        n, t, rpos, cpos, trail = self.n, self.t, self.rpos, self.cpos, self.trail
        while len(trail) > mark:
            c = trail.pop()
            i, j = divmod(c, n)
            k = t[c]
            t[c] = -1
            rpos[i * n + k] = -1
            cpos[j * n + k] = -1

    def triple(self, x: int, y: int, z: int, stack: list):
        """Enforce (x*y)*z == x*(y*z) as far as the known cells allow."""
        n, t = self.n, self.t
        a = t[x * n + y]
        b = t[y * n + z]
        if a >= 0:
            left = t[a * n + z]
            if b >= 0:
                right = t[x * n + b]
                if left >= 0:
                    if right >= 0:
                        if left != right:
                            raise _Contradiction
                    else:
                        self.set(x, b, left, stack)
                elif right >= 0:
                    self.set(a, z, right, stack)
            elif left >= 0:
                col = self.rpos[x * n + left]
                if col >= 0:
                    self.set(y, z, col, stack)
        elif b >= 0:
            right = t[x * n + b]
            if right >= 0:
                row = self.cpos[z * n + right]
                if row >= 0:
                    self.set(x, y, row, stack)

    def propagate(self, stack: list):
        n, t, rpos = self.n, self.t, self.rpos
        r = range(1, n)
        while stack:
            c = stack.pop()
            i, j = divmod(c, n)
            for z in r:
                self.triple(i, j, z, stack)
            for x in r:
                self.triple(x, i, j, stack)
            for x in r:
                y = rpos[x * n + i]
                if y > 0:
                    self.triple(x, y, j, stack)
            for y in r:
                z = rpos[y * n + j]
                if z > 0:
                    self.triple(i, y, z, stack)

    def assign(self, i: int, j: int, k: int) -> bool:
        stack: list[int] = []
        try:
            self.set(i, j, k, stack)
            self.propagate(stack)
        except _Contradiction:
            return False
        return True

    def first_open(self, start: int) -> int:
        t, cells = self.t, self.cells
        while start < len(cells) and t[cells[start]] >= 0:
            start += 1
        return start

    def candidates(self, pos: int, mx: int) -> tuple[int, int, list[int]]:
        c = self.cells[pos]
        i, j = divmod(c, self.n)
        mx = max(mx, i, j)
        top = min(mx + 1, self.n - 1)
        n = self.n
        vals = [k for k in range(top + 1) if self.rpos[i * n + k] < 0 and self.cpos[j * n + k] < 0]
        return i, j, vals

    def run(self, pos: int = 0, mx: int = 0):
        pos = self.first_open(pos)
        if pos == len(self.cells):
            self.leaf()
            return
        i, j, vals = self.candidates(pos, mx)
        mx = max(mx, i, j)
        for k in vals:
            self.nodes += 1
            if self.nodes > self.budget:
                raise NodeBudgetExceeded(self.budget, self.nodes, self.tables, len(self.found))
            mark = len(self.trail)
            if self.assign(i, j, k):
                self.run(pos + 1, max(mx, k, self.max_label_since(mark)))
            self.undo(mark)

    def max_label_since(self, mark: int) -> int:
        n, t = self.n, self.t
        mx = 0
        for c in self.trail[mark:]:
            i, j = divmod(c, n)
            mx = max(mx, i, j, t[c])
        return mx

    def leaf(self):
        n = self.n
        table = [self.t[i * n : (i + 1) * n] for i in range(n)]
        self.tables += 1
        g = CayleyGroup(table, check=False)
        bucket = self.buckets.setdefault(fingerprint(g), [])
        for rep in bucket:
            iso = isomorphic(rep, g)
            if iso and is_homomorphism(rep, g, iso.witness):
                return
        bucket.append(g)
        self.found.add(canonical_form(table))


def _generator_sequences(rows, order):
    """
    Every sequence built by repeatedly adding an element outside the current
    subgroup that maximizes (size of the enlarged subgroup, element order),
    until the whole group is generated. The rule only uses invariants, so an
    isomorphism maps these sequences onto those of the image group.
    """
    n = len(rows)
    out = []

    def close(gens):
        seen = [False] * n
        seen[0] = True
        todo = [0]
        for u in todo:
            r = rows[u]
            for x in gens:
                v = r[x]
                if not seen[v]:
                    seen[v] = True
                    todo.append(v)
        return seen, len(todo)

    def rec(prefix, inside):
        best, cands = None, []
        for x in range(1, n):
            if inside[x]:
                continue
            seen, size = close(prefix + [x])
            key = (size, order[x])
            if best is None or key > best:
                best, cands = key, [(x, seen)]
            elif key == best:
                cands.append((x, seen))
        for x, seen in cands:
            if best[0] == n:
                out.append(prefix + [x])
            else:
                rec(prefix + [x], seen)

    rec([], [True] + [False] * (n - 1))
    return out


def canonical_form(table) -> tuple[int, ...]:
    """
    Canonical relabelling of a group table (identity kept at 0), as the
    row-major tuple of its non-identity cells.

    Candidates are the breadth-first labellings along each invariantly chosen
    generating sequence; the lexicographically smallest resulting table wins.
    """
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 1:
        return ()
    arr = np.asarray(rows, dtype=np.int64)
    order = [1] * n
    for x in range(1, n):
        y, k = x, 1
        while y:
            y = rows[y][x]
            k += 1
        order[x] = k
    best = None
    for gens in _generator_sequences(rows, order):
        lab = [-1] * n
        lab[0] = 0
        inv = [0]
        for u in inv:
            r = rows[u]
            for x in gens:
                v = r[x]
                if lab[v] < 0:
                    lab[v] = len(inv)
                    inv.append(v)
        ia = np.asarray(inv)
        cand = np.asarray(lab, dtype=np.uint8)[arr[ia[:, None], ia]][1:, 1:].tobytes()
        if best is None or cand < best:
            best = cand
    return tuple(best)


def table_from_canonical(n: int, form) -> list[list[int]]:
    m = n - 1
    table = [list(range(n))]
    for r in range(m):
        table.append([r + 1] + list(form[r * m : (r + 1) * m]))
    return table


def _run_subtree(args):
    n, budget, first = args
    s = _Search(n, budget)
    pos = s.first_open(0)
    i, j, _ = s.candidates(pos, 0)
    if s.assign(i, j, first):
        s.run(pos + 1, max(i, j, first, s.max_label_since(0)))
    return s.found, s.nodes, s.tables


def search_forms(n: int, node_budget: int = DEFAULT_NODE_BUDGET, workers: int = 1) -> list[tuple[int, ...]]:
    """Canonical forms of all groups of order ``n``, sorted."""
    if workers <= 1:
        s = _Search(n, node_budget)
        s.run()
        log.debug("order %d: %d nodes, %d tables, %d classes", n, s.nodes, s.tables, len(s.found))
        return sorted(s.found)
    probe = _Search(n, node_budget)
    pos = probe.first_open(0)
    _, _, vals = probe.candidates(pos, 0)
    found: set = set()
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part, nodes, tables in ex.map(_run_subtree, [(n, node_budget, k) for k in vals]):
            found |= part
    return sorted(found)


def enumerate_tables(n: int, node_budget: int = DEFAULT_NODE_BUDGET, workers: int = 1) -> list[CayleyGroup]:
    forms = search_forms(n, node_budget, workers)
    return [
        CayleyGroup(table_from_canonical(n, f), label=f"Oracle({n},{i + 1})") for i, f in enumerate(forms)
    ]
