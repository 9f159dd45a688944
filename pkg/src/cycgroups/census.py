"""Cyclic subgroups of a finite group, counted per divisor of the order."""

from __future__ import annotations

from dataclasses import dataclass

from .group import CayleyGroup, CyclicSubgroup, Subgroup
from .numtheory import divisors, totient


@dataclass(frozen=True)
class CensusReport:
    group_label: str
    n: int
    rows: tuple[tuple[int, int], ...]  # (divisor d, number of cyclic subgroups of order d)
    total_cyclic: int
    deficiency: int

    def count(self, d: int) -> int:
        return count_of_order(self, d)

    def excess_contributions(self) -> dict[int, int]:
        """Nonzero terms ``n_d * (phi(d) - 1)``, keyed by ``d``."""
        out = {}
        for d, c in self.rows:
            v = c * (totient(d) - 1)
            if v:
                out[d] = v
        return out

    def to_json(self) -> dict:
        return {
            "group": self.group_label,
            "order": self.n,
            "rows": [{"d": d, "count": c} for d, c in self.rows],
            "cyclic_total": self.total_cyclic,
            "deficiency": self.deficiency,
        }


def cyclic_subgroups(g: CayleyGroup) -> list[CyclicSubgroup]:
    """Every cyclic subgroup once, sorted by (order, smallest generator)."""
    seen = {}
    for x in range(g.n):
        m = g.cyclic_mask(x)
        # x runs upward, so the first hit is the minimal generator
        if m not in seen:
            seen[m] = x
    out = [CyclicSubgroup(Subgroup(g, m), x) for m, x in seen.items()]
    out.sort(key=lambda c: (c.order, c.generator))
    return out


def census(g: CayleyGroup) -> CensusReport:
    counts: dict[int, int] = {}
    for c in cyclic_subgroups(g):
        counts[c.order] = counts.get(c.order, 0) + 1
    rows = tuple((d, counts.pop(d, 0)) for d in divisors(g.n))
    assert not counts, f"cyclic subgroup orders not dividing {g.n}: {sorted(counts)}"
    total = sum(c for _, c in rows)
    deficiency = g.n - total
    assert rows[0] == (1, 1)
    assert sum(c * totient(d) for d, c in rows) == g.n, "sum n_d phi(d) != |G|"
    assert sum(c * (totient(d) - 1) for d, c in rows) == deficiency
    return CensusReport(g.label, g.n, rows, total, deficiency)


def count_of_order(report: CensusReport, d: int) -> int:
    """Number of cyclic subgroups of order ``d`` (0 when ``d`` does not divide |G|)."""
    return dict(report.rows).get(d, 0)
