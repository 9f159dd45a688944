"""
Executable checks of the classification of groups by the number of cyclic
subgroups, and of each computational fact its proof relies on.

Each ``verify_*`` function returns a ``VerificationReport`` listing every
group it looked at, either as a witness (consistent with the claim) or as a
failure (a counterexample).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .census import census, count_of_order, cyclic_subgroups
from .dsl import build_from_text
from .group import MAX_ORDER, CayleyGroup, OrderCapExceeded, direct_product, make_cyclic, make_elementary_abelian
from .numtheory import divisors, prime_divisors, totient
from .smallgroups import ORACLE_MANDATORY, all_groups, catalog, name_of
from .structure import has_cyclic_of_order, isomorphic, normal_core, quotient_order_divides, sylow


@dataclass
class VerificationReport:
    claim_id: str
    scope: str
    witnesses: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "claim": self.claim_id,
            "scope": self.scope,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "failures": self.failures,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


# expected classes per deficiency, as group-DSL recipes
EXPECTED = {
    1: [("Z3", "Z(3)"), ("Z4", "Z(4)"), ("S3", "S(3)"), ("D8", "D(8)")],
    2: [("Z6", "Z(6)"), ("Z2xZ4", "Z(2) x Z(4)"), ("D12", "D(12)"), ("Z2xD8", "Z(2) x D(8)")],
}


def expected_groups(k: int, max_order: int) -> list[CayleyGroup]:
    if k == 0:
        out = []
        r = 0
        while 2**r <= max_order:
            out.append(make_elementary_abelian(2, r))
            out[-1].label = "1" if r == 0 else ("Z2" if r == 1 else f"Z2^{r}")
            r += 1
        return out
    if k not in EXPECTED:
        raise ValueError(f"no classification recorded for deficiency {k}")
    groups = [build_from_text(spec, label=name) for name, spec in EXPECTED[k]]
    return [g for g in groups if g.n <= max_order]


def _scope(max_order: int) -> str:
    hi = min(max_order, ORACLE_MANDATORY)
    s = f"every isomorphism class of order 1..{max_order}: exhaustive search for 1..{hi}"
    if max_order > ORACLE_MANDATORY:
        s += f", bundled catalog for {ORACLE_MANDATORY + 1}..{max_order}"
    return s


def _describe(g: CayleyGroup) -> str:
    name = name_of(g)
    return name if name == g.label else f"{name} [{g.label}]"


def verify_deficiency_classification(k: int, max_order: int = 16, node_budget: int | None = None, workers: int = 1):
    """Groups of order <= ``max_order`` with ``|G| - |C(G)| == k`` are exactly the expected list."""
    kwargs = {"workers": workers}
    if node_budget is not None:
        kwargs["node_budget"] = node_budget
    groups = all_groups(max_order, **kwargs)
    expected = expected_groups(k, max_order)
    rep = VerificationReport(f"deficiency-{k}-classification", _scope(max_order))
    hit = [0] * len(expected)
    for g in groups:
        c = census(g)
        match = None
        for i, e in enumerate(expected):
            if isomorphic(g, e):
                match = i
                break
        entry = {"group": _describe(g), "order": g.n, "cyclic_total": c.total_cyclic, "deficiency": c.deficiency}
        if match is not None:
            hit[match] += 1
            entry["matches"] = expected[match].label
        if (c.deficiency == k) == (match is not None):
            rep.witnesses.append(entry)
        else:
            entry["reason"] = "unexpected group with this deficiency" if match is None else "expected group has other deficiency"
            rep.failures.append(entry)
    for e, h in zip(expected, hit):
        if h != 1:
            rep.failures.append({"group": e.label, "reason": f"expected class found {h} times in the scan"})
    return rep


def verify_case1_families(m: int) -> VerificationReport:
    """
    The order-2^m candidates with exactly two cyclic subgroups of order 4:
    at m = 5 all have an element of order 8, at m = 4 only Z2 x D8 has
    deficiency 2.
    """
    if m == 4:
        names = ["M16", "Z2xZ8", "Z2xD8"]
    elif m == 5:
        names = ["M32", "Z2xZ16", "Z8.Z8", "Z2xD16", "(Z8xZ2).Z2"]
    else:
        raise ValueError("case 1 families are recorded for m = 4 and m = 5 only")
    cat = {g.label: g for g in catalog(2**m).groups}
    rep = VerificationReport(f"case1-families-m{m}", f"recipes {', '.join(names)} realized at order {2**m}")
    for name in names:
        g = cat[name]
        c = census(g)
        measured = {
            "group": name,
            "order": g.n,
            "cyclic_of_order_4": count_of_order(c, 4),
            "has_cyclic_of_order_8": has_cyclic_of_order(g, 8),
            "deficiency": c.deficiency,
        }
        problems = []
        if g.n != 2**m:
            problems.append(f"order {g.n} != {2**m}")
        if count_of_order(c, 4) != 2:
            problems.append("not exactly two cyclic subgroups of order 4")
        if m == 5:
            if not has_cyclic_of_order(g, 8):
                problems.append("no cyclic subgroup of order 8")
            if c.deficiency == 2:
                problems.append("deficiency 2")
        elif (c.deficiency == 2) != (name == "Z2xD8"):
            problems.append("deficiency 2 should single out Z2xD8")
        if problems:
            measured["reason"] = "; ".join(problems)
            rep.failures.append(measured)
        else:
            rep.witnesses.append(measured)
    return rep


def verify_case2_family(max_m: int) -> VerificationReport:
    """Z2^m x Z3 has deficiency 2 only for m = 1, and several cyclic subgroups of order 6 from m = 3."""
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    if 3 * 2**max_m > MAX_ORDER:
        raise OrderCapExceeded(f"Z2^{max_m} x Z3 exceeds order {MAX_ORDER}")
    rep = VerificationReport("case2-family", f"Z2^m x Z3 for m = 1..{max_m}")
    for m in range(1, max_m + 1):
        g = direct_product(make_elementary_abelian(2, m), make_cyclic(3))
        c = census(g)
        n6 = count_of_order(c, 6)
        measured = {"group": f"Z2^{m}xZ3", "m": m, "deficiency": c.deficiency, "cyclic_of_order_6": n6}
        problems = []
        if (c.deficiency == 2) != (m == 1):
            problems.append("deficiency 2 must hold exactly when m = 1")
        if m >= 3 and n6 <= 1:
            problems.append("expected more than one cyclic subgroup of order 6")
        if problems:
            measured["reason"] = "; ".join(problems)
            rep.failures.append(measured)
        else:
            rep.witnesses.append(measured)
    return rep


def verify_sylow_and_core_claims() -> VerificationReport:
    rep = VerificationReport("sylow-core", "S3, D12 and Z6")
    for name, spec in [("S3", "S(3)"), ("D12", "D(12)"), ("Z6", "Z(6)")]:
        g = build_from_text(spec, label=name)
        s2 = sylow(g, 2)
        m = s2.pk.bit_length() - 1
        core = normal_core(g, s2.subgroups[0])
        measured = {
            "group": name,
            "sylow2_count": s2.count,
            "sylow2_order": s2.pk,
            "core_order": core.order,
            "quotient_divides_6": quotient_order_divides(g, core, 6),
            "has_cyclic_of_order_6": has_cyclic_of_order(g, 6),
        }
        problems = []
        if s2.count not in (1, 3):
            problems.append("n_2 not in {1, 3}")
        if name == "D12":
            if s2.count != 3:
                problems.append("n_2 != 3")
            if core.order != 2 ** (m - 1):
                problems.append(f"core order {core.order} != 2^(m-1) = {2 ** (m - 1)}")
            if not measured["quotient_divides_6"]:
                problems.append("|G/core| does not divide 6")
        elif name == "S3":
            if s2.count != 3:
                problems.append("n_2 != 3")
            if measured["has_cyclic_of_order_6"]:
                problems.append("S3 has an element of order 6")
        elif s2.count != 1:
            problems.append("abelian group with several Sylow 2-subgroups")
        if problems:
            measured["reason"] = "; ".join(problems)
            rep.failures.append(measured)
        else:
            rep.witnesses.append(measured)
    return rep


def identity_problems(g: CayleyGroup) -> tuple[dict, list[str]]:
    """Independent recount of the census identities and Sylow congruences for one group."""
    subs = cyclic_subgroups(g)
    counts = {d: 0 for d in divisors(g.n)}
    for c in subs:
        counts[c.order] += 1
    elems = {d: 0 for d in divisors(g.n)}
    for o in g.elem_order:
        elems[o] += 1
    problems = []
    total = len(subs)
    deficiency = g.n - total
    if sum(c * totient(d) for d, c in counts.items()) != g.n:
        problems.append("sum n_d phi(d) != |G|")
    if sum(c * (totient(d) - 1) for d, c in counts.items()) != deficiency:
        problems.append("sum n_d (phi(d) - 1) != deficiency")
    for d in counts:
        if elems[d] != counts[d] * totient(d):
            problems.append(f"elements of order {d} != n_{d} * phi({d})")
    sylows = {}
    for p in prime_divisors(g.n):
        if counts[p] % p != 1:
            problems.append(f"cyclic subgroups of order {p} not 1 mod {p}")
        s = sylow(g, p)
        sylows[str(p)] = s.count
        if s.count % p != 1 or (g.n // s.pk) % s.count:
            problems.append(f"Sylow {p} count {s.count} breaks the congruences")
    if deficiency == 2:
        shape = sorted(v for v in (counts[d] * (totient(d) - 1) for d in counts) if v)
        if shape not in ([2], [1, 1]):
            problems.append(f"deficiency-2 excess terms {shape} fit neither case")
    measured = {
        "group": g.label,
        "order": g.n,
        "cyclic_total": total,
        "deficiency": deficiency,
        "sylow_counts": sylows,
    }
    return measured, problems


def verify_identities(max_order: int = 12, node_budget: int | None = None, workers: int = 1) -> VerificationReport:
    kwargs = {"workers": workers}
    if node_budget is not None:
        kwargs["node_budget"] = node_budget
    groups = all_groups(max_order, **kwargs)
    rep = VerificationReport("census-identities", _scope(max_order) + f" ({len(groups)} classes)")
    for g in groups:
        measured, problems = identity_problems(g)
        if problems:
            measured["reason"] = "; ".join(problems)
            rep.failures.append(measured)
        else:
            rep.witnesses.append(measured)
    return rep
