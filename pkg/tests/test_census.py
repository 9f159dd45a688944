from math import gcd

import pytest

from cycgroups import census, count_of_order, cyclic_subgroups, make_elementary_abelian, totient
from cycgroups.numtheory import divisors, prime_divisors
from cycgroups.smallgroups import catalog

from conftest import elements_by_order

CORPUS = [g for n in list(range(1, 17)) + [24, 32] for g in catalog(n, cross_validate=False).groups]


def brute_phi(d):
    return sum(1 for j in range(1, d + 1) if gcd(j, d) == 1)


def counts_from_element_orders(g):
    """n_d = (elements of order d) / phi(d), the census computed without subgroups."""
    per = elements_by_order(g)
    return {d: per.get(d, 0) // brute_phi(d) for d in divisors(g.n)}


# frozen from counts_from_element_orders
EXPECTED = {
    "Z6": {1: 1, 2: 1, 3: 1, 6: 1},
    "S3": {1: 1, 2: 3, 3: 1, 6: 0},
    "Z2xZ4": {1: 1, 2: 3, 4: 2, 8: 0},
    "D8": {1: 1, 2: 5, 4: 1, 8: 0},
    "D12": {1: 1, 2: 7, 3: 1, 4: 0, 6: 1, 12: 0},
    "Z2xD8": {1: 1, 2: 11, 4: 2, 8: 0, 16: 0},
    "M16": {1: 1, 2: 3, 4: 2, 8: 2, 16: 0},
}
TOTALS = {"Z6": 4, "S3": 5, "Z2xZ4": 6, "D8": 7, "D12": 10, "Z2xD8": 14, "M16": 8}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_census_values(named, name):
    g = named[name]
    assert counts_from_element_orders(g) == EXPECTED[name]
    rep = census(g)
    assert dict(rep.rows) == EXPECTED[name]
    assert rep.total_cyclic == TOTALS[name]
    assert rep.deficiency == g.n - TOTALS[name]


def test_cyclic_subgroup_listing(named):
    z6 = cyclic_subgroups(named["Z6"])
    assert [c.order for c in z6] == [1, 2, 3, 6]
    s3 = cyclic_subgroups(named["S3"])
    assert [c.order for c in s3] == [1, 2, 2, 2, 3]
    z24 = cyclic_subgroups(named["Z2xZ4"])
    assert [c.order for c in z24] == [1, 2, 2, 2, 4, 4]
    for c in z24:
        assert c.generator == min(x for x in c.elements if named["Z2xZ4"].cyclic_mask(x) == c.mask)
        assert named["Z2xZ4"].elem_order[c.generator] == c.order
    keys = [(c.order, c.generator) for c in z24]
    assert keys == sorted(keys)


def test_count_of_order(named):
    assert count_of_order(census(named["Z2xZ4"]), 4) == 2
    assert count_of_order(census(named["Z6"]), 5) == 0
    assert count_of_order(census(named["Z2xD8"]), 4) == 2


def test_elementary_abelian_has_no_deficiency():
    for k in range(6):
        assert census(make_elementary_abelian(2, k)).deficiency == 0


def test_json_shape(named):
    js = census(named["Z6"]).to_json()
    assert js == {
        "group": "Z6",
        "order": 6,
        "rows": [{"d": 1, "count": 1}, {"d": 2, "count": 1}, {"d": 3, "count": 1}, {"d": 6, "count": 1}],
        "cyclic_total": 4,
        "deficiency": 2,
    }


@pytest.mark.parametrize("g", CORPUS, ids=lambda g: f"{g.n}-{g.label}")
def test_census_properties(g):
    rep = census(g)
    rows = dict(rep.rows)
    assert list(rows) == divisors(g.n)
    assert sum(rows.values()) == rep.total_cyclic
    assert sum(c * totient(d) for d, c in rows.items()) == g.n
    assert sum(c * (totient(d) - 1) for d, c in rows.items()) == rep.deficiency >= 0
    assert rows == counts_from_element_orders(g)
    # each non-identity element generates exactly one listed cyclic subgroup
    owners = [0] * g.n
    for c in cyclic_subgroups(g):
        for x in c.elements:
            if g.cyclic_mask(x) == c.mask:
                owners[x] += 1
    assert owners == [1] * g.n
    involutive = all(g.mul(x, x) == 0 for x in range(g.n))
    assert (rep.deficiency == 0) == involutive
    for p in prime_divisors(g.n):
        assert rows[p] % p == 1
