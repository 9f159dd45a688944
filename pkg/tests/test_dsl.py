import math

import pytest
from hypothesis import given, strategies as st

from cycgroups import build, build_from_text, isomorphic, make_cyclic, parse_spec, render
from cycgroups.dsl import Atom, Pres, Product, SpecError


def test_parse_examples():
    assert parse_spec("Z(6)") == Atom("Z", (6,))
    assert parse_spec(" Z(2) x D(8) ") == Product(Atom("Z", (2,)), Atom("D", (8,)))
    assert parse_spec("E(2, 2) x Z(3) x S(2)") == Product(Product(Atom("E", (2, 2)), Atom("Z", (3,))), Atom("S", (2,)))
    assert parse_spec("P< a,b | a^4, b^2, b a b a > x Z(2)") == Product(Pres("< a,b | a^4, b^2, b a b a >"), Atom("Z", (2,)))


@pytest.mark.parametrize(
    "text, pos",
    [("Q(12)", 0), ("Z(2) y", 5), ("D(7)", 0), ("E(4,2)", 0), ("Z(", 2), ("W(3)", 0), ("S(5)", 0),
     ("Z(8) x Z(8) x Z(2)", 14), ("E(2)", 0), ("P a", 2), ("P< a | a^ >", 0), ("", 0)],
)
def test_parse_errors(text, pos):
    with pytest.raises(SpecError) as e:
        parse_spec(text)
    assert e.value.pos == pos


@pytest.mark.parametrize(
    "text, n, abelian",
    [("Z(1)", 1, True), ("D(4)", 4, True), ("D(12)", 12, False), ("Q(16)", 16, False),
     ("SD(16)", 16, False), ("M(16)", 16, False), ("E(3,2)", 9, True), ("S(4)", 24, False),
     ("Z(2) x Q(8)", 16, False), ("E(2,0)", 1, True)],
)
def test_build_examples(text, n, abelian):
    g = build_from_text(text)
    assert g.n == n and g.is_abelian == abelian
    assert g.label == text


def test_named_families_distinct():
    q, sd, d, m = (build(f"{k}(16)") for k in ("Q", "SD", "D", "M"))
    assert q.order_counts[2] == 1
    assert sd.order_counts[2] == 5 and d.order_counts[2] == 9 and m.order_counts[2] == 3


atoms = st.one_of(
    st.integers(1, 12).map(lambda n: f"Z({n})"),
    st.sampled_from([4, 6, 8, 10, 12]).map(lambda n: f"D({n})"),
    st.sampled_from(["Q(8)", "S(3)", "E(2,2)", "E(3,1)", "M(16)", "SD(16)", "P< a | a^3 >"]),
)


@given(st.lists(atoms, min_size=1, max_size=3))
def test_render_round_trip(parts):
    text = " x ".join(parts)
    try:
        spec = parse_spec(text)
    except SpecError:
        return  # product over the order cap
    assert parse_spec(render(spec)) == spec


@given(st.integers(1, 64), st.integers(1, 64))
def test_coprime_product_is_cyclic(a, b):
    if a * b > 64:
        with pytest.raises(SpecError):
            parse_spec(f"Z({a}) x Z({b})")
        return
    g = build(f"Z({a}) x Z({b})")
    assert bool(isomorphic(g, make_cyclic(a * b))) == (math.gcd(a, b) == 1)
