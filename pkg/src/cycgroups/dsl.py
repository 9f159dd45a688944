"""
A small language for naming groups.

    Z(2) x D(8)          direct product, ``x`` associates to the left
    E(2,3)               elementary abelian (Z_2)^3
    P< a,b | a^4, b^2, b a b a >

Atoms: ``Z(n)`` cyclic, ``D(n)`` dihedral of order n, ``Q(n)`` generalized
quaternion, ``M(n)`` modular 2-group, ``SD(n)`` semidihedral, ``E(p,k)``
elementary abelian, ``S(n)`` symmetric, ``P<...>`` presentation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .group import (
    MAX_ORDER,
    CayleyGroup,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_elementary_abelian,
    make_modular_2group,
    make_symmetric,
)
from .numtheory import is_prime
from .presentations import DEFAULT_MAX_COSETS, parse_presentation, realize


class SpecError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Atom:
    kind: str
    params: tuple[int, ...]


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"


@dataclass(frozen=True)
class Pres:
    text: str


GroupSpec = Union[Atom, Product, Pres]


def _order_Z(n):
    if n < 1:
        return "Z(n) needs n >= 1"
    return n


def _order_D(n):
    if n < 4 or n % 2:
        return "D(n) needs even n >= 4"
    return n


def _order_2power(kind, allowed):
    def check(n):
        if n not in allowed:
            return f"{kind}(n) needs n in {sorted(allowed)}"
        return n

    return check


def _order_E(p, k):
    if not is_prime(p):
        return "E(p,k) needs p prime"
    if k < 0:
        return "E(p,k) needs k >= 0"
    if p**k > MAX_ORDER:
        return f"E(p,k) order exceeds {MAX_ORDER}"
    return p**k


def _order_S(n):
    if not 1 <= n <= 4:
        return "S(n) needs 1 <= n <= 4"
    return [1, 1, 2, 6, 24][n]


# kind -> (arity, order-or-error-message function)
ATOMS = {
    "Z": (1, _order_Z),
    "D": (1, _order_D),
    "Q": (1, _order_2power("Q", {8, 16, 32})),
    "M": (1, _order_2power("M", {16, 32})),
    "SD": (1, _order_2power("SD", {16, 32})),
    "E": (2, _order_E),
    "S": (1, _order_S),
}

_NAME = re.compile(r"[A-Za-z]+")
_INT = re.compile(r"-?\d+")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def error(self, msg, pos=None):
        return SpecError(msg, self.pos if pos is None else pos)

    def expect(self, ch):
        self.ws()
        if not self.text.startswith(ch, self.pos):
            found = self.text[self.pos : self.pos + 1] or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += len(ch)

    def spec(self):
        node, order = self.atom()
        while True:
            self.ws()
            if self.pos >= len(self.text):
                return node, order
            if self.text[self.pos] != "x":
                raise self.error(f"expected 'x' or end of input, found {self.text[self.pos]!r}")
            self.pos += 1
            self.ws()
            start = self.pos
            rhs, o = self.atom()
            node = Product(node, rhs)
            if order is not None and o is not None:
                order *= o
                if order > MAX_ORDER:
                    raise self.error(f"group order {order} exceeds {MAX_ORDER}", start)

    def atom(self):
        self.ws()
        start = self.pos
        m = _NAME.match(self.text, self.pos)
        if not m:
            found = self.text[self.pos : self.pos + 1] or "end of input"
            raise self.error(f"expected a group atom, found {found!r}")
        name = m.group()
        if name == "P":
            self.pos = m.end()
            self.ws()
            if not self.text.startswith("<", self.pos):
                raise self.error("expected '<' after P")
            end = self.text.find(">", self.pos)
            if end < 0:
                raise self.error("unterminated presentation")
            text = self.text[self.pos : end + 1]
            try:
                parse_presentation(text)
            except ValueError as e:
                raise self.error(f"bad presentation: {e}", start) from None
            self.pos = end + 1
            return Pres(text), None
        if name not in ATOMS:
            raise self.error(f"unknown atom {name!r}", start)
        self.pos = m.end()
        self.expect("(")
        params = [self.integer()]
        while True:
            self.ws()
            if self.text.startswith(",", self.pos):
                self.pos += 1
                params.append(self.integer())
            else:
                break
        self.expect(")")
        arity, order_of = ATOMS[name]
        if len(params) != arity:
            raise self.error(f"{name} takes {arity} parameter(s), got {len(params)}", start)
        order = order_of(*params)
        if isinstance(order, str):
            raise self.error(order, start)
        if order > MAX_ORDER:
            raise self.error(f"group order {order} exceeds {MAX_ORDER}", start)
        return Atom(name, tuple(params)), order

    def integer(self):
        self.ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())


def parse_spec(text: str) -> GroupSpec:
    return _Parser(text).spec()[0]


def render(spec: GroupSpec) -> str:
    if isinstance(spec, Atom):
        return f"{spec.kind}({','.join(map(str, spec.params))})"
    if isinstance(spec, Pres):
        return "P" + spec.text
    return f"{render(spec.left)} x {render(spec.right)}"


def quaternion_presentation(n: int) -> str:
    return f"< a,b | a^{n // 2}, b^2 = a^{n // 4}, b^-1 a b a >"


def semidihedral_presentation(n: int) -> str:
    return f"< a,b | a^{n // 2}, b^2, b^-1 a b = a^{n // 4 - 1} >"


def _build_atom(a: Atom, max_cosets: int) -> CayleyGroup:
    k, p = a.kind, a.params
    if k == "Z":
        return make_cyclic(p[0])
    if k == "D":
        return make_dihedral(p[0])
    if k == "E":
        return make_elementary_abelian(*p)
    if k == "S":
        return make_symmetric(p[0])
    if k == "M":
        return make_modular_2group(p[0].bit_length() - 1)
    if k == "Q":
        return realize(quaternion_presentation(p[0]), max_cosets, label=f"Q{p[0]}")
    if k == "SD":
        return realize(semidihedral_presentation(p[0]), max_cosets, label=f"SD{p[0]}")
    raise ValueError(f"unknown atom {k!r}")


def build(spec: GroupSpec | str, max_cosets: int = DEFAULT_MAX_COSETS) -> CayleyGroup:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(spec, Atom):
        return _build_atom(spec, max_cosets)
    if isinstance(spec, Pres):
        return realize(spec.text, max_cosets, label="P" + spec.text)
    return direct_product(build(spec.left, max_cosets), build(spec.right, max_cosets))


def build_from_text(text: str, label: str | None = None, max_cosets: int = DEFAULT_MAX_COSETS) -> CayleyGroup:
    g = build(parse_spec(text), max_cosets)
    g.label = label or text.strip()
    return g
