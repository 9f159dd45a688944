"""All groups of small order, by exhaustive search or from bundled recipes."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..dsl import build_from_text
from ..group import CayleyGroup
from ..presentations import DEFAULT_MAX_COSETS
from ..structure import isomorphic
from .oracle import DEFAULT_NODE_BUDGET, NodeBudgetExceeded, canonical_form, enumerate_tables

ORACLE_MAX = 16
ORACLE_MANDATORY = 12
CATALOG_ORDERS = frozenset(range(1, 17)) | {24, 32}
# orders whose bundled recipes cover every isomorphism class
EXHAUSTIVE_ORDERS = frozenset(range(1, 17)) | {24}


class DuplicateClassError(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationResult:
    order: int
    groups: tuple[CayleyGroup, ...]
    method: str  # "oracle-backtracking" | "catalog"
    exhaustive: bool = True

    def __len__(self):
        return len(self.groups)

    @property
    def names(self) -> list[str]:
        return [g.label for g in self.groups]


@dataclass(frozen=True)
class Recipe:
    order: int
    name: str
    spec: str


def load_recipes(order: int | None = None) -> list[Recipe]:
    text = resources.files(__package__).parent.joinpath("data", "catalog.tsv").read_text()
    out = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        o, name, spec = line.split("\t")
        if order is None or int(o) == order:
            out.append(Recipe(int(o), name, spec))
    return out


def check_pairwise_distinct(groups) -> None:
    for i, g in enumerate(groups):
        for h in groups[:i]:
            if isomorphic(g, h):
                raise DuplicateClassError(f"{g.label} and {h.label} are isomorphic")


_oracle_cache: dict[int, EnumerationResult] = {}
_catalog_cache: dict[int, EnumerationResult] = {}


def enumerate_oracle(n: int, node_budget: int = DEFAULT_NODE_BUDGET, workers: int = 1) -> EnumerationResult:
    """
    Every group of order ``n`` up to isomorphism, from the exhaustive table
    search. Orders up to 12 are routine; 13 to 16 are bounded by ``node_budget``.
    """
    if not 1 <= n <= ORACLE_MAX:
        raise ValueError(f"oracle supports orders 1..{ORACLE_MAX}, got {n}")
    if n not in _oracle_cache:
        groups = tuple(enumerate_tables(n, node_budget, workers))
        check_pairwise_distinct(groups)
        _oracle_cache[n] = EnumerationResult(n, groups, "oracle-backtracking")
    return _oracle_cache[n]


def catalog(n: int, max_cosets: int = DEFAULT_MAX_COSETS, cross_validate: bool = True) -> EnumerationResult:
    """
    Groups of order ``n`` built from the bundled recipes. For ``n <= 12`` the
    list is matched one-to-one against the exhaustive search unless
    ``cross_validate`` is off. Order 32 holds only a partial selection.
    """
    if n not in CATALOG_ORDERS:
        raise ValueError(f"no catalog for order {n}")
    if n not in _catalog_cache:
        groups = []
        for r in load_recipes(n):
            g = build_from_text(r.spec, label=r.name, max_cosets=max_cosets)
            g.check()
            if g.n != n:
                raise DuplicateClassError(f"recipe {r.name} has order {g.n}, expected {n}")
            groups.append(g)
        check_pairwise_distinct(groups)
        _catalog_cache[n] = EnumerationResult(n, tuple(groups), "catalog", n in EXHAUSTIVE_ORDERS)
    result = _catalog_cache[n]
    if cross_validate and n <= ORACLE_MANDATORY:
        match_classes(result, enumerate_oracle(n))
    return result


def match_classes(a: EnumerationResult, b: EnumerationResult) -> list[tuple[int, int]]:
    """Bijection between two class lists by isomorphism; raises if none exists."""
    if len(a) != len(b):
        raise AssertionError(f"order {a.order}: {a.method} has {len(a)} classes, {b.method} has {len(b)}")
    pairs = []
    taken = set()
    for i, g in enumerate(a.groups):
        js = [j for j, h in enumerate(b.groups) if j not in taken and isomorphic(g, h)]
        if len(js) != 1:
            raise AssertionError(f"order {a.order}: {g.label} matches {len(js)} classes")
        taken.add(js[0])
        pairs.append((i, js[0]))
    return pairs


def name_of(g: CayleyGroup) -> str:
    """Catalog name of the class of ``g``, or its own label when not catalogued."""
    if g.n in CATALOG_ORDERS:
        for h in catalog(g.n, cross_validate=False).groups:
            if isomorphic(g, h):
                return h.label
    return g.label


def all_groups(max_order: int, node_budget: int = DEFAULT_NODE_BUDGET, workers: int = 1) -> list[CayleyGroup]:
    """
    One group per isomorphism class for every order up to ``max_order`` (at
    most 16): the exhaustive search below 13, the catalog from 13 to 16.
    """
    if not 1 <= max_order <= 16:
        raise ValueError(f"exhaustive data only covers orders 1..16, got {max_order}")
    out = []
    for n in range(1, max_order + 1):
        if n <= ORACLE_MANDATORY:
            res = enumerate_oracle(n, node_budget, workers)
        else:
            res = catalog(n)
        out.extend(res.groups)
    return out


__all__ = [
    "EnumerationResult",
    "NodeBudgetExceeded",
    "DuplicateClassError",
    "enumerate_oracle",
    "catalog",
    "match_classes",
    "all_groups",
    "name_of",
    "canonical_form",
    "load_recipes",
]
