"""The cyclic graph of a semigroup: x ~ y iff <x, y> is monogenic."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .errors import SameVertex
from .graph import (
    SimpleGraph,
    component_masks,
    min_dominating_set,
    odd_cycle,
)
from .green import GreenClasses, green_classes
from .semigroup import (
    FiniteSemigroup,
    check_element,
    idempotents,
    is_group_subset,
    is_monogenic_subset,
    is_subsemigroup,
    members,
    s_f_partition,
)


def _adjacent(s: FiniteSemigroup, x: int, y: int) -> bool:
    cyc = s.cyclic_masks
    if (cyc[x] >> y) & 1 or (cyc[y] >> x) & 1:
        return True
    # <x,y> = <z> forces x, y in <z> and z in <x,y>.
    candidates = s.over_masks[x] & s.over_masks[y]
    if not candidates:
        return False
    return bool(candidates & s.pair_closure(x, y))


def adjacent(s: FiniteSemigroup, x: int, y: int) -> bool:
    check_element(s, x)
    check_element(s, y)
    if x == y:
        raise SameVertex(f"the cyclic graph has no loops (x = y = {x})")
    return _adjacent(s, x, y)


def adjacent_by_definition(s: FiniteSemigroup, x: int, y: int) -> bool:
    """Literal reading: close {x, y} and search it for a single generator."""
    if x == y:
        raise SameVertex(f"the cyclic graph has no loops (x = y = {x})")
    return is_monogenic_subset(s, members(s.pair_closure(x, y))) is not None


def build_cyclic_graph(s: FiniteSemigroup) -> SimpleGraph:
    n = s.n
    adj = [0] * n
    for x in range(n):
        for y in range(x + 1, n):
            if _adjacent(s, x, y):
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    return SimpleGraph(n, tuple(adj))


@dataclass(frozen=True)
class Classification:
    is_null: bool
    is_complete: bool
    is_bipartite: bool
    is_acyclic: bool
    is_tree: bool
    is_regular: bool
    is_star: bool
    component_count: int
    degrees: tuple[int, ...]
    odd_cycle: Optional[tuple[int, ...]] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["degrees"] = list(self.degrees)
        d["odd_cycle"] = None if self.odd_cycle is None else list(self.odd_cycle)
        return d


def classify_graph(g: SimpleGraph) -> Classification:
    n = g.n
    degrees = tuple(g.degrees())
    edges = sum(degrees) // 2
    comps = len(component_masks(g))
    cycle = odd_cycle(g)
    acyclic = edges == n - comps
    tree = acyclic and comps == 1
    # K1 is taken as the degenerate star K_{1,0}.
    star = tree and (n == 1 or max(degrees) == n - 1)
    return Classification(
        is_null=edges == 0,
        is_complete=edges == n * (n - 1) // 2,
        is_bipartite=cycle is None,
        is_acyclic=acyclic,
        is_tree=tree,
        is_regular=len(set(degrees)) == 1,
        is_star=star,
        component_count=comps,
        degrees=degrees,
        odd_cycle=None if cycle is None else tuple(cycle),
    )


def classify(s: FiniteSemigroup, g: Optional[SimpleGraph] = None) -> Classification:
    return classify_graph(g if g is not None else build_cyclic_graph(s))


def isolated_vertices(g: SimpleGraph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.adj[v] == 0)


def component_of(s: FiniteSemigroup, a: int) -> frozenset[int]:
    """Semigroup-side component ``C(a)``: elements sharing a's idempotent power."""
    f = s.profiles[a].idempotent_power
    return frozenset(x for x in range(s.n) if s.profiles[x].idempotent_power == f)


def isolated_conditions(
    s: FiniteSemigroup, a: int, classes: Optional[GreenClasses] = None
) -> tuple[bool, bool, bool]:
    """(a idempotent, H_a = {a}, every x in C(a) has index 1)."""
    classes = classes or green_classes(s)
    return (
        s.table[a][a] == a,
        classes.block_of("H", a) == frozenset({a}),
        all(s.profiles[x].index == 1 for x in component_of(s, a)),
    )


def isolated_characterization(
    s: FiniteSemigroup, a: int, classes: Optional[GreenClasses] = None
) -> bool:
    return all(isolated_conditions(s, a, classes))


def dominance_equals_idempotents(
    s: FiniteSemigroup, g: Optional[SimpleGraph] = None, cap: Optional[int] = None
) -> bool:
    g = g if g is not None else build_cyclic_graph(s)
    return len(min_dominating_set(g, cap)) == len(idempotents(s))


def admissible_shape(index: int, period: int) -> bool:
    """Monogenic shapes whose cyclic graph is complete."""
    return index in (1, 2) or (index == 3 and period % 2 == 1)


def regular_condition(s: FiniteSemigroup) -> bool:
    """Semigroup side of the regular-graph characterisation."""
    blocks = list(s_f_partition(s).values())
    if len({len(b) for b in blocks}) != 1:
        return False
    for b in blocks:
        if not is_subsemigroup(s, b):
            return False
        z = is_monogenic_subset(s, b)
        if z is None:
            return False
        p = s.profiles[z]
        if not admissible_shape(p.index, p.period):
            return False
    return True


def components_are_groups(s: FiniteSemigroup) -> bool:
    return all(is_subsemigroup(s, b) and is_group_subset(s, b) for b in s_f_partition(s).values())
