"""Theorem checks over parameter families of finite semigroups.

Each check compares a graph-side fact about the cyclic graph with the
semigroup-side statement that is supposed to characterise it, and returns
one :class:`VerifyOutcome` per (theorem, instance).
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Optional

from .cyclic import (
    admissible_shape,
    build_cyclic_graph,
    classify_graph,
    components_are_groups,
    isolated_conditions,
    isolated_vertices,
    regular_condition,
)
from .errors import SemigroupError, TheoremViolation
from .graph import (
    SimpleGraph,
    connected_components,
    max_clique,
    max_independent_set,
    maximal_cliques,
    min_dominating_set,
)
from .green import green_classes, h_class_is_group, is_completely_regular
from .invariants import (
    clique_number_formula,
    clique_number_monogenic,
    clique_witness,
    divisibility_adjacency_check,
    independence_bounds,
    independence_number_monogenic,
    index_class,
    index_lemma_check,
    j2_set,
    kernel_size_formula_check,
    mu_k,
    rees_independence_formula,
    rees_index_lemma_check,
    tau_representatives,
)
from .semigroup import (
    FiniteSemigroup,
    ReesSpec,
    cyclic_group,
    direct_product,
    exponent,
    from_table,
    idempotents,
    is_band,
    is_group,
    left_zero_band,
    members,
    monogenic,
    pi_set,
    rees_matrix,
    s_f_partition,
)

FAMILIES = ("monogenic", "cyclic", "band", "rees-random", "product", "table-enum3")

# Enumerating maximal cliques is exponential; only small instances get it.
MAXIMAL_CLIQUE_LIMIT = 14


@dataclass(frozen=True)
class Instance:
    name: str
    semigroup: FiniteSemigroup
    params: Optional[tuple[int, int]] = None   # (m, r) when built as M(m, r)


@dataclass(frozen=True)
class VerifyOutcome:
    theorem: str
    instance: str
    passed: bool
    witness: Any = None
    diagnostic: bool = False

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failing outcome for {self.theorem} on {self.instance} needs a witness")

    @property
    def counts_as_failure(self) -> bool:
        return not self.passed and not self.diagnostic

    def to_json(self) -> str:
        return json.dumps(
            {
                "theorem": self.theorem,
                "instance": self.instance,
                "passed": self.passed,
                "witness": self.witness,
                "diagnostic": self.diagnostic,
            },
            sort_keys=True,
            default=sorted,
        )


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

def monogenic_family(max_order: int) -> Iterator[Instance]:
    for size in range(1, max_order + 1):
        for m in range(1, size + 1):
            r = size - m + 1
            yield Instance(f"monogenic:{m},{r}", monogenic(m, r), (m, r))


def cyclic_family(max_order: int) -> Iterator[Instance]:
    for n in range(1, max_order + 1):
        yield Instance(f"cyclic:{n}", cyclic_group(n), (1, n))


def band_family(max_order: int) -> Iterator[Instance]:
    for n in range(1, max_order + 1):
        yield Instance(f"leftzero:{n}", left_zero_band(n))


def elementary_abelian_2(k: int) -> FiniteSemigroup:
    g = cyclic_group(2 if k else 1)
    for _ in range(k - 1):
        g = direct_product(g, cyclic_group(2))
    return g


_PRODUCT_BASE = ("cyclic:2", "cyclic:3", "leftzero:2", "monogenic:2,1", "monogenic:2,2", "monogenic:3,1")


def product_family(max_order: int) -> Iterator[Instance]:
    from .specs import build_spec

    k = 1
    while 2 ** k <= max_order:
        yield Instance(f"Z2^{k}", elementary_abelian_2(k))
        k += 1
    built = {name: build_spec(name) for name in _PRODUCT_BASE}
    for a, b in itertools.combinations_with_replacement(_PRODUCT_BASE, 2):
        if built[a].n * built[b].n <= max_order:
            yield Instance(f"product:({a})x({b})", direct_product(built[a], built[b]))


def random_rees_spec(rng: random.Random) -> ReesSpec:
    """Group from {Z1, Z2, Z3}; sandwich entries zero with probability 1/3."""
    group = cyclic_group(rng.choice((1, 2, 3)))
    p, q = rng.randint(1, 3), rng.randint(1, 3)
    while True:
        matrix = [
            [None if rng.random() < 1 / 3 else rng.randrange(group.n) for _ in range(p)]
            for _ in range(q)
        ]
        if all(any(v is not None for v in row) for row in matrix) and all(
            any(row[i] is not None for row in matrix) for i in range(p)
        ):
            return ReesSpec(group, p, q, matrix)


def rees_random_family(seed: int, count: int) -> Iterator[Instance]:
    rng = random.Random(seed)
    for k in range(count):
        spec = random_rees_spec(rng)
        entries = ";".join(",".join("-" if v is None else str(v) for v in row) for row in spec.matrix)
        name = f"rees[seed={seed},#{k}]:Z{spec.group.n},I={spec.p},L={spec.q},P={entries}"
        yield Instance(name, rees_matrix(spec))


def _associative(table, n) -> bool:
    for x in range(n):
        for y in range(n):
            xy = table[x * n + y]
            for z in range(n):
                if table[xy * n + z] != table[x * n + table[y * n + z]]:
                    return False
    return True


def enumerate_tables(max_n: int = 3) -> Iterator[Instance]:
    """Every associative Cayley table on 1..max_n labelled elements."""
    for n in range(1, max_n + 1):
        for flat in itertools.product(range(n), repeat=n * n):
            if _associative(flat, n):
                rows = [list(flat[x * n:(x + 1) * n]) for x in range(n)]
                yield Instance("table:" + "|".join("".join(map(str, r)) for r in rows), from_table(n, rows, verify=False))


def family(name: str, max_order: int = 12, seed: int = 0, count: int = 25) -> Iterator[Instance]:
    if name == "monogenic":
        return monogenic_family(max_order)
    if name == "cyclic":
        return cyclic_family(max_order)
    if name == "band":
        return band_family(max_order)
    if name == "product":
        return product_family(max_order)
    if name == "rees-random":
        return rees_random_family(seed, count)
    if name == "table-enum3":
        return enumerate_tables(min(3, max_order))
    raise SemigroupError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def acceptance_corpus(seed: int = 7, rees_count: int = 25) -> list[Instance]:
    """Order <= 3 tables, M(m,r) up to 12 elements, left-zero bands up to 6,
    Z2^k for k <= 3, and seeded random Rees matrix semigroups."""
    corpus = list(enumerate_tables(3))
    corpus += list(monogenic_family(12))
    corpus += list(band_family(6))
    corpus += [Instance(f"Z2^{k}", elementary_abelian_2(k)) for k in range(1, 4)]
    corpus += list(rees_random_family(seed, rees_count))
    return corpus


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

class Context:
    """Per-instance cache of the graph and the expensive derived data."""

    def __init__(self, inst: Instance, cap: Optional[int] = None):
        self.inst = inst
        self.s = inst.semigroup
        self.cap = cap
        self.g: SimpleGraph = build_cyclic_graph(self.s)
        self.cls = classify_graph(self.g)
        self.green = green_classes(self.s)
        self.pi = pi_set(self.s)
        self.E = idempotents(self.s)

    def outcome(self, theorem: str, passed: bool, witness=None, diagnostic=False) -> VerifyOutcome:
        if not passed and witness is None:
            witness = self.inst.name
        return VerifyOutcome(theorem, self.inst.name, bool(passed), None if passed else witness, diagnostic)


def check_components(c: Context):
    graph_side = sorted(sorted(b) for b in connected_components(c.g))
    semigroup_side = sorted(sorted(b) for b in s_f_partition(c.s).values())
    yield c.outcome("components", graph_side == semigroup_side, {"graph": graph_side, "S_f": semigroup_side})


def check_bipartite(c: Context):
    small = c.pi <= {1, 2}
    ok = c.cls.is_bipartite == c.cls.is_acyclic == small
    yield c.outcome(
        "bipartite",
        ok,
        {"bipartite": c.cls.is_bipartite, "acyclic": c.cls.is_acyclic, "pi": sorted(c.pi), "odd_cycle": c.cls.odd_cycle},
    )


def check_null(c: Context):
    yield c.outcome("null-band", c.cls.is_null == is_band(c.s), {"null": c.cls.is_null, "band": is_band(c.s)})


def check_tree(c: Context):
    rhs = len(c.E) == 1 and c.pi <= {1, 2}
    yield c.outcome("tree", c.cls.is_tree == rhs, {"tree": c.cls.is_tree, "idempotents": len(c.E), "pi": sorted(c.pi)})


def check_group_star(c: Context):
    if not is_group(c.s):
        return
    flags = (exponent(c.s) <= 2, c.cls.is_acyclic, c.cls.is_bipartite, c.cls.is_tree, c.cls.is_star)
    yield c.outcome("group-star", len(set(flags)) == 1, {"exp<=2,acyclic,bipartite,tree,star": flags})


def check_x_x2(c: Context):
    bad = [x for x in range(c.s.n) if c.s.table[x][x] != x and not c.g.has_edge(x, c.s.table[x][x])]
    yield c.outcome("x-adjacent-x2", not bad, bad)


def check_dominance(c: Context):
    gamma = len(min_dominating_set(c.g, c.cap))
    yield c.outcome("dominance", gamma == len(c.E), {"gamma": gamma, "idempotents": len(c.E)})


def check_regular(c: Context):
    rhs = regular_condition(c.s)
    yield c.outcome("regular", c.cls.is_regular == rhs, {"regular": c.cls.is_regular, "condition": rhs})


def check_completely_regular(c: Context):
    lhs = is_completely_regular(c.s, c.green)
    rhs = components_are_groups(c.s)
    yield c.outcome("completely-regular", lhs == rhs, {"completely_regular": lhs, "components_groups": rhs})


def check_h_class(c: Context):
    bad = [f for f in sorted(c.E) if not h_class_is_group(c.s, f, c.green)]
    yield c.outcome("h-class-group", not bad, bad)


def check_clique_formula(c: Context):
    oracle = len(max_clique(c.g, c.cap))
    formula = clique_number_formula(c.s)
    yield c.outcome("clique-formula", oracle == formula, {"formula": formula, "oracle": oracle})


def check_independence_bounds(c: Context):
    alpha = len(max_independent_set(c.g, c.cap))
    lo, hi = independence_bounds(c.s)
    yield c.outcome("independence-bounds", lo <= alpha <= hi, {"lower": lo, "oracle": alpha, "upper": hi})


def check_index_classes(c: Context):
    top = max(p.index for p in c.s.profiles)
    bad = [k for k in range(2, top + 1) if not c.g.is_independent(index_class(c.s, k))]
    yield c.outcome("index-class-independent", not bad, bad)


def check_j2_invariance(c: Context):
    forward = len(j2_set(c.s, tau_representatives(c.s)))
    backward = len(j2_set(c.s, tau_representatives(c.s, reverse=True)))
    yield c.outcome("j2-invariance", forward == backward, {"least": forward, "greatest": backward})


def check_isolated(c: Context):
    graph_side = isolated_vertices(c.g)
    semigroup_side = frozenset(a for a in range(c.s.n) if all(isolated_conditions(c.s, a, c.green)))
    diverging = sorted(graph_side ^ semigroup_side)
    yield c.outcome(
        "isolated",
        not diverging,
        {"diverging": diverging, "conditions": {a: isolated_conditions(c.s, a, c.green) for a in diverging}},
        diagnostic=True,
    )


def check_maximal_clique_containment(c: Context):
    if c.s.n > MAXIMAL_CLIQUE_LIMIT:
        return
    cyc = c.s.cyclic_masks
    bad = []
    for clique in maximal_cliques(c.g):
        m = sum(1 << v for v in clique)
        if not any(cm & m == m for cm in cyc):
            bad.append(sorted(clique))
    yield c.outcome("maximal-clique-containment", not bad, bad)


def check_monogenic(c: Context):
    if c.inst.params is None:
        return
    m, r = c.inst.params
    expected = admissible_shape(m, r)
    yield c.outcome("completeness", c.cls.is_complete == expected, {"m": m, "r": r, "complete": c.cls.is_complete})
    omega = len(max_clique(c.g, c.cap))
    yield c.outcome("clique-monogenic", omega == clique_number_monogenic(m, r),
                    {"m": m, "r": r, "oracle": omega, "formula": clique_number_monogenic(m, r)})
    alpha = len(max_independent_set(c.g, c.cap))
    yield c.outcome("independence-monogenic", alpha == independence_number_monogenic(m, r),
                    {"m": m, "r": r, "oracle": alpha, "formula": independence_number_monogenic(m, r)})
    size = m + r - 1
    bad = [i for i in range(1, size + 1) if not kernel_size_formula_check(c.s, i)]
    yield c.outcome("kernel-size", not bad, {"m": m, "r": r, "i": bad})
    yield from _raising_check(c, "divisibility", lambda: [divisibility_adjacency_check(c.s, i, j)
                                                           for i in range(1, m) for j in range(i + 1, m)])
    yield from _raising_check(c, "index-lemma", lambda: [index_lemma_check(c.s, i) for i in range(1, size + 1)])
    if m > 1:
        bad = []
        for k in range(1, m):
            w = clique_witness(c.s, k)
            if len(w) != mu_k(k, r) or not c.g.is_clique(w):
                bad.append(k)
        yield c.outcome("clique-witness", not bad, {"m": m, "r": r, "k": bad})


def _raising_check(c: Context, theorem: str, fn: Callable[[], Any]):
    try:
        fn()
    except TheoremViolation as exc:
        yield c.outcome(theorem, False, exc.witness)
    else:
        yield c.outcome(theorem, True)


def check_rees(c: Context):
    if c.s.rees is None:
        return
    yield from _raising_check(c, "rees-index-lemma", lambda: rees_index_lemma_check(c.s))
    alpha = len(max_independent_set(c.g, c.cap))
    try:
        formula = rees_independence_formula(c.s)
    except TheoremViolation as exc:
        yield c.outcome("rees-independence", False, exc.witness)
        return
    yield c.outcome("rees-independence", alpha == formula, {"oracle": alpha, "formula": formula})


CHECKS = (
    check_components,
    check_bipartite,
    check_null,
    check_tree,
    check_group_star,
    check_x_x2,
    check_dominance,
    check_regular,
    check_completely_regular,
    check_h_class,
    check_clique_formula,
    check_independence_bounds,
    check_index_classes,
    check_j2_invariance,
    check_isolated,
    check_maximal_clique_containment,
    check_monogenic,
    check_rees,
)


def check_instance(inst: Instance, cap: Optional[int] = None) -> list[VerifyOutcome]:
    c = Context(inst, cap)
    return [o for check in CHECKS for o in check(c)]


def _check_instance_star(args):
    return check_instance(*args)


def run(instances: Iterable[Instance], cap: Optional[int] = None, jobs: int = 1) -> Iterator[VerifyOutcome]:
    """Outcomes in instance order, whatever the worker count."""
    work = ((inst, cap) for inst in instances)
    if jobs <= 1:
        for args in work:
            yield from _check_instance_star(args)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for outcomes in pool.map(_check_instance_star, work, chunksize=4):
            yield from outcomes
