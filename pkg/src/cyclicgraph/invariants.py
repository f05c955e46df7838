"""Closed-form clique and independence numbers of cyclic graphs, and the
maximal-subsemigroup bookkeeping they are built from."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .cyclic import Classification, adjacent, build_cyclic_graph, classify_graph
from .errors import InvalidK, InvalidParams, NotReesConstructed, OutOfRange, TheoremViolation
from .graph import SimpleGraph, max_clique, max_independent_set, min_dominating_set
from .semigroup import FiniteSemigroup, idempotents, members


# ---------------------------------------------------------------------------
# Pure arithmetic
# ---------------------------------------------------------------------------

def nu(k: int) -> int:
    """Number of prime factors of k counted with multiplicity."""
    if k < 2:
        raise InvalidK(f"nu(k) needs k >= 2, got {k}")
    count, p = 0, 2
    while p * p <= k:
        while k % p == 0:
            k //= p
            count += 1
        p += 1
    return count + (k > 1)


def mu_k(k: int, r: int) -> int:
    """Size of the largest clique whose top non-group power of a is a^k."""
    if k < 1 or r < 1:
        raise InvalidParams(f"mu_k needs k, r >= 1, got k={k}, r={r}")
    if k == 1:
        return 1 + r
    return 1 + nu(k) + r // gcd(r, k)


def clique_number_monogenic(m: int, r: int) -> int:
    if m < 1 or r < 1:
        raise InvalidParams(f"need m, r >= 1, got m={m}, r={r}")
    if m == 1:
        return r
    return max(mu_k(k, r) for k in range(1, m))


def independence_number_monogenic(m: int, r: int) -> int:
    if m < 1 or r < 1:
        raise InvalidParams(f"need m, r >= 1, got m={m}, r={r}")
    if m == 1:
        return 1
    upper_half = range((m + 1) // 2, m)
    if all(gcd(i, r) > 1 for i in upper_half):
        return m // 2 + 1
    return m // 2


# ---------------------------------------------------------------------------
# Monogenic-semigroup lemmas, checked against the table
# ---------------------------------------------------------------------------

def monogenic_generator(s: FiniteSemigroup) -> int:
    """An element generating all of S, preferring element 0."""
    full = s.full_mask
    if s.cyclic_masks[0] == full:
        return 0
    for z in range(1, s.n):
        if s.cyclic_masks[z] == full:
            return z
    raise InvalidParams("semigroup is not monogenic")


def _monogenic_data(s: FiniteSemigroup):
    a = monogenic_generator(s)
    prof = s.profiles[a]
    return a, prof, prof.index, prof.period


def kernel_size_formula_check(s: FiniteSemigroup, i: int) -> bool:
    a, prof, m, r = _monogenic_data(s)
    if not 1 <= i <= m + r - 1:
        raise OutOfRange(f"need 1 <= i <= {m + r - 1}, got {i}")
    ai = prof.power(i)
    kernel_ai = s.profiles[ai].kernel
    g = (-m) % r
    via_generator = frozenset(members(s.cyclic_masks[prof.power(m + g + i)]))
    via_intersection = frozenset(members(s.cyclic_masks[ai])) & prof.kernel
    return (
        len(kernel_ai) == r // gcd(i, r)
        and kernel_ai == via_intersection
        and kernel_ai == via_generator
    )


def divisibility_adjacency_check(s: FiniteSemigroup, i: int, j: int) -> bool:
    a, prof, m, r = _monogenic_data(s)
    if m <= 1 or not 1 <= i < j < m:
        raise OutOfRange(f"need 1 <= i < j < m = {m}, got i={i}, j={j}")
    ai, aj = prof.power(i), prof.power(j)
    joined = adjacent(s, ai, aj)
    contained = bool((s.cyclic_masks[ai] >> aj) & 1)
    divides = j % i == 0
    if not joined == contained == divides:
        raise TheoremViolation(
            "adjacency, membership and divisibility disagree",
            {"m": m, "r": r, "i": i, "j": j, "adjacent": joined, "member": contained, "divides": divides},
        )
    return divides


def index_lemma_check(s: FiniteSemigroup, i: int) -> int:
    a, prof, m, r = _monogenic_data(s)
    if not 1 <= i <= m + r - 1:
        raise OutOfRange(f"need 1 <= i <= {m + r - 1}, got {i}")
    idx = s.profiles[prof.power(i)].index
    if (idx == 1) != (i >= m):
        raise TheoremViolation("index 1 iff i >= m fails", {"m": m, "r": r, "i": i, "index": idx})
    if (idx == 2) != ((m + 1) // 2 <= i <= m - 1):
        raise TheoremViolation("index 2 iff ceil(m/2) <= i < m fails", {"m": m, "r": r, "i": i, "index": idx})
    return idx


def clique_witness(s: FiniteSemigroup, k: int) -> frozenset[int]:
    """{a, a^p1, a^(p1 p2), ..., a^k} together with the kernel of a^k."""
    a, prof, m, r = _monogenic_data(s)
    if m < 2 or not 1 <= k < m:
        raise OutOfRange(f"need 1 <= k < m = {m}, got {k}")
    if k == 1:
        return frozenset({a}) | prof.kernel
    chain, acc, rest, p = [1], 1, k, 2
    while rest > 1:
        while rest % p == 0:
            acc *= p
            chain.append(acc)
            rest //= p
        p += 1
    powers = frozenset(prof.power(e) for e in chain)
    return powers | s.profiles[prof.power(k)].kernel


# ---------------------------------------------------------------------------
# Maximal monogenic subsemigroups and the independence machinery
# ---------------------------------------------------------------------------

def maximal_monogenic_elements(s: FiniteSemigroup) -> frozenset[int]:
    cyc, over = s.cyclic_masks, s.over_masks
    return frozenset(a for a in range(s.n) if all(cyc[b] == cyc[a] for b in members(over[a])))


def maximal_cyclic_elements(s: FiniteSemigroup) -> frozenset[int]:
    cyc, over, prof = s.cyclic_masks, s.over_masks, s.profiles
    return frozenset(
        a
        for a in range(s.n)
        if prof[a].index == 1
        and all(cyc[b] == cyc[a] for b in members(over[a]) if prof[b].index == 1)
    )


def index_class(s: FiniteSemigroup, k: int) -> frozenset[int]:
    if k < 2:
        raise InvalidK(f"index classes are defined for k >= 2, got {k}")
    return frozenset(x for x in range(s.n) if s.profiles[x].index == k)


def tau_representatives(s: FiniteSemigroup, reverse: bool = False) -> frozenset[int]:
    """One element per class of x ~ y iff <x> = <y>; least id (greatest if reverse)."""
    reps: dict[int, int] = {}
    order = range(s.n - 1, -1, -1) if reverse else range(s.n)
    for x in order:
        reps.setdefault(s.cyclic_masks[x], x)
    return frozenset(reps.values())


def j2_set(s: FiniteSemigroup, reps: Optional[frozenset[int]] = None) -> frozenset[int]:
    reps = tau_representatives(s) if reps is None else reps
    covered = 0
    for x in index_class(s, 2):
        covered |= s.cyclic_masks[x]
    return frozenset(a for a in maximal_cyclic_elements(s) & reps if not (covered >> a) & 1)


def _half_index_sum(s: FiniteSemigroup) -> int:
    # One term per maximal monogenic subsemigroup.
    per_subsemigroup = {s.cyclic_masks[a]: s.profiles[a].index for a in maximal_monogenic_elements(s)}
    return sum(m // 2 for m in per_subsemigroup.values())


def independence_bounds(s: FiniteSemigroup) -> tuple[int, int]:
    j2 = len(j2_set(s))
    return len(index_class(s, 2)) + j2, j2 + _half_index_sum(s)


def clique_number_formula(s: FiniteSemigroup) -> int:
    best = 0
    for a in maximal_monogenic_elements(s):
        p = s.profiles[a]
        best = max(best, p.order if p.index == 1 else clique_number_monogenic(p.index, p.period))
    return best


@dataclass(frozen=True)
class MaximalSets:
    M: frozenset[int]
    Mbar: frozenset[int]
    X: frozenset[int]
    I: dict = field(hash=False)
    J2: frozenset[int]

    def summary(self) -> dict:
        return {
            "M": len(self.M),
            "Mbar": len(self.Mbar),
            "X": len(self.X),
            "I2": len(self.I.get(2, ())),
            "J2": len(self.J2),
        }


def maximal_sets(s: FiniteSemigroup, reverse: bool = False) -> MaximalSets:
    reps = tau_representatives(s, reverse)
    top = max(p.index for p in s.profiles)
    return MaximalSets(
        M=maximal_monogenic_elements(s),
        Mbar=maximal_cyclic_elements(s),
        X=reps,
        I={k: index_class(s, k) for k in range(2, max(top, 2) + 1)},
        J2=j2_set(s, reps),
    )


# ---------------------------------------------------------------------------
# Rees matrix semigroups
# ---------------------------------------------------------------------------

def rees_index_lemma_check(s: FiniteSemigroup) -> None:
    spec = s.rees
    if spec is None:
        raise NotReesConstructed("semigroup was not built by rees_matrix")
    maximal = maximal_monogenic_elements(s)
    for x in range(spec.zero):
        i, _, lam = spec.coordinates(x)
        idx = s.profiles[x].index
        zero_entry = spec.sandwich(lam, i) is None
        if zero_entry and (idx != 2 or x not in maximal):
            raise TheoremViolation("zero sandwich entry should give index 2 in M", {"element": x, "index": idx})
        if not zero_entry and idx != 1:
            raise TheoremViolation("non-zero sandwich entry should give index 1", {"element": x, "index": idx})


def rees_independence_formula(s: FiniteSemigroup) -> int:
    rees_index_lemma_check(s)
    return len(j2_set(s)) + _half_index_sum(s)


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------

@dataclass
class InvariantReport:
    n: int
    classification: Classification
    omega_formula: int
    omega_oracle: int
    alpha_oracle: int
    alpha_lower: int
    alpha_upper: int
    gamma_oracle: int
    idempotent_count: int
    maximal_sets: dict
    alpha_formula: Optional[int] = None
    rees_alpha_formula: Optional[int] = None

    def mismatches(self) -> list[str]:
        out = []
        if self.omega_formula != self.omega_oracle:
            out.append("omega_formula != omega_oracle")
        if not self.alpha_lower <= self.alpha_oracle <= self.alpha_upper:
            out.append("alpha_oracle outside [alpha_lower, alpha_upper]")
        if self.alpha_formula is not None and self.alpha_formula != self.alpha_oracle:
            out.append("alpha_formula != alpha_oracle")
        if self.rees_alpha_formula is not None and self.rees_alpha_formula != self.alpha_oracle:
            out.append("rees_alpha_formula != alpha_oracle")
        if self.gamma_oracle != self.idempotent_count:
            out.append("gamma_oracle != idempotent_count")
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "classification": self.classification.to_dict(),
            "omega_formula": self.omega_formula,
            "omega_oracle": self.omega_oracle,
            "alpha_oracle": self.alpha_oracle,
            "alpha_formula": self.alpha_formula,
            "alpha_lower": self.alpha_lower,
            "alpha_upper": self.alpha_upper,
            "rees_alpha_formula": self.rees_alpha_formula,
            "gamma_oracle": self.gamma_oracle,
            "idempotent_count": self.idempotent_count,
            "maximal_sets": self.maximal_sets,
            "mismatches": self.mismatches(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def invariant_report(
    s: FiniteSemigroup, g: Optional[SimpleGraph] = None, cap: Optional[int] = None
) -> InvariantReport:
    g = g if g is not None else build_cyclic_graph(s)
    lower, upper = independence_bounds(s)
    alpha_formula = None
    if s.full_mask in s.cyclic_masks:
        p = s.profiles[monogenic_generator(s)]
        alpha_formula = independence_number_monogenic(p.index, p.period)
    return InvariantReport(
        n=s.n,
        classification=classify_graph(g),
        omega_formula=clique_number_formula(s),
        omega_oracle=len(max_clique(g, cap)),
        alpha_oracle=len(max_independent_set(g, cap)),
        alpha_lower=lower,
        alpha_upper=upper,
        gamma_oracle=len(min_dominating_set(g, cap)),
        idempotent_count=len(idempotents(s)),
        maximal_sets=maximal_sets(s).summary(),
        alpha_formula=alpha_formula,
        rees_alpha_formula=rees_independence_formula(s) if s.rees is not None else None,
    )
