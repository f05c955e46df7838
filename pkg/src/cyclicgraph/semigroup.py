"""Finite semigroups as validated Cayley tables.

Elements are the integers ``0..n-1``; ``table[x][y]`` is the product ``x*y``.
Subsets of a semigroup are passed around as ``frozenset`` at the public
surface and as Python ``int`` bitmasks internally (bit ``x`` set iff ``x``
belongs to the subset).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    EmptyGeneratingSet,
    EntryOutOfRange,
    InvalidParams,
    IrregularMatrix,
    NotAGroup,
    NotASubsemigroup,
    NotAssociative,
    OutOfRange,
)

# Formula-built constructors re-check associativity unless this is switched off.
VERIFY_CONSTRUCTED = True


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class ElementProfile:
    """Monogenic structure of one element ``x``.

    ``powers[k-1]`` is ``x^k`` for ``1 <= k <= order``; the kernel is the
    cyclic group ``{x^index, ..., x^(index+period-1)}``.
    """

    element: int
    index: int
    period: int
    powers: tuple[int, ...]
    idempotent_power: int
    kernel_generator: int

    @property
    def order(self) -> int:
        return self.index + self.period - 1

    @property
    def kernel(self) -> frozenset[int]:
        return frozenset(self.powers[self.index - 1:])

    def power(self, k: int) -> int:
        """``x^k`` by reduction into the cycle, for any ``k >= 1``."""
        if k <= self.order:
            return self.powers[k - 1]
        return self.powers[self.index - 1 + (k - self.index) % self.period]


@dataclass(frozen=True)
class MonogenicParams:
    m: int
    r: int

    def __post_init__(self):
        if self.m < 1 or self.r < 1:
            raise InvalidParams(f"index and period must be >= 1, got m={self.m}, r={self.r}")

    @property
    def size(self) -> int:
        return self.m + self.r - 1


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    rees: Optional["ReesSpec"] = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.table)

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def label(self, x: int) -> str:
        return self.labels[x]

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def profiles(self) -> tuple[ElementProfile, ...]:
        return tuple(_compute_profile(self.table, x) for x in range(self.n))

    @cached_property
    def cyclic_masks(self) -> tuple[int, ...]:
        """Bitmask of ``<x>`` for each element ``x``."""
        return tuple(mask_of(p.powers) for p in self.profiles)

    @cached_property
    def over_masks(self) -> tuple[int, ...]:
        """Bitmask of ``{z : x in <z>}`` for each element ``x``."""
        over = [0] * self.n
        for z, cm in enumerate(self.cyclic_masks):
            for x in members(cm):
                over[x] |= 1 << z
        return tuple(over)

    @cached_property
    def idempotent_mask(self) -> int:
        return mask_of(x for x in range(self.n) if self.table[x][x] == x)

    @cached_property
    def _pair_closures(self) -> dict:
        return {}

    def closure_mask(self, mask: int) -> int:
        return _closure_mask(self.table, mask)

    def pair_closure(self, x: int, y: int) -> int:
        """Bitmask of ``<x, y>``, memoised per unordered pair."""
        key = (x, y) if x <= y else (y, x)
        cache = self._pair_closures
        if key not in cache:
            cache[key] = self.closure_mask((1 << x) | (1 << y))
        return cache[key]


def _compute_profile(table, x: int) -> ElementProfile:
    seen = {x: 1}
    powers = [x]
    cur = x
    while True:
        cur = table[cur][x]
        if cur in seen:
            m = seen[cur]
            r = len(powers) + 1 - m
            break
        seen[cur] = len(powers) + 1
        powers.append(cur)
    g = (-m) % r
    g1 = (1 - m) % r
    return ElementProfile(
        element=x,
        index=m,
        period=r,
        powers=tuple(powers),
        idempotent_power=powers[m + g - 1],
        kernel_generator=powers[m + g1 - 1],
    )


def _closure_mask(table, mask: int) -> int:
    found = members(mask)
    have = mask
    i = 0
    while i < len(found):
        x = found[i]
        for y in found[: i + 1]:
            for p in (table[x][y], table[y][x]):
                if not (have >> p) & 1:
                    have |= 1 << p
                    found.append(p)
        i += 1
    return have


def find_associativity_witness(table: Sequence[Sequence[int]]) -> Optional[tuple[int, int, int]]:
    """Lexicographically least ``(x, y, z)`` with ``(xy)z != x(yz)``, or None."""
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    chunk = max(1, 2_000_000 // max(1, n * n))
    for start in range(0, n, chunk):
        xs = np.arange(start, min(n, start + chunk))
        left = t[t[xs]]          # left[i, y, z] = (x_i y) z
        right = t[xs][:, t]      # right[i, y, z] = x_i (y z)
        bad = np.argwhere(left != right)
        if len(bad):
            i, y, z = bad[0]
            return int(xs[i]), int(y), int(z)
    return None


def from_table(
    n: int,
    raw_table: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    *,
    verify: bool = True,
    rees: Optional["ReesSpec"] = None,
) -> FiniteSemigroup:
    if n < 1:
        raise InvalidParams("a semigroup needs at least one element")
    if len(raw_table) != n or any(len(row) != n for row in raw_table):
        raise InvalidParams(f"table must be {n}x{n}")
    for x, row in enumerate(raw_table):
        for y, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise EntryOutOfRange(x, y, v, n)
    table = tuple(tuple(int(v) for v in row) for row in raw_table)
    if verify:
        witness = find_associativity_witness(table)
        if witness is not None:
            raise NotAssociative(*witness)
    if labels is None:
        labels = [str(x) for x in range(n)]
    if len(labels) != n:
        raise InvalidParams(f"expected {n} labels, got {len(labels)}")
    return FiniteSemigroup(table, tuple(labels), rees)


def _constructed(table, labels, rees=None) -> FiniteSemigroup:
    return from_table(len(table), table, labels, verify=VERIFY_CONSTRUCTED, rees=rees)


def monogenic(m: int, r: int) -> FiniteSemigroup:
    """``M(m, r) = <a : a^(m+r) = a^m>``; element ``i-1`` is ``a^i``."""
    params = MonogenicParams(m, r)
    size = params.size

    def red(s):
        return s if s <= size else m + (s - m) % r

    table = [[red(i + j) - 1 for j in range(1, size + 1)] for i in range(1, size + 1)]
    return _constructed(table, [f"a^{i}" for i in range(1, size + 1)])


def cyclic_group(n: int) -> FiniteSemigroup:
    """``Z_n`` with element ``k`` standing for ``g^k``; ``0`` is the identity."""
    if n < 1:
        raise InvalidParams(f"group order must be >= 1, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    return _constructed(table, labels)


def left_zero_band(n: int) -> FiniteSemigroup:
    if n < 1:
        raise InvalidParams(f"band size must be >= 1, got {n}")
    return _constructed([[x] * n for x in range(n)], [f"l{x}" for x in range(n)])


def direct_product(s: FiniteSemigroup, t: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; ``(a, b)`` gets id ``a * |T| + b``."""
    nt = t.n
    size = s.n * nt
    table = [[0] * size for _ in range(size)]
    for a1 in range(s.n):
        for b1 in range(nt):
            row = table[a1 * nt + b1]
            srow, trow = s.table[a1], t.table[b1]
            for a2 in range(s.n):
                base = srow[a2] * nt
                for b2 in range(nt):
                    row[a2 * nt + b2] = base + trow[b2]
    labels = [f"({la},{lb})" for la in s.labels for lb in t.labels]
    return _constructed(table, labels)


# ---------------------------------------------------------------------------
# Rees matrix semigroups
# ---------------------------------------------------------------------------

def group_identity(s: FiniteSemigroup) -> Optional[int]:
    rng = range(s.n)
    for e in rng:
        if all(s.table[e][x] == x == s.table[x][e] for x in rng):
            return e
    return None


def group_inverse(s: FiniteSemigroup, x: int, identity: int) -> Optional[int]:
    for y in range(s.n):
        if s.table[x][y] == identity == s.table[y][x]:
            return y
    return None


def is_group(s: FiniteSemigroup) -> bool:
    e = group_identity(s)
    return e is not None and all(group_inverse(s, x, e) is not None for x in range(s.n))


@dataclass(frozen=True)
class ReesSpec:
    """Data for ``M0[G; I, Lambda; P]``.

    ``matrix`` has ``q`` rows (indexed by Lambda) of ``p`` entries (indexed by
    I); an entry is a group element id or ``None`` for the zero marker.
    """

    group: FiniteSemigroup
    p: int
    q: int
    matrix: tuple[tuple[Optional[int], ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        if self.p < 1 or self.q < 1:
            raise InvalidParams("index sets I and Lambda must be non-empty")
        if not is_group(self.group):
            raise NotAGroup("Rees matrix construction needs a group")
        if len(self.matrix) != self.q or any(len(row) != self.p for row in self.matrix):
            raise InvalidParams(f"sandwich matrix must be {self.q}x{self.p}")
        for row in self.matrix:
            for v in row:
                if v is not None and not 0 <= v < self.group.n:
                    raise InvalidParams(f"sandwich entry {v} is not a group element")
        for lam, row in enumerate(self.matrix):
            if all(v is None for v in row):
                raise IrregularMatrix("row", lam)
        for i in range(self.p):
            if all(row[i] is None for row in self.matrix):
                raise IrregularMatrix("column", i)

    @property
    def size(self) -> int:
        return self.p * self.group.n * self.q + 1

    @property
    def zero(self) -> int:
        return self.size - 1

    def element_id(self, i: int, g: int, lam: int) -> int:
        return (i * self.group.n + g) * self.q + lam

    def coordinates(self, x: int) -> Optional[tuple[int, int, int]]:
        """``(i, g, lambda)`` for a non-zero id, None for the zero."""
        if x == self.zero:
            return None
        rest, lam = divmod(x, self.q)
        i, g = divmod(rest, self.group.n)
        return i, g, lam

    def sandwich(self, lam: int, i: int) -> Optional[int]:
        return self.matrix[lam][i]


def rees_matrix(spec: ReesSpec) -> FiniteSemigroup:
    gt = spec.group.table
    zero = spec.zero
    table = [[zero] * spec.size for _ in range(spec.size)]
    nonzero = [spec.coordinates(x) for x in range(zero)]
    for x, (i, a, lam) in enumerate(nonzero):
        row = table[x]
        for y, (j, b, mu) in enumerate(nonzero):
            pv = spec.matrix[lam][j]
            if pv is not None:
                row[y] = spec.element_id(i, gt[gt[a][pv]][b], mu)
    labels = [f"({i + 1},{spec.group.labels[g]},{lam + 1})" for i, g, lam in nonzero] + ["0"]
    return _constructed(table, labels, rees=spec)


# ---------------------------------------------------------------------------
# Element-level queries
# ---------------------------------------------------------------------------

def check_element(s: FiniteSemigroup, x: int) -> None:
    if not 0 <= x < s.n:
        raise OutOfRange(f"element {x} outside 0..{s.n - 1}")


def product(s: FiniteSemigroup, x: int, y: int) -> int:
    check_element(s, x)
    check_element(s, y)
    return s.table[x][y]


def power(s: FiniteSemigroup, x: int, k: int) -> int:
    check_element(s, x)
    if k < 1:
        raise OutOfRange(f"exponent must be >= 1, got {k}")
    result = None
    base = x
    while k:
        if k & 1:
            result = base if result is None else s.table[result][base]
        k >>= 1
        if k:
            base = s.table[base][base]
    return result


def closure(s: FiniteSemigroup, xs: Iterable[int]) -> frozenset[int]:
    xs = list(xs)
    if not xs:
        raise EmptyGeneratingSet("closure of the empty set is undefined")
    for x in xs:
        check_element(s, x)
    return frozenset(members(s.closure_mask(mask_of(xs))))


def element_profile(s: FiniteSemigroup, x: int) -> ElementProfile:
    check_element(s, x)
    return s.profiles[x]


def idempotents(s: FiniteSemigroup) -> frozenset[int]:
    return frozenset(members(s.idempotent_mask))


def is_band(s: FiniteSemigroup) -> bool:
    return s.idempotent_mask == s.full_mask


def pi_set(s: FiniteSemigroup) -> frozenset[int]:
    return frozenset(p.order for p in s.profiles)


def exponent(s: FiniteSemigroup) -> int:
    # x^n is idempotent exactly when n >= m_x and r_x | n.
    bound = max(p.index for p in s.profiles) + math.lcm(*(p.period for p in s.profiles))
    for n in range(1, bound + 1):
        if all(n >= p.index and n % p.period == 0 for p in s.profiles):
            return n
    raise AssertionError("finite semigroups always have an exponent")


def s_f_partition(s: FiniteSemigroup) -> dict[int, frozenset[int]]:
    """Map each idempotent f to ``{x : x^k = f for some k}``."""
    blocks: dict[int, set[int]] = {f: set() for f in idempotents(s)}
    for p in s.profiles:
        blocks[p.idempotent_power].add(p.element)
    return {f: frozenset(b) for f, b in sorted(blocks.items())}


def is_subsemigroup(s: FiniteSemigroup, ts: Iterable[int]) -> bool:
    mask = mask_of(ts)
    return mask != 0 and s.closure_mask(mask) == mask


def is_monogenic_subset(s: FiniteSemigroup, ts: Iterable[int]) -> Optional[int]:
    """Some ``z`` in T with ``<z> = T``, or None when T is not monogenic."""
    mask = mask_of(ts)
    if not is_subsemigroup(s, members(mask)):
        raise NotASubsemigroup("the subset is not closed under the product")
    for z in members(mask):
        if s.cyclic_masks[z] == mask:
            return z
    return None


def is_group_subset(s: FiniteSemigroup, ts: Iterable[int]) -> bool:
    ts = sorted(set(ts))
    if not ts:
        return False
    mask = mask_of(ts)
    t = s.table
    if any(not (mask >> t[x][y]) & 1 for x in ts for y in ts):
        return False
    identity = next((e for e in ts if all(t[e][x] == x == t[x][e] for x in ts)), None)
    if identity is None:
        return False
    return all(any(t[x][y] == identity == t[y][x] for y in ts) for x in ts)
