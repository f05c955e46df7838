"""Green's relations of a finite semigroup, via principal ideals in S^1."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotIdempotent
from .semigroup import FiniteSemigroup, is_group_subset, mask_of, members

Partition = tuple[frozenset[int], ...]


@dataclass(frozen=True)
class GreenClasses:
    L: Partition
    R: Partition
    J: Partition
    H: Partition
    D: Partition

    def block_of(self, relation: str, x: int) -> frozenset[int]:
        return next(b for b in getattr(self, relation) if x in b)

    def to_dict(self) -> dict:
        return {name: [sorted(b) for b in getattr(self, name)] for name in "LRJHD"}


def _partition_by(keys) -> Partition:
    groups: dict = {}
    for x, k in enumerate(keys):
        groups.setdefault(k, []).append(x)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def principal_ideals(s: FiniteSemigroup) -> tuple[list[int], list[int], list[int]]:
    """Bitmasks of ``S^1 x``, ``x S^1`` and ``S^1 x S^1`` for each x.

    Adjoining an identity only adds ``x`` itself to each ideal, so S^1 is
    never built as a table.
    """
    n, t = s.n, s.table
    left = [(1 << x) | mask_of(t[y][x] for y in range(n)) for x in range(n)]
    right = [(1 << x) | mask_of(t[x]) for x in range(n)]
    two_sided = []
    for x in range(n):
        m = left[x] | right[x]
        for y in members(right[x]):
            m |= mask_of(t[z][y] for z in range(n))
        two_sided.append(m)
    return left, right, two_sided


def _compose(first: Partition, second: Partition, n: int) -> tuple[int, ...]:
    """For each x, the mask of y with ``x first z`` and ``z second y`` for some z."""
    first_of = [0] * n
    second_of = [0] * n
    for b in first:
        m = mask_of(b)
        for x in b:
            first_of[x] = m
    for b in second:
        m = mask_of(b)
        for x in b:
            second_of[x] = m
    out = []
    for x in range(n):
        acc = 0
        for z in members(first_of[x]):
            acc |= second_of[z]
        out.append(acc)
    return tuple(out)


def green_classes(s: FiniteSemigroup) -> GreenClasses:
    left, right, two_sided = principal_ideals(s)
    L = _partition_by(left)
    R = _partition_by(right)
    J = _partition_by(two_sided)
    H = _partition_by(zip(left, right))
    lr = _compose(L, R, s.n)
    if lr != _compose(R, L, s.n):
        raise AssertionError("L o R and R o L differ on a finite semigroup")
    D = _partition_by(lr)
    return GreenClasses(L=L, R=R, J=J, H=H, D=D)


def h_class_is_group(s: FiniteSemigroup, f: int, classes: GreenClasses | None = None) -> bool:
    if s.table[f][f] != f:
        raise NotIdempotent(f"element {f} is not idempotent")
    classes = classes or green_classes(s)
    return is_group_subset(s, classes.block_of("H", f))


def is_completely_regular(s: FiniteSemigroup, classes: GreenClasses | None = None) -> bool:
    classes = classes or green_classes(s)
    return all(is_group_subset(s, block) for block in classes.H)
