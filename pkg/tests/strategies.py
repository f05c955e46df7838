from hypothesis import strategies as st

from cyclicgraph.semigroup import (
    ReesSpec,
    cyclic_group,
    direct_product,
    left_zero_band,
    monogenic,
    rees_matrix,
)
from cyclicgraph.verify import enumerate_tables

ORDER3 = [inst.semigroup for inst in enumerate_tables(3)]


@st.composite
def rees_specs(draw, max_dim=3):
    group = cyclic_group(draw(st.integers(1, 3)))
    p = draw(st.integers(1, max_dim))
    q = draw(st.integers(1, max_dim))
    entry = st.one_of(st.none(), st.integers(0, group.n - 1))
    matrix = draw(
        st.lists(st.lists(entry, min_size=p, max_size=p), min_size=q, max_size=q).filter(
            lambda mat: all(any(v is not None for v in row) for row in mat)
            and all(any(row[i] is not None for row in mat) for i in range(p))
        )
    )
    return ReesSpec(group, p, q, matrix)


small_semigroups = st.one_of(
    st.builds(monogenic, st.integers(1, 6), st.integers(1, 6)),
    st.builds(cyclic_group, st.integers(1, 6)),
    st.builds(left_zero_band, st.integers(1, 4)),
    st.sampled_from(ORDER3),
    rees_specs(2).map(rees_matrix),
)

semigroups = st.one_of(
    small_semigroups,
    st.tuples(small_semigroups, small_semigroups)
    .filter(lambda st_: st_[0].n * st_[1].n <= 24)
    .map(lambda st_: direct_product(*st_)),
)
