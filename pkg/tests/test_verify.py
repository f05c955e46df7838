import pytest

from cyclicgraph.errors import SemigroupError
from cyclicgraph.semigroup import is_group, is_subsemigroup
from cyclicgraph.verify import (
    VerifyOutcome,
    acceptance_corpus,
    check_instance,
    elementary_abelian_2,
    enumerate_tables,
    family,
    rees_random_family,
    run,
)


def test_outcome_requires_witness():
    with pytest.raises(ValueError):
        VerifyOutcome("bipartite", "x", False)
    ok = VerifyOutcome("bipartite", "x", True)
    assert not ok.counts_as_failure
    diag = VerifyOutcome("isolated", "x", False, witness=[1], diagnostic=True)
    assert not diag.counts_as_failure


def test_order3_enumeration_counts():
    # associative tables on 1, 2, 3 labelled elements: 1 + 8 + 113
    sizes = [inst.semigroup.n for inst in enumerate_tables(3)]
    assert (sizes.count(1), sizes.count(2), sizes.count(3)) == (1, 8, 113)


def test_corpus_composition():
    corpus = acceptance_corpus()
    assert len(corpus) == 122 + 78 + 6 + 3 + 25
    assert sum(inst.semigroup.rees is not None for inst in corpus) == 25


def test_elementary_abelian():
    for k in range(1, 4):
        g = elementary_abelian_2(k)
        assert g.n == 2**k and is_group(g)


def test_rees_family_is_seeded():
    first = [inst.semigroup.table for inst in rees_random_family(7, 10)]
    second = [inst.semigroup.table for inst in rees_random_family(7, 10)]
    assert first == second
    assert any(inst.semigroup.rees.matrix != rees_random_family(8, 10).__next__().semigroup.rees.matrix
               for inst in rees_random_family(7, 10))


def test_rees_family_has_both_sandwich_kinds():
    entries = [v for inst in rees_random_family(7, 25) for row in inst.semigroup.rees.matrix for v in row]
    assert None in entries and any(v is not None for v in entries)


def test_unknown_family():
    with pytest.raises(SemigroupError):
        family("nope")


@pytest.mark.parametrize("name", ["monogenic", "cyclic", "band", "product", "rees-random"])
def test_families_pass(name):
    outcomes = list(run(family(name, max_order=8, seed=3, count=10)))
    assert outcomes
    assert not [o for o in outcomes if o.counts_as_failure]


def test_check_instance_covers_monogenic_theorems():
    inst = next(i for i in family("monogenic", max_order=10) if i.params == (5, 6))
    names = {o.theorem for o in check_instance(inst)}
    assert {"completeness", "clique-monogenic", "independence-monogenic", "kernel-size",
            "divisibility", "index-lemma", "clique-witness", "components", "dominance"} <= names


def test_product_family_members_are_semigroups():
    for inst in family("product", max_order=12):
        s = inst.semigroup
        assert s.n <= 12 or inst.name.startswith("Z2^")
        assert is_subsemigroup(s, range(s.n))
