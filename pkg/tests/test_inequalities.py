import pytest
from hypothesis import given, strategies as st

from blowup_positivity.inequalities import (
    InvalidInput,
    LemmaOutcome,
    MultiplicityVector,
    lemma_key,
    lemma_key1,
    lemma_key2,
    lemma_key_sides,
    nonincreasing,
    sweep_lemma_key,
    sweep_lemma_key1,
    sweep_lemma_key2,
    xu_lower_bound,
)


def test_multiplicity_vector_validation():
    assert MultiplicityVector((3, 2, 2)).values == (3, 2, 2)
    with pytest.raises(InvalidInput):
        MultiplicityVector(())
    with pytest.raises(InvalidInput):
        MultiplicityVector((1, 2))


def test_lemma_key_equality_families():
    # n = (2, 1, ..., 1), m = (1, 1, ..., 1): both sides agree
    for r in range(2, 7):
        n = (2,) + (1,) * (r - 1)
        lhs, rhs = lemma_key_sides((1,) * r, n)
        assert lemma_key((1,) * r, n) is (LemmaOutcome.HOLDS_EQUALITY if lhs == rhs
                                          else LemmaOutcome.HOLDS_STRICT)
    assert lemma_key((1, 1, 1), (2, 2, 2)) is LemmaOutcome.HOLDS_EQUALITY


def test_lemma_key_excluded_and_invalid():
    assert lemma_key((1, 1), (2, 2)) is LemmaOutcome.EXCLUDED
    with pytest.raises(InvalidInput):
        lemma_key((1, 1), (1, 1))      # n_1 < 2
    with pytest.raises(InvalidInput):
        lemma_key((1,), (2, 1))        # length mismatch
    with pytest.raises(InvalidInput):
        lemma_key((-1, 0), (2, 1))
    with pytest.raises(InvalidInput):
        lemma_key((1, 1), (1, 2))      # not non-increasing


@given(st.integers(2, 7).flatmap(lambda r: st.tuples(
    st.lists(st.integers(0, 20), min_size=r, max_size=r),
    st.lists(st.integers(1, 20), min_size=r, max_size=r))))
def test_lemma_key_never_violated(mn):
    m, n = mn
    n = sorted(n, reverse=True)
    if n[0] < 2:
        n[0] = 2
    assert lemma_key(m, n) is not LemmaOutcome.VIOLATED


def test_lemma_key_sweep_agrees_with_scalar():
    # the vectorized sweep against the scalar predicate on a small grid
    counts = {o: 0 for o in LemmaOutcome}
    import itertools
    for n in nonincreasing(3, 1, 3):
        if n[0] < 2:
            continue
        for m in itertools.product(range(3), repeat=3):
            if any(m):
                counts[lemma_key(m, n)] += 1
    sweep = sweep_lemma_key(r_values=[3], m_max=2, n_max=3)
    assert sweep["violations"] == counts[LemmaOutcome.VIOLATED] == 0
    assert sweep["equality_cases"] == counts[LemmaOutcome.HOLDS_EQUALITY]


def test_lemma_key2_and_key1():
    assert lemma_key2((12,) + (3,) * 8)
    assert lemma_key1((12, 1))
    with pytest.raises(InvalidInput):
        lemma_key2((11,) + (3,) * 8)
    with pytest.raises(InvalidInput):
        lemma_key2((12,) + (3,) * 7)
    with pytest.raises(InvalidInput):
        lemma_key1((11, 1))


def test_small_sweeps():
    assert sweep_lemma_key2(n1_values=range(12, 13), random_samples=200)["violations"] == 0
    assert sweep_lemma_key1(r_values=range(2, 4), n1_values=range(12, 14))["violations"] == 0


def test_xu_bound():
    # the degree-48 curve with eight points of multiplicity 17
    assert xu_lower_bound(48, (17,) * 8)
    assert not xu_lower_bound(3, (2, 2, 2))
    assert xu_lower_bound(1, (1, 1, 0))
    with pytest.raises(InvalidInput):
        xu_lower_bound(0, (1,))
    with pytest.raises(InvalidInput):
        xu_lower_bound(2, (0, 0))
