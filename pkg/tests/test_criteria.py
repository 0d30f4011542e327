import random

import pytest
from hypothesis import given, settings, strategies as st

from blowup_positivity.criteria import (
    CERTIFIERS,
    Outcome,
    Property,
    UniformBundle,
    ample_by_nef_decomposition,
    ample_general,
    ample_nagata_conditional,
    ample_r9,
    ample_uniform,
    ample_uniform_lambda,
    certify,
    exceptional_ratio_bound,
    gg_general,
    gg_uniform,
    min_degree,
    necessary_obstructions,
    st_criterion,
    va_uniform,
)
from blowup_positivity.lattice import DivisorClass, intersect
from blowup_positivity.weyl import enumerate_exceptional_classes


def test_verdict_json_shape():
    v = ample_general(DivisorClass(7, (3,) + (2,) * 7 + (1,) * 4))
    d = v.to_dict()
    assert d["schema"] == 1
    assert d["outcome"] == "Certified"
    assert {"label", "lhs", "rhs", "relation", "pass"} <= set(d["hypotheses"][0])
    assert "ample_general" in str(v)


def test_ample_general_zero_points_dropped():
    v = ample_general(DivisorClass(26, (10,) * 5 + (0, 0)))
    assert v.certified
    assert v.notes["dropped_zero_points"] == 2


def test_ample_general_not_applicable():
    assert ample_general(DivisorClass(0, (1, 1))).outcome is Outcome.NOT_APPLICABLE
    assert ample_general(DivisorClass(5, (1, -1))).outcome is Outcome.NOT_APPLICABLE
    assert ample_general(DivisorClass(5, (0, 0))).outcome is Outcome.NOT_APPLICABLE


def test_ample_general_one_point():
    assert ample_general(DivisorClass(3, (2,))).certified
    assert not ample_general(DivisorClass(2, (2,))).certified


def test_ample_r9():
    L = DivisorClass(7, (3,) + (2,) * 7 + (1,) * 4)
    v = ample_r9(L)
    assert v.certified
    assert intersect(L, DivisorClass(6, (3,) + (2,) * 7 + (0,) * 4)) == 5
    assert ample_r9(DivisorClass.uniform(20, 8, 5)).outcome is Outcome.NOT_APPLICABLE
    bad = ample_r9(DivisorClass(6, (3,) + (2,) * 7 + (1,) * 4))
    assert not bad.certified


def test_exceptional_ratio():
    C, q = exceptional_ratio_bound(8)
    assert C == DivisorClass(6, (3,) + (2,) * 7)
    assert (q.numerator, q.denominator) == (17, 6)


def test_nef_decomposition():
    F = DivisorClass.uniform(17, 8, 6)
    v = ample_by_nef_decomposition(DivisorClass.uniform(171, 8, 60), F)
    assert v.certified and v.notes["k"] == 10 and v.notes["a"] == 1
    v = ample_by_nef_decomposition(DivisorClass.uniform(170, 8, 60), F)
    assert not v.certified and v.notes["a"] == 0
    v = ample_by_nef_decomposition(DivisorClass.uniform(171, 8, 61), F)
    assert v.notes["reason"] == "no-decomposition"
    # F not nef
    v = ample_by_nef_decomposition(DivisorClass.uniform(49, 8, 17), DivisorClass.uniform(48, 8, 17))
    assert not v.certified


def test_nagata_conditional():
    v = ample_nagata_conditional(UniformBundle(32, 10, 10))
    assert v.outcome is Outcome.CONDITIONAL and v.conjecture == "Nagata"
    assert ample_nagata_conditional(UniformBundle(31, 10, 10)).notes["not_ample"]
    assert ample_nagata_conditional(UniformBundle(31, 9, 10)).notes["nagata_known_for_square_r"]
    assert ample_nagata_conditional(UniformBundle(31, 8, 10)).outcome is Outcome.NOT_APPLICABLE


def test_gg_general_modes(twelve_a):
    L = DivisorClass(8, twelve_a)
    assert gg_general(L).outcome is Outcome.NOT_APPLICABLE
    v = gg_general(L, permissive=True)
    assert v.certified
    assert v.notes["outside_stated_hypotheses"]
    assert gg_general(DivisorClass.uniform(30, 4, 5)).outcome is Outcome.NOT_APPLICABLE


def test_not_applicable_guards():
    assert gg_uniform(UniformBundle(40, 10, 5)).outcome is Outcome.NOT_APPLICABLE
    assert va_uniform(UniformBundle(40, 2, 5)).outcome is Outcome.NOT_APPLICABLE
    assert st_criterion(UniformBundle(40, 10, 1)).outcome is Outcome.NOT_APPLICABLE
    with pytest.raises(ValueError):
        st_criterion(UniformBundle(40, 10, 5), Property.VERY_AMPLE)
    with pytest.raises(ValueError):
        min_degree("gg_uniform", r=10, m=2)
    with pytest.raises(ValueError):
        min_degree("no_such_thing", r=10, m=2)


def test_min_degree_accepts_callable():
    assert min_degree(ample_uniform, r=10, m=10) == 32


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40), st.integers(2, 40))
def test_lambda_vs_uniform_dominance(r, m):
    # for r >= 4 the sharper uniform bound never needs a larger degree
    if r >= 4:
        assert min_degree("ample_uniform", r=r, m=m) <= min_degree("ample_uniform_lambda", r=r, m=m)


def test_gg_va_coherence():
    # the very ample degree is never below the gg degree, and both are at least the ample one
    for r in range(3, 31, 3):
        for m in range(6, 40, 5):
            a = min_degree("ample_uniform", r=r, m=m)
            g = min_degree("gg_uniform", r=r, m=m)
            assert g >= a - 1
            assert min_degree("va_uniform", r=r, m=m) >= g - 1
            assert min_degree("gg_uniform", r=r, m=m) <= min_degree("st_gg", r=r, m=m)


def test_soundness_against_exact_test():
    # for r <= 8, ample iff L^2 > 0 and L.C > 0 on every (-1)-class
    rng = random.Random(5)
    checked = 0
    for _ in range(300):
        r = rng.randint(2, 8)
        mults = tuple(sorted((rng.randint(1, 9) for _ in range(r)), reverse=True))
        d = rng.randint(1, 40)
        L = DivisorClass(d, mults)
        if ample_general(L).certified:
            checked += 1
            assert intersect(L, L) > 0
            assert all(intersect(L, C) > 0 for C in enumerate_exceptional_classes(r))
            assert necessary_obstructions(L) == []
    assert checked > 50


def test_obstructions():
    obs = necessary_obstructions(DivisorClass.uniform(25, 5, 10))
    assert (DivisorClass(2, (1,) * 5), 0) in obs
    obs = necessary_obstructions(DivisorClass.uniform(10, 9, 4))
    assert obs[0][0] == DivisorClass.uniform(10, 9, 4) and obs[0][1] < 0


def test_certify_dispatch():
    v = certify(Property.AMPLE, UniformBundle(170, 8, 60))
    assert v.outcome is Outcome.NOT_CERTIFIED
    assert DivisorClass(6, (3,) + (2,) * 7) in v.witnesses
    v = certify(Property.AMPLE, UniformBundle(32, 10, 10), conditional=True)
    assert v.certified and v.criterion == "ample_uniform"
    v = certify(Property.AMPLE, UniformBundle(95, 10, 30), conditional=True)
    assert v.outcome is Outcome.CONDITIONAL
    v = certify(Property.AMPLE, DivisorClass(7, (3,) + (2,) * 7 + (1,) * 4))
    assert v.certified and v.criterion == "ample_general"
    v = certify(Property.GLOBALLY_GENERATED, UniformBundle(33, 10, 10))
    assert v.certified and v.criterion == "gg_uniform"
    v = certify(Property.VERY_AMPLE, DivisorClass(5, (2, 1)))
    assert v.outcome is Outcome.NOT_APPLICABLE
    v = certify(Property.AMPLE, UniformBundle(40, 10, 10), mode="st_ample")
    assert v.criterion == "st_ample" and v.certified
    v = certify(Property.AMPLE, DivisorClass(40, (10, 9)), mode="st_ample")
    assert v.outcome is Outcome.NOT_APPLICABLE


def test_registry_kinds():
    assert set(CERTIFIERS) == {"ample_general", "ample_r9", "gg_general", "ample_uniform",
                               "ample_uniform_lambda", "gg_uniform", "va_uniform",
                               "st_ample", "st_gg"}
