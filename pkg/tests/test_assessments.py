import random
from fractions import Fraction

import pytest

import _gen
from choicekit.assessments import (
    AssessmentFamily, check_pk_axioms, check_pk_axioms_with, in_natural_extension,
    is_consistent, k_compatible, refutation_certificate, selection_cones, settings,
)
from choicekit.errors import CombinatorialLimit, InconsistentAssessment
from choicekit.exact_geometry import vec, vectors
from choicekit.oracle import fm_conic_feasible
from choicekit.orders_cones import make_cone
from choicekit.rules import FinitePoints, OpenRay, PosiHull, Rule, optset_meets_cone

ORTH = AssessmentFamily([[(1, 0)], [(0, 1)]])


def fp(*pts):
    return FinitePoints(pts)


def test_selection_cones_examples():
    assert selection_cones(ORTH) == [make_cone([(1, 0), (0, 1)])]
    assert selection_cones(AssessmentFamily([[(1, 0), (-1, 0)]])) == [
        make_cone([(-1, 0)]), make_cone([(1, 0)])]
    F = AssessmentFamily([[(1, 0)], [(-1, 0), (0, 1)]])
    assert selection_cones(F) == [make_cone([(1, 0), (0, 1)])]
    assert selection_cones(AssessmentFamily([], dim=2)) == []


def test_selection_cones_ignore_basis_order():
    a, b = [(1, 0), (0, 1)], [(1, 1), (-1, 2)]
    assert selection_cones(AssessmentFamily([a, b])) == selection_cones(AssessmentFamily([b, a]))


def test_combinatorial_limit():
    F = AssessmentFamily([[(1, 0), (2, 0)]] * 1 + [[(0, 1), (0, 2)], [(1, 1), (2, 2)]])
    with pytest.raises(CombinatorialLimit):
        selection_cones(F, max_selections=7)
    with settings(max_selections=7):
        with pytest.raises(CombinatorialLimit):
            is_consistent(F)
    assert is_consistent(F)


def test_consistency():
    assert is_consistent(ORTH)
    assert not is_consistent(AssessmentFamily([[(1, 0)], [(-1, 0)]]))
    assert is_consistent(AssessmentFamily([], dim=3))


def test_natural_extension_examples():
    assert in_natural_extension(ORTH, fp((1, 1)))
    assert fm_conic_feasible(vectors([(1, 0), (0, 1)]), vec(1, 1))
    assert not in_natural_extension(ORTH, fp((-1, -1)))
    assert not fm_conic_feasible(vectors([(1, 0), (0, 1)]), vec(-1, -1))
    F = AssessmentFamily([[(1, 0), (-1, 1)]])
    assert not in_natural_extension(F, fp((1, 0)))
    assert refutation_certificate(F, fp((1, 0))) == make_cone([(-1, 1)])


def test_natural_extension_empty_and_inconsistent():
    empty = AssessmentFamily([], dim=2)
    assert not in_natural_extension(empty, fp((1, 0)))
    assert not in_natural_extension(ORTH, None)
    with pytest.raises(InconsistentAssessment):
        in_natural_extension(AssessmentFamily([[(1, 0)], [(-1, 0)]]), fp((1, 0)))


def test_natural_extension_of_infinite_queries():
    assert in_natural_extension(ORTH, PosiHull([(1, -1), (-1, 2)]))
    assert not in_natural_extension(ORTH, OpenRay((1, 0), (-1, -1)))
    assert in_natural_extension(ORTH, OpenRay((2, 2), (-1, -1)))


def test_k_compatible_examples():
    F = AssessmentFamily([[(1, 0)]])
    assert k_compatible(F, [Rule((), fp((1, 0), (5, 5)))])
    res = k_compatible(F, [Rule((), fp((0, 1)))])
    assert not res and res.witness_index == 0
    assert k_compatible(F, [Rule([fp((0, 1))], None)])


def test_pk_axioms_examples():
    sample = [fp((1, 0)), fp((0, 0), (0, 1))]
    rep = check_pk_axioms(ORTH, sample, [Fraction(1, 2), 1, 2])
    assert rep.ok and rep.checked["PK1"] == 1 and rep.checked["PK2"] > 0
    assert check_pk_axioms(AssessmentFamily([], dim=2), sample, [1]).ok
    F = AssessmentFamily([[(1, 0), (0, 1)]])
    big = fp((1, 0), (0, 1), (7, 7))
    assert in_natural_extension(F, big)
    assert check_pk_axioms(F, [big, fp((1, 0), (0, 1))], [1, 2]).ok


def test_pk_checker_detects_violation():
    # "contains (1,0)" is not closed under positive combinations
    member = lambda S: S is not None and vec(1, 0) in getattr(S, "points", ())
    rep = check_pk_axioms_with(member, [fp((1, 0))], [2])
    assert not rep.passed("PK2")


def test_pk_axioms_hold_for_single_cone_rejection_sets():
    rng = random.Random(21)
    for _ in range(25):
        D = _gen.cone(rng, dim=2, bound=3)
        sample = [FinitePoints(_gen.option_set(rng, 2, 3)) for _ in range(4)]
        rep = check_pk_axioms_with(lambda S: optset_meets_cone(S, D), sample, [Fraction(1, 2), 1, 2])
        assert rep.ok, rep.summary()


def test_extension_is_monotone_and_certificates_check_out():
    rng = random.Random(22)
    for _ in range(40):
        F = _gen.family(rng)
        S = _gen.option_set(rng, F.dim, 3)
        bigger = S + _gen.option_set(rng, F.dim, 2)
        if in_natural_extension(F, fp(*S)):
            assert in_natural_extension(F, fp(*bigger))
        else:
            D = refutation_certificate(F, fp(*S))
            assert not any(any(p) and fm_conic_feasible(D.generators, p) for p in S)
