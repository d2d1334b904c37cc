import itertools
import random
from fractions import Fraction

import pytest

import _gen
from choicekit.assessments import AssessmentFamily, in_natural_extension
from choicekit.choice_functions import (
    Assessment, Cones, check_pc_axioms, check_rejection_axioms, choose, extract_order,
    is_binary_on, is_compatible, rejects_zero, represent,
)
from choicekit.errors import EmptyOptionSet, EmptyOrderSet, InconsistentAssessment, NotBinary
from choicekit.exact_geometry import vec, vectors, zero
from choicekit.orders_cones import ProperCone, dominates, make_cone
from choicekit.rules import FinitePoints, Rule

ORTHANT = make_cone([(1, 0), (0, 1)])
PARETO = Cones([make_cone([(1, 0)]), make_cone([(0, 1)])])
TRIPLE = vectors([(0, 0), (1, 0), (0, 1)])


def assessment(*basis):
    return Assessment(AssessmentFamily(basis))


def test_choose_examples():
    assert choose(assessment([(1, 0)]), vectors([(0, 0), (1, 0)])) == [vec(1, 0)]
    assert choose(Cones([ORTHANT]), TRIPLE) == vectors([(0, 1), (1, 0)])
    empty = Assessment(AssessmentFamily([], dim=2))
    assert choose(empty, TRIPLE) == sorted(TRIPLE)


def test_choose_derived_by_hand():
    F = AssessmentFamily([[(1, 0)]])
    # A - (0,0) contains (1,0); A - (1,0) = {(-1,0),(0,0)} misses posi{(1,0)}
    assert in_natural_extension(F, FinitePoints(vectors([(0, 0), (1, 0)])))
    assert not in_natural_extension(F, FinitePoints(vectors([(-1, 0), (0, 0)])))


def test_choose_errors():
    with pytest.raises(EmptyOptionSet):
        choose(Cones([ORTHANT]), [])
    with pytest.raises(InconsistentAssessment):
        assessment([(1, 0)], [(-1, 0)])
    with pytest.raises(EmptyOrderSet):
        Cones([])


def test_rejects_zero_examples():
    M = assessment([(1, 0)])
    assert rejects_zero(M, [vec(1, 0)])
    assert not rejects_zero(M, [vec(0, 1)])
    assert not rejects_zero(Cones([make_cone([(1, 0)])]), [vec(-1, 0)])


def test_binarity():
    rng = random.Random(30)
    D = _gen.cone(rng, dim=2, bound=3)
    assert is_binary_on(Cones([D]), [_gen.small_vector(rng, 2) for _ in range(5)])
    res = is_binary_on(PARETO, TRIPLE, 3)
    assert not res
    assert res.option_set == tuple(sorted(TRIPLE)) and res.option == vec(0, 0)
    assert is_binary_on(PARETO, vectors([(0, 0), (1, 0)]), 2)


def test_extract_order_examples():
    probes = vectors([(1, 0), (0, 1), (-1, 0), (1, 1)])
    cone = extract_order(Cones([ORTHANT]), probes)
    assert cone == make_cone([(1, 0), (0, 1), (1, 1)])
    M = Cones([ORTHANT])
    for u, v in itertools.permutations(probes, 2):
        assert dominates(cone, v, u) == (u not in choose(M, [u, v]))
    assert extract_order(Cones([ProperCone.empty(2)]), probes) == ProperCone.empty(2)
    with pytest.raises(NotBinary) as info:
        extract_order(PARETO, vectors([(1, 0), (0, 1)]))
    assert info.value.option == vec(0, 0)


def test_extract_order_round_trip_on_random_cones():
    rng = random.Random(31)
    for _ in range(10):
        D = _gen.cone(rng, dim=2, max_gens=3, bound=3)
        extra = [v for v in (_gen.small_vector(rng, 2) for _ in range(3)) if any(v)]
        probes = sorted(set(D.generators) | set(extra))
        if not probes:
            continue
        M = Cones([D])
        cone = extract_order(M, probes)
        assert set(D.generators) <= set(cone.generators)
        for u, v in itertools.permutations(probes, 2):
            assert dominates(cone, v, u) == (u not in choose(M, [u, v]))


def test_represent_examples():
    F = AssessmentFamily([[(1, 0)], [(0, 1)]])
    assert represent(Assessment(F)) == [ORTHANT]
    A = vectors([(0, 0), (1, 0), (0, 1), (1, 1), (-1, -1)])
    assert choose(Assessment(F), A) == choose(Cones(represent(Assessment(F))), A)

    F = AssessmentFamily([[(1, 0), (-1, 0)]])
    cones = represent(Assessment(F))
    assert len(cones) == 2
    U = vectors([(0, 0), (1, 0), (-1, 0), (2, 0)])
    for r in (1, 2, 3):
        for A in itertools.combinations(U, r):
            assert choose(Assessment(F), A) == choose(Cones(cones), A)

    F = AssessmentFamily([[(1, 0), (-1, 1)]])
    rng = random.Random(32)
    for _ in range(10):
        A = _gen.option_set(rng, 2)
        assert choose(Assessment(F), A) == choose(Cones(represent(Assessment(F))), A)

    assert represent(Assessment(AssessmentFamily([], dim=2))) == [ProperCone.empty(2)]


def test_pc_axioms():
    probes = [vectors([(0, 0), (1, 0)]), vectors([(1, 1), (0, 1), (-1, 2)]), vectors([(2, -1), (-1, 0)])]
    shifts = vectors([(1, -1), (0, 3)])
    grid = [Fraction(1, 2), 1, 2]
    assert check_pc_axioms(Cones([make_cone([(1, 0)])]), probes, shifts, grid).ok
    rep = check_pc_axioms(assessment([(1, 0)], [(0, 1)]), probes, shifts, grid)
    assert rep.ok and rep.checked["PC2"] > 0
    rep = check_pc_axioms(Assessment(AssessmentFamily([], dim=2)), probes, shifts, grid)
    assert rep.ok and rep.checked["PC2"] == 0


def test_rejection_of_zero_matches_natural_extension():
    rng = random.Random(33)
    for _ in range(20):
        F = _gen.family(rng)
        M = Assessment(F)
        A = _gen.option_set(rng, F.dim, 4)
        z = zero(F.dim)
        assert rejects_zero(M, A) == (z not in choose(M, A + [z])) == in_natural_extension(F, FinitePoints(A))
        assert choose(M, A)


def test_model_compatibility_and_rejection_axioms():
    rules = [Rule((), FinitePoints([(1, 0)]))]
    assert is_compatible(Cones([ORTHANT]), rules)
    assert not is_compatible(PARETO, rules)
    assert is_compatible(assessment([(1, 0)]), rules)
    sample = [FinitePoints(vectors([(1, 0)])), FinitePoints(vectors([(0, 0), (1, 1)]))]
    assert check_rejection_axioms(PARETO, sample, [1, 2]).ok
