import itertools
import random
from fractions import Fraction

import pytest

import _gen
from choicekit.errors import DimensionError, EmptyOptionSet, EmptyOrderSet, NotBlunt
from choicekit.exact_geometry import add, scale, vec, vectors, zero
from choicekit.oracle import fm_conic_feasible
from choicekit.orders_cones import (
    ProperCone, check_order_axioms, choice_from_order, choice_from_order_set,
    cone_contains, dominates, make_cone, positive_part,
)

ORTHANT = make_cone([(1, 0), (0, 1)])
EMPTY = ProperCone.empty(2)


def test_make_cone():
    assert ORTHANT.generators == tuple(vectors([(0, 1), (1, 0)]))
    with pytest.raises(NotBlunt):
        make_cone([(1, 0), (-1, 0)])
    assert make_cone([], dim=2) == EMPTY
    with pytest.raises(ValueError):
        make_cone([])


def test_make_cone_rejects_zero_generator():
    with pytest.raises(NotBlunt):
        make_cone([(0, 0), (1, 0)])


@pytest.mark.parametrize("gens, u, expected", [
    ([(1, 0)], (2, 0), True),
    ([(1, 0)], (0, 0), False),
    ([(1, 0), (0, 1)], (3, 5), True),
])
def test_cone_contains(gens, u, expected):
    assert cone_contains(make_cone(gens), vec(u)) is expected


def test_cone_contains_derived_against_oracle():
    # 3*(1,0) + 5*(0,1) = (3,5)
    assert fm_conic_feasible(vectors([(1, 0), (0, 1)]), vec(3, 5))


def test_cone_contains_dimension():
    with pytest.raises(DimensionError):
        cone_contains(ORTHANT, vec(1, 0, 0))


def test_dominates():
    assert dominates(make_cone([(1, 0)]), vec(2, 1), vec(1, 1))
    assert not dominates(ORTHANT, vec(1, 1), vec(1, 1))
    assert not dominates(ORTHANT, vec(1, 0), vec(0, 1))
    assert not fm_conic_feasible(ORTHANT.generators, vec(1, -1))


def test_choice_from_order():
    A = vectors([(0, 0), (1, 0), (0, 1)])
    assert choice_from_order(ORTHANT, A) == vectors([(0, 1), (1, 0)])
    assert choice_from_order(EMPTY, A) == sorted(A)
    with pytest.raises(EmptyOptionSet):
        choice_from_order(ORTHANT, [])


def test_choice_from_order_derived():
    D = make_cone([(1, 1)])
    A = vectors([(0, 0), (2, 2), (1, 3)])
    # pairwise dominance table via the independent oracle
    table = {(u, v): u != v and fm_conic_feasible(D.generators, tuple(a - b for a, b in zip(u, v)))
             for u in A for v in A}
    assert [p for p, d in table.items() if d] == [(vec(2, 2), vec(0, 0))]
    assert choice_from_order(D, A) == vectors([(1, 3), (2, 2)])


def test_choice_from_order_set():
    A = vectors([(0, 0), (1, 0), (0, 1)])
    assert choice_from_order_set([ORTHANT], A) == vectors([(0, 1), (1, 0)])
    D1, D2 = make_cone([(1, 0)]), make_cone([(0, 1)])
    assert choice_from_order_set([D1, D2], A) == vectors([(0, 1), (1, 0)])
    assert choice_from_order_set([D1, D2], vectors([(0, 0), (1, 0)])) == vectors([(0, 0), (1, 0)])
    with pytest.raises(EmptyOrderSet):
        choice_from_order_set([], A)


def test_order_axioms_examples():
    rep = check_order_axioms(make_cone([(1, 0)]), vectors([(0, 0), (1, 0), (2, 0), (1, 1)]))
    assert rep.ok and rep.checked["PO2"] > 0
    rng = random.Random(20)
    probes = [_gen.vector(rng, 2) for _ in range(20)]
    assert check_order_axioms(ORTHANT, probes).ok
    assert check_order_axioms(EMPTY, probes).ok


def test_report_flags_a_non_proper_relation():
    # an improper "cone" bypassing make_cone: (1,0) > 0 > (1,0) but not (1,0) > (1,0)
    bad = ProperCone(2, tuple(vectors([(1, 0), (-1, 0)])))
    rep = check_order_axioms(bad, vectors([(0, 0), (1, 0)]))
    assert not rep.ok and not rep.passed("PO2")


def test_properties_on_random_cones():
    rng = random.Random(7)
    for _ in range(40):
        D = _gen.cone(rng)
        probes = [_gen.vector(rng, D.dim) for _ in range(6)] + [zero(D.dim)]
        # round trip between the order and the set of options
        assert positive_part(D, probes) == sorted(u for u in set(probes) if cone_contains(D, u))
        if D.generators:
            u, v = _gen.member_of(rng, D), _gen.member_of(rng, D)
            lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            assert cone_contains(D, add(u, v)) or not any(add(u, v))
            assert cone_contains(D, scale(lam, u)) or not any(u)
        A = probes[:5]
        w = _gen.vector(rng, D.dim)
        assert choice_from_order(D, [add(a, w) for a in A]) == sorted(
            add(a, w) for a in choice_from_order(D, A))
        chosen_b = choice_from_order(D, A)
        for r in range(1, len(set(A))):
            for sub in itertools.combinations(sorted(set(A)), r):
                for u in sub:
                    if u in chosen_b:
                        assert u in choice_from_order(D, sub)


def test_union_independent_of_cone_order():
    rng = random.Random(8)
    for _ in range(20):
        dim = rng.randint(1, 3)
        Ds = [_gen.cone(rng, dim) for _ in range(3)]
        A = [_gen.vector(rng, dim) for _ in range(5)]
        expected = sorted(set().union(*(choice_from_order(D, A) for D in Ds)))
        assert choice_from_order_set(Ds, A) == expected
        assert choice_from_order_set(Ds[::-1], A) == expected
