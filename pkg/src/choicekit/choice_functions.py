"""Choice functions built from cones or from assessments.

A :class:`Cones` model chooses the options that are undominated under at
least one of its cones.  An :class:`Assessment` model rejects ``u`` from
``A`` when ``A - u`` belongs to the natural extension of the assessment.
Neither model stores choices extensionally; both are evaluators, and
every axiom check in this module runs on a finite sample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .assessments import (
    AssessmentFamily, check_pk_axioms_with, in_natural_extension, is_consistent,
    k_compatible, selection_cones,
)
from .errors import DimensionError, EmptyOptionSet, EmptyOrderSet, InconsistentAssessment, NotBinary
from .exact_geometry import Vector, add, canonical, check_dims, is_zero, sub, zero
from .oracle import coefficient_maps, pk2_combination
from .orders_cones import AxiomReport, ProperCone, choice_from_order_set, make_cone
from .rules import Compatibility, FinitePoints, Rule, check_rules, optset_meets_cone


@dataclass(frozen=True)
class Cones:
    cones: tuple

    def __init__(self, cones):
        cones = tuple(cones)
        if not cones:
            raise EmptyOrderSet("a cone model needs at least one cone")
        if len({D.dim for D in cones}) > 1:
            raise DimensionError("cones of a model must share one dimension")
        object.__setattr__(self, "cones", cones)

    @property
    def dim(self):
        return self.cones[0].dim


@dataclass(frozen=True)
class Assessment:
    family: AssessmentFamily

    def __post_init__(self):
        if not is_consistent(self.family):
            raise InconsistentAssessment("choice models need a consistent assessment")

    @property
    def dim(self):
        return self.family.dim


def _options(model, A) -> tuple:
    A = canonical(A)
    if not A:
        raise EmptyOptionSet("cannot choose from an empty option set")
    check_dims(*A, dim=model.dim)
    return A


def choose(model, A: Sequence[Vector]) -> list:
    """The options of ``A`` that ``model`` does not reject, sorted."""
    A = _options(model, A)
    if isinstance(model, Cones):
        return choice_from_order_set(model.cones, A)
    # a shifted set always contains the origin; membership ignores it
    return [u for u in A
            if not in_natural_extension(model.family, FinitePoints([sub(a, u) for a in A]))]


def rejects_zero(model, A: Sequence[Vector]) -> bool:
    """Whether ``A`` is a rejection set: 0 is rejected from ``A u {0}``."""
    A = _options(model, A)
    z = zero(model.dim)
    return z not in choose(model, A + (z,))


def member(model, S) -> bool:
    """Membership of an option set in the model's set of rejection sets.

    Unlike :func:`rejects_zero` this accepts infinite option sets too.
    """
    if S is None:
        return False
    if isinstance(model, Cones):
        return all(optset_meets_cone(S, D) for D in model.cones)
    return in_natural_extension(model.family, S)


def is_compatible(model, rules: Sequence[Rule]) -> Compatibility:
    """Rule compatibility of the model's rejection sets."""
    if isinstance(model, Assessment):
        return k_compatible(model.family, rules)
    return check_rules(lambda S: member(model, S), rules)


class BinarityResult(NamedTuple):
    binary: bool
    option_set: tuple | None = None
    option: Vector | None = None

    def __bool__(self):
        return self.binary


def is_binary_on(model, universe: Sequence[Vector], max_subset_size: int | None = None) -> BinarityResult:
    """Check that choices from small subsets follow from pairwise choices.

    Every subset of ``universe`` with at least three and at most
    ``max_subset_size`` elements is tested (smaller ones hold trivially);
    the first offending ``(option set, option)`` is returned.
    """
    universe = canonical(universe)
    if max_subset_size is None:
        max_subset_size = len(universe)
    pair_choice = {}
    for u, v in itertools.combinations(universe, 2):
        chosen = choose(model, (u, v))
        pair_choice[u, v] = u in chosen
        pair_choice[v, u] = v in chosen
    for size in range(3, max_subset_size + 1):
        for A in itertools.combinations(universe, size):
            chosen = set(choose(model, A))
            for u in A:
                pairwise = all(pair_choice[u, v] for v in A if v != u)
                if (u in chosen) != pairwise:
                    return BinarityResult(False, A, u)
    return BinarityResult(True)


def extract_order(model, probes: Sequence[Vector], max_subset_size: int | None = None) -> ProperCone:
    """Recover the single order behind a binary model, restricted to probes.

    The generators are the probes ``u`` for which ``{u}`` is a rejection
    set, i.e. ``u`` is better than zero.  Binarity is checked first on the
    probes together with the origin.
    """
    probes = canonical(probes)
    if any(is_zero(u) for u in probes):
        raise ValueError("probes must be nonzero")
    universe = probes + (zero(model.dim),)
    res = is_binary_on(model, universe, max_subset_size)
    if not res:
        raise NotBinary("model is not binary on the probes", res.option_set, res.option)
    return make_cone([u for u in probes if rejects_zero(model, (u,))], dim=model.dim)


def represent(model) -> list:
    """Cones whose union-of-maximal-sets choice reproduces an assessment model.

    These are the blunt selection cones; an empty assessment is
    represented by the single empty cone (the vacuous order).
    """
    if isinstance(model, Cones):
        return list(model.cones)
    if not isinstance(model, Assessment):
        model = Assessment(model)
    cones = selection_cones(model.family)
    return cones or [ProperCone.empty(model.dim)]


def check_pc_axioms(model, probe_sets: Sequence[Sequence[Vector]], translations: Sequence[Vector],
                    coeff_grid: Sequence, *, max_family: int = 3) -> AxiomReport:
    """Sampled check of the four axioms of a proper choice function."""
    report = AxiomReport()
    probe_sets = [canonical(A) for A in probe_sets]
    points = sorted({u for A in probe_sets for u in A})
    for u in points:
        report.record("PC0", choose(model, (u,)) == [u], u)
    for A in probe_sets:
        chosen = choose(model, A)
        for w in translations:
            shifted = choose(model, [add(u, w) for u in A])
            report.record("PC1", shifted == sorted(add(u, w) for u in chosen), (A, w))
    rejecting = [A for A in probe_sets if rejects_zero(model, A)]
    for r in range(1, min(max_family, len(rejecting)) + 1):
        for family in itertools.combinations(rejecting, r):
            for lam in coefficient_maps(r, coeff_grid):
                combo = pk2_combination(list(family), lambda _i, lam=lam: lam)
                report.record("PC2", rejects_zero(model, combo), (family, lam))
    for B in probe_sets:
        chosen_b = set(choose(model, B))
        for r in range(1, len(B)):
            for A in itertools.combinations(B, r):
                chosen_a = set(choose(model, A))
                for u in A:
                    if u in chosen_b:
                        report.record("PC3", u in chosen_a, (A, B, u))
    for axiom in ("PC0", "PC1", "PC2", "PC3"):
        report.checked.setdefault(axiom, 0)
        report.violations.setdefault(axiom, [])
    return report


def check_rejection_axioms(model, sample, coeff_grid) -> AxiomReport:
    """PK0-PK3 on the model's rejection sets, over a sample of option sets."""
    return check_pk_axioms_with(lambda S: member(model, S), sample, coeff_grid)
