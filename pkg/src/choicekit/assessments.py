"""Finite assessments and their natural extension.

An assessment is a finite family of finite option sets, each of which is
asserted to contain some option strictly better than zero.  Its natural
extension is the smallest proper set of option sets containing the
family.  Membership is decided through selection cones: pick one option
from every assessed set and take the positive hull of the picks.  Any
proper cone meeting every assessed set contains one of these hulls, so an
option set belongs to the natural extension exactly when it meets every
blunt selection cone.
"""

from __future__ import annotations

import contextlib
import contextvars
import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CombinatorialLimit, DimensionError, InconsistentAssessment
from .exact_geometry import (
    canonical, is_zero, lifted_zero_query, note_feasibility, zero_nontrivially_in_cone,
)
from .oracle import coefficient_maps, pk2_combination
from .orders_cones import AxiomReport, ProperCone
from .rules import Compatibility, FinitePoints, Rule, Union, check_rules, optset_meets_cone

DEFAULT_MAX_SELECTIONS = 10**6

_max_selections = contextvars.ContextVar("max_selections", default=None)
_workers = contextvars.ContextVar("workers", default=1)


@contextlib.contextmanager
def settings(max_selections: int | None = None, workers: int | None = None):
    """Temporarily set the selection limit and worker count for this context."""
    tokens = []
    if max_selections is not None:
        tokens.append((_max_selections, _max_selections.set(max_selections)))
    if workers is not None:
        tokens.append((_workers, _workers.set(workers)))
    try:
        yield
    finally:
        for var, token in reversed(tokens):
            var.reset(token)


def max_selections_default() -> int:
    """Selection limit: ``settings()``, then ``CHOICEKIT_MAX_SELECTIONS``, then 10**6."""
    if _max_selections.get() is not None:
        return _max_selections.get()
    env = os.environ.get("CHOICEKIT_MAX_SELECTIONS")
    return int(env) if env else DEFAULT_MAX_SELECTIONS


@dataclass(frozen=True)
class AssessmentFamily:
    dim: int
    basis: tuple = ()

    def __init__(self, basis: Iterable = (), dim: int | None = None):
        sets = []
        for A in basis:
            sets.append(A if isinstance(A, FinitePoints) else FinitePoints(A))
        dims = {A.dim for A in sets}
        if dim is not None:
            dims.add(dim)
        if len(dims) > 1:
            raise DimensionError(f"assessment mixes dimensions {sorted(dims)}")
        if not dims:
            raise ValueError("dimension of an empty assessment must be given explicitly")
        # order of the basis is irrelevant; keep one canonical order
        object.__setattr__(self, "dim", dims.pop())
        object.__setattr__(self, "basis", tuple(sorted(set(sets), key=lambda A: A.points)))


def selection_count(F: AssessmentFamily) -> int:
    return math.prod(len(A.points) for A in F.basis)


def _is_blunt(gens):
    return not zero_nontrivially_in_cone(gens)


_cone_cache: dict = {}
_CONE_CACHE_SIZE = 4096


def _selection_cones(basis: tuple, dim: int, workers: int) -> tuple:
    key = (basis, dim)
    if key in _cone_cache:
        return _cone_cache[key]
    candidates = sorted({canonical(phi) for phi in itertools.product(*(A.points for A in basis))})
    if workers > 1 and len(candidates) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blunt = list(pool.map(_is_blunt, candidates, chunksize=32))
        # the workers' logs are lost, so record their answers here
        for g, ok in zip(candidates, blunt):
            note_feasibility(*lifted_zero_query(g), not ok)
    else:
        blunt = [_is_blunt(g) for g in candidates]
    cones = tuple(ProperCone(dim, g) for g, ok in zip(candidates, blunt) if ok)
    if len(_cone_cache) >= _CONE_CACHE_SIZE:
        _cone_cache.clear()
    _cone_cache[key] = cones
    return cones


def selection_cones(F: AssessmentFamily, max_selections: int | None = None,
                    workers: int | None = None) -> list:
    """The blunt cones ``posi(phi(basis))`` over all selection maps ``phi``.

    Cones with identical generator sets are reported once, sorted by
    generators.  Raises CombinatorialLimit when the number of selection
    maps exceeds ``max_selections``.
    """
    if not F.basis:
        return []
    limit = max_selections_default() if max_selections is None else max_selections
    n = selection_count(F)
    if n > limit:
        raise CombinatorialLimit(f"{n} selection maps exceed the limit of {limit}")
    workers = _workers.get() if workers is None else workers
    return list(_selection_cones(F.basis, F.dim, workers))


def is_consistent(F: AssessmentFamily, max_selections: int | None = None) -> bool:
    return not F.basis or bool(selection_cones(F, max_selections))


def _require_consistent(F, max_selections):
    cones = selection_cones(F, max_selections)
    if F.basis and not cones:
        raise InconsistentAssessment("assessment admits no proper selection cone")
    return cones


def refutation_certificate(F: AssessmentFamily, S, max_selections: int | None = None):
    """A selection cone that ``S`` misses, or None if ``S`` is a member.

    With an empty basis nothing is a member; the certificate is then the
    empty cone.
    """
    if S is not None and S.dim != F.dim:
        raise DimensionError(f"option set has dimension {S.dim}, assessment has {F.dim}")
    cones = _require_consistent(F, max_selections)
    if not F.basis:
        return ProperCone.empty(F.dim)
    for D in cones:
        if not optset_meets_cone(S, D):
            return D
    return None


def in_natural_extension(F: AssessmentFamily, S, max_selections: int | None = None) -> bool:
    """Is ``S`` in the natural extension of ``F``?  ``None`` is the empty set."""
    if S is None:
        _require_consistent(F, max_selections)
        return False
    return refutation_certificate(F, S, max_selections) is None


def k_compatible(F: AssessmentFamily, rules: Sequence[Rule],
                 max_selections: int | None = None) -> Compatibility:
    """Check each rule against the natural extension of ``F``."""
    _require_consistent(F, max_selections)
    return check_rules(lambda S: in_natural_extension(F, S, max_selections), rules)


# -- sampled check of the PK axioms ------------------------------------------

def check_pk_axioms_with(member, sample: Sequence, coeff_grid: Sequence, *,
                         max_family: int = 3) -> AxiomReport:
    """Check PK0-PK3 for an arbitrary membership predicate on a sample.

    ``member`` receives option sets (or None for the empty set).  Only
    :class:`FinitePoints` in the sample take part in the PK1 and PK2
    checks; PK2 uses subfamilies of at most ``max_family`` member sets
    and coefficient maps valued in the grid, shared across selections.
    """
    report = AxiomReport()
    report.record("PK0", not member(None), None)
    finite = [S for S in sample if isinstance(S, FinitePoints)]
    members = [S for S in finite if member(S)]
    for S in members:
        if any(is_zero(p) for p in S.points):
            rest = [p for p in S.points if not is_zero(p)]
            report.record("PK1", bool(rest) and member(FinitePoints(rest)), S)
    report.checked.setdefault("PK1", 0)
    for r in range(1, min(max_family, len(members)) + 1):
        for family in itertools.combinations(members, r):
            pts = [A.points for A in family]
            for lam in coefficient_maps(r, coeff_grid):
                combo = pk2_combination(pts, lambda _i, lam=lam: lam)
                report.record("PK2", member(FinitePoints(combo)), (family, lam))
    report.checked.setdefault("PK2", 0)
    points = sorted({p for S in finite for p in S.points})
    for S in sample:
        if member(S):
            for p in points:
                bigger = FinitePoints(S.points + (p,)) if isinstance(S, FinitePoints) \
                    else Union([S, FinitePoints([p])])
                report.record("PK3", member(bigger), (S, p))
    report.checked.setdefault("PK3", 0)
    for axiom in ("PK0", "PK1", "PK2", "PK3"):
        report.violations.setdefault(axiom, [])
    return report


def check_pk_axioms(F: AssessmentFamily, sample: Sequence, coeff_grid: Sequence,
                    max_selections: int | None = None) -> AxiomReport:
    """Sampled PK0-PK3 check of the natural extension of ``F``."""
    _require_consistent(F, max_selections)
    return check_pk_axioms_with(lambda S: in_natural_extension(F, S, max_selections),
                                sample, coeff_grid)
