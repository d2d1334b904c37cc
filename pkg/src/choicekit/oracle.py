"""Independent verification machinery.

``fm_conic_feasible`` decides the same question as
:func:`choicekit.exact_geometry.conic_feasible` without any pivoting: the
coefficient variables are projected out one at a time, equalities by
substitution and inequalities by Fourier-Motzkin combination.  It is
exponential in the worst case and meant for cross-checking small
instances only.

``closure_witnesses`` builds option sets that belong to the natural
extension of an assessment by explicit construction, never by querying
the natural extension itself.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import CombinatorialLimit, InconsistentAssessment, VariableLimit
from .exact_geometry import Vector, as_rational, check_dims, canonical, combination, is_zero

DEFAULT_MAX_VARIABLES = 16


def _normalise(row):
    """Scale an inequality ``a . x <= b`` to coprime integer coefficients."""
    den = 1
    for q in row:
        den = lcm(den, q.denominator)
    ints = [int(q * den) for q in row]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(Fraction(a) for a in ints)


def _eliminate_equalities(eqs, ineqs, nvars):
    """Substitute each equality into the rest; None means infeasible."""
    eqs = [list(e) for e in eqs]
    ineqs = [list(r) for r in ineqs]
    while eqs:
        eq = eqs.pop()
        j = next((j for j in range(nvars) if eq[j] != 0), None)
        if j is None:
            if eq[-1] != 0:
                return None
            continue
        a = eq[j]
        for other in itertools.chain(eqs, ineqs):
            f = other[j]
            if f:
                other[:] = [o - f / a * e for o, e in zip(other, eq)]
    return ineqs


def fm_project(ineqs, nvars, max_variables=DEFAULT_MAX_VARIABLES):
    """Project ``{x : A x <= b}`` onto no variables; True iff nonempty."""
    if nvars > max_variables:
        raise VariableLimit(f"{nvars} variables to eliminate, limit is {max_variables}")
    rows = {_normalise(r) for r in ineqs}
    for j in range(nvars):
        pos, negs, rest = [], [], []
        for r in rows:
            (pos if r[j] > 0 else negs if r[j] < 0 else rest).append(r)
        new = set(rest)
        for p in pos:
            for q in negs:
                # p[j] > 0 > q[j]: -q[j]*p + p[j]*q cancels variable j
                combo = [-q[j] * a + p[j] * b for a, b in zip(p, q)]
                new.add(_normalise(combo))
        rows = new
    return all(r[-1] >= 0 for r in rows)


def fm_conic_feasible(generators: Sequence[Vector], target: Vector,
                      max_variables: int = DEFAULT_MAX_VARIABLES) -> bool:
    """Same contract as ``conic_feasible``, decided by variable elimination."""
    generators = list(generators)
    dim = check_dims(target, *generators)
    k = len(generators)
    # rows are coefficient lists over lambda_1..lambda_k followed by the rhs
    eqs = [[g[i] for g in generators] + [target[i]] for i in range(dim)]
    nonneg = [[Fraction(-int(i == j)) for i in range(k)] + [Fraction(0)] for j in range(k)]
    ineqs = _eliminate_equalities(eqs, nonneg, k)
    if ineqs is None:
        return False
    return fm_project(ineqs, k, max_variables)


def coefficient_maps(size: int, grid, *, include_zero: bool = True):
    """All maps from ``size`` slots into the grid with nonempty support."""
    values = sorted(set(as_rational(g) for g in grid) | ({Fraction(0)} if include_zero else set()))
    for combo in itertools.product(values, repeat=size):
        if any(combo):
            yield combo


def _selections(basis):
    return itertools.product(*basis)


def pk2_combination(family, coeffs_per_selection):
    """Build the option set ``{sum_A lambda_phi(A) phi(A) : phi}``.

    ``family`` is a list of finite point tuples; ``coeffs_per_selection``
    maps each selection index to its coefficient tuple.
    """
    dim = len(family[0][0])
    out = []
    for idx, phi in enumerate(_selections(family)):
        out.append(combination(coeffs_per_selection(idx), phi, dim))
    return canonical(out)


def closure_witnesses(family, coeff_grid, extra_points=(), *, random_maps: int = 8,
                      seed: int = 0, max_selections: int = 10**6) -> list:
    """Option sets provably in the natural extension of ``family``.

    One PK2 step over the whole basis, then zero removal, then optional
    point additions.  Every coefficient map valued in ``coeff_grid``
    (zero allowed, nonempty support) is used uniformly across selections;
    in addition ``random_maps`` sets are built with an independently
    drawn map per selection, since enumerating all per-selection
    assignments is doubly exponential.

    Returns a list of :class:`~choicekit.rules.FinitePoints`.
    """
    from .assessments import is_consistent, selection_count
    from .rules import FinitePoints

    if not is_consistent(family, max_selections=max_selections):
        raise InconsistentAssessment("assessment admits no proper selection cone")
    basis = [s.points for s in family.basis]
    if not basis:
        return []
    nsel = selection_count(family)
    if nsel > max_selections:
        raise CombinatorialLimit(f"{nsel} selections exceed limit {max_selections}")
    maps = list(coefficient_maps(len(basis), coeff_grid))
    combined = [pk2_combination(basis, lambda idx, m=m: m) for m in maps]
    rng = random.Random(seed)
    for _ in range(random_maps):
        per_sel = [rng.choice(maps) for _ in range(nsel)]
        combined.append(pk2_combination(basis, per_sel.__getitem__))

    extras = [tuple(as_rational(a) for a in p) for p in extra_points]
    additions = [()]
    for r in range(1, len(extras) + 1):
        additions.extend(itertools.combinations(extras, r))

    seen = set()
    out = []
    for pts in combined:
        pts = tuple(p for p in pts if not is_zero(p))
        if not pts:
            # only possible if every selection sums to zero, which a
            # consistent assessment rules out
            raise AssertionError("PK2 combination collapsed to the zero vector")
        for add in additions:
            s = canonical(pts + add)
            if s not in seen:
                seen.add(s)
                out.append(FinitePoints(s))
    return out
