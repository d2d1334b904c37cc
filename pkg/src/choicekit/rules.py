"""Rules, rule sets and compatibility of cones with them.

A rule ``(premises, conclusion)`` reads: if every premise set meets the
cone, the conclusion set must meet it too.  A conclusion of ``None``
stands for the empty set, which no cone meets.

Option sets come in three finitely presented shapes plus a union used
only when monotonification merges a finite set into an infinite one:

* :class:`FinitePoints` - an explicit nonempty point set,
* :class:`PosiHull` - all strictly positive combinations of some points,
* :class:`OpenRay` - ``{base + eps * direction : eps > 0}``,
* :class:`Union` - a union of the above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import DimensionError, InvalidProbe, PremiseFree, UnknownScheme
from .exact_geometry import (
    LPStatus, RayStatus, add, canonical, check_dims, format_vector,
    inf_ray_parameter, is_zero, linprog_exact, neg, ones, sup_ray_parameter, unit, vec,
)
from .orders_cones import ProperCone, cone_contains


# -- option sets -------------------------------------------------------------

def _points(points) -> tuple:
    pts = canonical(vec(p) for p in points)
    if not pts:
        raise ValueError("option sets must be nonempty")
    check_dims(*pts)
    return pts


@dataclass(frozen=True)
class FinitePoints:
    points: tuple

    def __init__(self, points):
        object.__setattr__(self, "points", _points(points))

    @property
    def dim(self):
        return len(self.points[0])

    def __str__(self):
        return "{" + ",".join(format_vector(p) for p in self.points) + "}"


@dataclass(frozen=True)
class PosiHull:
    points: tuple

    def __init__(self, points):
        object.__setattr__(self, "points", _points(points))

    @property
    def dim(self):
        return len(self.points[0])

    def __str__(self):
        return "posi{" + ",".join(format_vector(p) for p in self.points) + "}"


@dataclass(frozen=True)
class OpenRay:
    base: tuple
    direction: tuple

    def __init__(self, base, direction):
        base, direction = vec(base), vec(direction)
        check_dims(base, direction)
        if is_zero(direction):
            raise ValueError("ray direction must be nonzero")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "direction", direction)

    @property
    def dim(self):
        return len(self.base)

    def __str__(self):
        return f"ray({format_vector(self.base)}+eps*{format_vector(self.direction)})"


@dataclass(frozen=True)
class Union:
    parts: tuple

    def __init__(self, parts):
        flat = []
        for p in parts:
            flat.extend(p.parts if isinstance(p, Union) else [p])
        if not flat:
            raise ValueError("a union needs at least one part")
        check_dims(*(_probe_vector(p) for p in flat))
        object.__setattr__(self, "parts", tuple(flat))

    @property
    def dim(self):
        return self.parts[0].dim

    def __str__(self):
        return " u ".join(str(p) for p in self.parts)


def _probe_vector(S):
    return S.base if isinstance(S, OpenRay) else S.points[0]


def union_with(S, M: FinitePoints):
    """``S u M``; finite sets merge pointwise, anything else becomes a Union."""
    if S is None:
        return M
    if S.dim != M.dim:
        raise DimensionError("cannot unite option sets of different dimension")
    if isinstance(S, FinitePoints):
        return FinitePoints(S.points + M.points)
    if isinstance(S, Union):
        finite = [p for p in S.parts if isinstance(p, FinitePoints)]
        others = [p for p in S.parts if not isinstance(p, FinitePoints)]
        merged = FinitePoints(sum((p.points for p in finite), M.points))
        return Union(others + [merged])
    return Union([S, M])


def _posi_meets(points, generators, dim) -> bool:
    m, k = len(points), len(generators)
    # variables mu_1..mu_m, lambda_1..lambda_k
    A = [[p[i] for p in points] + [-g[i] for g in generators] for i in range(dim)]
    A.append([Fraction(1)] * m + [Fraction(0)] * k)
    b = [Fraction(0)] * dim + [Fraction(1)]
    if linprog_exact(A, b).status is LPStatus.INFEASIBLE:
        return False
    # the common point sum(mu p) must be nonzero somewhere in the region
    for i in range(dim):
        obj = [p[i] for p in points] + [Fraction(0)] * k
        for sense in (1, -1):
            res = linprog_exact(A, b, [sense * c for c in obj])
            if res.status is LPStatus.UNBOUNDED or res.value > 0:
                return True
    return False


def _ray_meets(base, direction, generators) -> bool:
    sup = sup_ray_parameter(generators, base, direction)
    if sup.status is RayStatus.INFEASIBLE:
        return False
    if sup.status is RayStatus.BOUNDED:
        if sup.value <= 0:
            return False
        lo = inf_ray_parameter(generators, base, direction)
        if lo == sup.value:
            # a single feasible eps; it counts only if the point is nonzero
            point = tuple(b + sup.value * d for b, d in zip(base, direction))
            return not is_zero(point)
    # infinitely many feasible eps > 0, at most one of which gives zero
    return True


def optset_meets_cone(S, D: ProperCone) -> bool:
    """Whether the option set ``S`` shares at least one option with ``D``."""
    if S is None:
        return False
    if S.dim != D.dim:
        raise DimensionError(f"option set has dimension {S.dim}, cone has {D.dim}")
    if isinstance(S, FinitePoints):
        return any(cone_contains(D, p) for p in S.points)
    if isinstance(S, PosiHull):
        if any(cone_contains(D, p) for p in S.points):
            return True
        return _posi_meets(S.points, D.generators, D.dim)
    if isinstance(S, OpenRay):
        return _ray_meets(S.base, S.direction, D.generators)
    if isinstance(S, Union):
        return any(optset_meets_cone(p, D) for p in S.parts)
    raise TypeError(f"not an option set: {S!r}")


# -- rules -------------------------------------------------------------------

@dataclass(frozen=True)
class Rule:
    premises: tuple = ()
    conclusion: object = None

    def __init__(self, premises=(), conclusion=None):
        premises = tuple(premises)
        parts = list(premises) + ([conclusion] if conclusion is not None else [])
        if parts and len({p.dim for p in parts}) > 1:
            raise DimensionError("rule mixes option sets of different dimension")
        object.__setattr__(self, "premises", premises)
        object.__setattr__(self, "conclusion", conclusion)

    @property
    def dim(self):
        parts = list(self.premises) + [self.conclusion]
        return next((p.dim for p in parts if p is not None), None)

    def __str__(self):
        prem = "{" + ", ".join(str(p) for p in self.premises) + "}"
        concl = "empty" if self.conclusion is None else str(self.conclusion)
        return f"({prem}, {concl})"


class Compatibility(NamedTuple):
    compatible: bool
    witness_index: int | None = None
    witness: Rule | None = None

    def __bool__(self):
        return self.compatible


def check_rules(member, rules: Sequence[Rule]) -> Compatibility:
    """Generic compatibility check against a membership predicate.

    ``member(S)`` must return False for the empty conclusion ``None``.
    """
    for i, rule in enumerate(rules):
        if all(member(A) for A in rule.premises):
            if rule.conclusion is None or not member(rule.conclusion):
                return Compatibility(False, i, rule)
    return Compatibility(True)


def d_compatible(D: ProperCone, rules: Sequence[Rule]) -> Compatibility:
    """Check every rule against ``D``; the first violated rule is the witness."""
    for r in rules:
        if r.dim is not None and r.dim != D.dim:
            raise DimensionError(f"rule has dimension {r.dim}, cone has {D.dim}")
    return check_rules(lambda S: optset_meets_cone(S, D), rules)


def monotonify_rule(rule: Rule, M) -> Rule:
    """Unite ``M`` into every premise and into the conclusion."""
    if not rule.premises:
        raise PremiseFree("only rules with a nonempty premise family are extended")
    if not isinstance(M, FinitePoints):
        M = FinitePoints(M)
    return Rule([union_with(A, M) for A in rule.premises], union_with(rule.conclusion, M))


def monotonify(rules: Sequence[Rule], sets: Sequence) -> list:
    """The rules followed by every extension of a premised rule by each set."""
    out = list(rules)
    for M in sets:
        out.extend(monotonify_rule(r, M) for r in rules if r.premises)
    return out


# -- concrete rule families --------------------------------------------------

SCHEMES = ("C", "T", "W", "W2", "M", "A")
COHERENCE_VARIANTS = ("strict", "weak")


def _in_positive_gambles(u, variant) -> bool:
    if variant == "strict":
        return all(a > 0 for a in u)
    return all(a >= 0 for a in u) and not is_zero(u)


def instantiate_scheme(scheme: str, *, probes=(), pairs=(), sets=(), variant="strict") -> list:
    """Finite instance of one of the rule families over user-given probes.

    ``probes`` feed C, T and A; ``pairs`` of options feed W and W2;
    ``sets`` of options feed M.  ``variant`` picks the coherence flavour:
    "strict" (every coordinate positive) or "weak" (nonnegative, nonzero).
    """
    scheme = scheme.upper().removeprefix("R_")
    if scheme not in SCHEMES:
        raise UnknownScheme(f"unknown rule scheme {scheme!r}; expected one of {SCHEMES}")
    if scheme == "C" and variant not in COHERENCE_VARIANTS:
        raise ValueError(f"coherence variant must be one of {COHERENCE_VARIANTS}")
    rules = []
    if scheme == "C":
        for u in map(vec, probes):
            if not _in_positive_gambles(u, variant):
                raise InvalidProbe(f"{format_vector(u)} is not a positive gamble ({variant})")
            rules.append(Rule((), FinitePoints([u])))
    elif scheme == "T":
        for u in map(vec, probes):
            if is_zero(u):
                raise InvalidProbe("totality is imposed on nonzero options only")
            rules.append(Rule((), FinitePoints([u, neg(u)])))
    elif scheme in ("W", "W2"):
        for u, v in pairs:
            u, v = vec(u), vec(v)
            s = add(u, v)
            if scheme == "W":
                rules.append(Rule([FinitePoints([s, neg(s)])], FinitePoints([u, neg(u), v, neg(v)])))
            else:
                rules.append(Rule([FinitePoints([s])], FinitePoints([u, v])))
    elif scheme == "M":
        for B in sets:
            B = FinitePoints(B)
            rules.append(Rule([PosiHull(B.points)], B))
    else:  # A
        for u in map(vec, probes):
            rules.append(Rule([FinitePoints([u])], OpenRay(u, neg(ones(len(u))))))
    return rules


def coherent_exact(D: ProperCone, variant: str = "strict") -> bool:
    """Does ``D`` contain every positive gamble?

    For a finitely generated cone both coherence flavours reduce to
    containing the unit vectors: the cone plus the origin is closed, so
    it contains the open positive orthant iff it contains the closed one.
    """
    if variant not in COHERENCE_VARIANTS:
        raise ValueError(f"coherence variant must be one of {COHERENCE_VARIANTS}")
    return all(cone_contains(D, unit(D.dim, i)) for i in range(D.dim))


def archimedean_exact(D: ProperCone) -> bool:
    """Can a small positive constant be subtracted from every member of ``D``?

    Checking the generators suffices: the slack found for each generator
    adds up along any positive combination of them.
    """
    down = neg(ones(D.dim))
    return all(optset_meets_cone(OpenRay(g, down), D) for g in D.generators)
