"""Exact rational linear algebra and conic feasibility.

Options are plain tuples of :class:`fractions.Fraction`.  Tuples are
hashable and compare lexicographically, which gives the canonical output
order used everywhere else in the package.

All linear programs are solved by a dense two-phase simplex method over
the rationals, using Bland's rule so that degenerate pivots cannot cycle.
"""

from __future__ import annotations

import contextlib
import enum
import functools
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionError

Vector = tuple  # tuple[Fraction, ...]


# -- rationals and vectors ---------------------------------------------------

def as_rational(value) -> Fraction:
    """Convert an int, Fraction or "p/q" string to a Fraction.

    Floats are refused: a float literal such as 0.1 is not the rational
    the user most likely meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def vec(*coords) -> Vector:
    """Build a vector; ``vec(1, 0)`` and ``vec([1, 0])`` are equivalent."""
    if len(coords) == 1 and not isinstance(coords[0], (int, str, Fraction)):
        coords = tuple(coords[0])
    if not coords:
        raise ValueError("vectors must have positive dimension")
    return tuple(as_rational(c) for c in coords)


def vectors(rows: Iterable) -> list:
    return [vec(r) for r in rows]


def zero(dim: int) -> Vector:
    return (Fraction(0),) * dim


def ones(dim: int) -> Vector:
    return (Fraction(1),) * dim


def unit(dim: int, i: int) -> Vector:
    return tuple(Fraction(int(j == i)) for j in range(dim))


def is_zero(u: Vector) -> bool:
    return not any(u)


def add(u: Vector, v: Vector) -> Vector:
    check_dims(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    check_dims(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(lam, u: Vector) -> Vector:
    lam = as_rational(lam)
    return tuple(lam * a for a in u)


def neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def combination(coeffs: Sequence, vecs: Sequence[Vector], dim: int) -> Vector:
    """Return ``sum(c * v)`` over paired coefficients and vectors."""
    out = [Fraction(0)] * dim
    for c, v in zip(coeffs, vecs):
        if c:
            for i, a in enumerate(v):
                out[i] += c * a
    return tuple(out)


def check_dims(*vs: Vector, dim: int | None = None) -> int | None:
    """Raise DimensionError unless all vectors share one dimension."""
    for v in vs:
        if dim is None:
            dim = len(v)
        elif len(v) != dim:
            raise DimensionError(f"expected dimension {dim}, got {len(v)}")
    return dim


def canonical(points: Iterable[Vector]) -> tuple:
    """Deduplicate and sort points lexicographically by coordinates."""
    return tuple(sorted(set(points)))


def format_rational(q: Fraction) -> str:
    return str(q)


def format_vector(u: Vector) -> str:
    return "(" + ",".join(str(a) for a in u) + ")"


# -- simplex -----------------------------------------------------------------

class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


class LPResult(NamedTuple):
    status: LPStatus
    value: Fraction | None = None
    x: tuple | None = None


def _pivot(rows, obj, r, c):
    prow = rows[r]
    p = prow[c]
    if p != 1:
        prow[:] = [a / p for a in prow]
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                row[:] = [a - f * b for a, b in zip(row, prow)]
    f = obj[c]
    if f:
        obj[:] = [a - f * b for a, b in zip(obj, prow)]


def _run_bland(rows, obj, basis, allowed):
    """Maximise from a feasible basis; ``obj`` holds reduced costs."""
    while True:
        enter = next((j for j in allowed if obj[j] > 0), None)
        if enter is None:
            return LPStatus.OPTIMAL
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                key = (row[-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return LPStatus.UNBOUNDED
        r = best[1]
        _pivot(rows, obj, r, enter)
        basis[r] = enter


def linprog_exact(A: Sequence[Sequence], b: Sequence, c: Sequence | None = None) -> LPResult:
    """Maximise ``c @ x`` subject to ``A x = b`` and ``x >= 0``, exactly.

    With ``c=None`` only phase one runs and the result is OPTIMAL (with
    value 0) for any feasible system.
    """
    m = len(A)
    n = len(A[0]) if m else (len(c) if c is not None else 0)
    rows = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * a) for a in A[i]]
        row += [Fraction(int(k == i)) for k in range(m)]
        row.append(Fraction(sign * b[i]))
        rows.append(row)
    basis = list(range(n, n + m))

    # phase one: maximise -sum(artificials)
    obj = [Fraction(0)] * (n + m + 1)
    for row in rows:
        for j in range(n):
            obj[j] += row[j]
        obj[-1] += row[-1]
    _run_bland(rows, obj, basis, range(n + m))
    if obj[-1] != 0:
        return LPResult(LPStatus.INFEASIBLE)

    # drive artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(rows):
        if basis[i] >= n:
            j = next((j for j in range(n) if rows[i][j] != 0), None)
            if j is None:
                del rows[i], basis[i]
                continue
            _pivot(rows, [Fraction(0)] * (n + m + 1), i, j)
            basis[i] = j
        i += 1
    rows = [row[:n] + row[-1:] for row in rows]

    if c is None:
        x = [Fraction(0)] * n
        for i, bj in enumerate(basis):
            x[bj] = rows[i][-1]
        return LPResult(LPStatus.OPTIMAL, Fraction(0), tuple(x))

    c = [as_rational(v) for v in c]
    obj = c + [Fraction(0)]
    for i, bj in enumerate(basis):
        cb = c[bj]
        if cb:
            obj = [a - cb * r for a, r in zip(obj, rows[i])]
    status = _run_bland(rows, obj, basis, range(n))
    if status is LPStatus.UNBOUNDED:
        return LPResult(status)
    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        x[bj] = rows[i][-1]
    return LPResult(LPStatus.OPTIMAL, -obj[-1], tuple(x))


# -- feasibility query log (used by the oracle cross-checks) -----------------

_query_log: list | None = None


@contextlib.contextmanager
def record_feasibility_queries():
    """Collect every ``(generators, target)`` pair passed to conic_feasible.

    Yields a dict mapping each distinct query to the boolean that was
    returned.  Nesting is not supported.
    """
    global _query_log
    previous = _query_log
    log: dict = {}
    _query_log = log
    try:
        yield log
    finally:
        _query_log = previous


# -- conic queries -----------------------------------------------------------

def _columns(generators):
    dim = len(generators[0])
    return [[g[i] for g in generators] for i in range(dim)]


@functools.lru_cache(maxsize=1 << 17)
def _conic_feasible(generators: tuple, target: Vector) -> bool:
    if not generators:
        return is_zero(target)
    return linprog_exact(_columns(generators), target).status is LPStatus.OPTIMAL


def conic_feasible(generators: Sequence[Vector], target: Vector) -> bool:
    """Is ``target`` a nonnegative combination of ``generators``?

    The empty combination is allowed, so the zero vector is always
    feasible.

    >>> conic_feasible([vec(1, 0), vec(1, 1)], vec(2, 1))
    True
    >>> conic_feasible([vec(1, 0)], vec(0, 1))
    False
    """
    generators = tuple(generators)
    check_dims(target, *generators)
    result = _conic_feasible(generators, target)
    note_feasibility(generators, target, result)
    return result


def note_feasibility(generators: tuple, target: Vector, result: bool) -> None:
    """Log a query answered elsewhere, e.g. in a worker process."""
    if _query_log is not None:
        _query_log[(tuple(generators), target)] = result


def zero_nontrivially_in_cone(generators: Sequence[Vector]) -> bool:
    """True iff some convex combination of the generators is zero.

    That is exactly the condition under which the positive hull of the
    generators contains the origin.  The positive hull of nothing is
    empty, so an empty list gives False.  Decided as a conic query on the
    lifted vectors ``(g, 1)`` so it is logged like any other.
    """
    generators = tuple(generators)
    if not generators:
        return False
    check_dims(*generators)
    return conic_feasible(*lifted_zero_query(generators))


def lifted_zero_query(generators: Sequence[Vector]) -> tuple:
    """The conic query ``(g, 1)`` vs ``(0, ..., 0, 1)`` used for bluntness."""
    one = Fraction(1)
    lifted = tuple(tuple(g) + (one,) for g in generators)
    return lifted, zero(len(lifted[0]) - 1) + (one,)


class RayStatus(enum.Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


class RaySup(NamedTuple):
    status: RayStatus
    value: Fraction | None = None

    def __str__(self):
        if self.status is RayStatus.BOUNDED:
            return f"Bounded({self.value})"
        return self.status.name.capitalize()


def _ray_lp(generators, base, direction, sense):
    dim = len(base)
    k = len(generators)
    # variables: lambda_1..lambda_k, eps ; sum lambda g - eps d = base
    A = [[g[i] for g in generators] + [-direction[i]] for i in range(dim)]
    c = [Fraction(0)] * k + [Fraction(sense)]
    return linprog_exact(A, list(base), c)


def sup_ray_parameter(generators: Sequence[Vector], base: Vector, direction: Vector) -> RaySup:
    """Largest ``eps >= 0`` with ``base + eps * direction`` in the closed cone.

    The closed cone is the set of nonnegative combinations of the
    generators, so the origin counts as feasible here.
    """
    generators = tuple(generators)
    check_dims(base, direction, *generators)
    res = _ray_lp(generators, base, direction, 1)
    if res.status is LPStatus.INFEASIBLE:
        return RaySup(RayStatus.INFEASIBLE)
    if res.status is LPStatus.UNBOUNDED:
        return RaySup(RayStatus.UNBOUNDED)
    return RaySup(RayStatus.BOUNDED, res.value)


def inf_ray_parameter(generators: Sequence[Vector], base: Vector, direction: Vector):
    """Smallest feasible ``eps >= 0``, or None when no ``eps`` is feasible."""
    generators = tuple(generators)
    check_dims(base, direction, *generators)
    res = _ray_lp(generators, base, direction, -1)
    if res.status is LPStatus.INFEASIBLE:
        return None
    return -res.value
