"""Proper sets of options (blunt convex cones) and the orders they induce.

A finitely generated cone ``D = posi(generators)`` is proper exactly when
no convex combination of its generators vanishes.  Through
``u > v  <=>  u - v in D`` every such cone is a strict partial order that
is compatible with addition and positive scaling, and choosing the
undominated options of a finite set is plain maximality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, EmptyOptionSet, EmptyOrderSet, NotBlunt
from .exact_geometry import (
    Vector, add, canonical, check_dims, conic_feasible, format_vector, is_zero,
    scale, sub, vec, zero, zero_nontrivially_in_cone,
)


@dataclass(frozen=True)
class ProperCone:
    """A blunt cone ``posi(generators)``; build it with :func:`make_cone`.

    Generators are stored deduplicated and sorted, so two cones built
    from the same generator set compare equal.
    """

    dim: int
    generators: tuple = ()

    def __contains__(self, u):
        return cone_contains(self, u)

    def __str__(self):
        return "posi{" + ",".join(format_vector(g) for g in self.generators) + "}"

    @classmethod
    def empty(cls, dim: int) -> "ProperCone":
        return cls(dim, ())


def make_cone(generators: Iterable, dim: int | None = None) -> ProperCone:
    """Validate bluntness and wrap the generators in a ProperCone.

    Raises NotBlunt when the generators do not define a proper set of
    options.  ``dim`` is required only for an empty generator list.
    """
    gens = [vec(g) for g in generators]
    dim = check_dims(*gens, dim=dim)
    if dim is None:
        raise ValueError("dimension of an empty cone must be given explicitly")
    if zero_nontrivially_in_cone(gens):
        raise NotBlunt("generators span a cone containing the zero vector")
    return ProperCone(dim, canonical(gens))


def cone_contains(D: ProperCone, u: Vector) -> bool:
    if len(u) != D.dim:
        raise DimensionError(f"cone has dimension {D.dim}, option has {len(u)}")
    if is_zero(u):
        return False
    return conic_feasible(D.generators, u)


def dominates(D: ProperCone, u: Vector, v: Vector) -> bool:
    """Whether ``u`` is strictly better than ``v`` under the order of ``D``."""
    return cone_contains(D, sub(u, v))


def _option_list(A) -> list:
    A = list(A)
    if not A:
        raise EmptyOptionSet("cannot choose from an empty option set")
    return A


def choice_from_order(D: ProperCone, A: Sequence[Vector]) -> list:
    """The undominated options of ``A``, sorted lexicographically."""
    A = canonical(_option_list(A))
    check_dims(*A, dim=D.dim)
    return [u for u in A if not any(dominates(D, v, u) for v in A if v != u)]


def choice_from_order_set(Ds: Sequence[ProperCone], A: Sequence[Vector]) -> list:
    """Options that are undominated under at least one of the cones."""
    Ds = list(Ds)
    if not Ds:
        raise EmptyOrderSet("need at least one order to choose with")
    A = canonical(_option_list(A))
    chosen = set()
    for D in Ds:
        chosen.update(choice_from_order(D, A))
    return sorted(chosen)


SCALAR_SAMPLE = (Fraction(1, 2), Fraction(1), Fraction(3))


@dataclass
class AxiomReport:
    """Outcome of a sampled axiom check.

    ``checked`` counts the instances tested per axiom and ``violations``
    lists the failing instances.  Only the sampled instances are covered.
    """

    checked: dict = field(default_factory=dict)
    violations: dict = field(default_factory=dict)

    def record(self, axiom: str, ok: bool, instance=None):
        self.checked[axiom] = self.checked.get(axiom, 0) + 1
        self.violations.setdefault(axiom, [])
        if not ok:
            self.violations[axiom].append(instance)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def passed(self, axiom: str) -> bool:
        return not self.violations.get(axiom)

    def summary(self) -> str:
        lines = []
        for axiom in sorted(self.checked):
            bad = len(self.violations.get(axiom, ()))
            lines.append(f"{axiom}: {'pass' if not bad else 'FAIL'} "
                         f"({self.checked[axiom]} sampled, {bad} violations)")
        return "\n".join(lines)


def check_order_axioms(D: ProperCone, probes: Sequence[Vector],
                       scalars: Sequence = SCALAR_SAMPLE) -> AxiomReport:
    """Check irreflexivity, transitivity, scaling and translation on probes."""
    probes = canonical(probes)
    report = AxiomReport()
    dom = {(u, v): dominates(D, u, v) for u in probes for v in probes}
    for u in probes:
        report.record("PO1", not dom[u, u], (u,))
    for u, v, w in itertools.product(probes, repeat=3):
        if dom[u, v] and dom[v, w]:
            report.record("PO2", dom[u, w], (u, v, w))
        if dom[u, v]:
            report.record("PO4", dominates(D, add(u, w), add(v, w)), (u, v, w))
    for u, v in itertools.product(probes, repeat=2):
        if dom[u, v]:
            for lam in scalars:
                report.record("PO3", dominates(D, scale(lam, u), scale(lam, v)), (u, v, lam))
    for axiom in ("PO1", "PO2", "PO3", "PO4"):
        report.checked.setdefault(axiom, 0)
        report.violations.setdefault(axiom, [])
    return report


def positive_part(D: ProperCone, probes: Sequence[Vector]) -> list:
    """Probes ``u`` with ``u > 0``, computed through the order relation."""
    z = zero(D.dim)
    return [u for u in canonical(probes) if dominates(D, u, z)]
