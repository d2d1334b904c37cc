"""Rules on rejection sets.

A rule (premises, conclusion) says: if every premise set contains an
option better than zero, so does the conclusion.  Schemes such as
coherence or the archimedean property are infinite families of rules; for
cones they reduce to finite exact tests, which we compare against a probe
instantiation here.
"""

import random
from fractions import Fraction

from choicekit import (
    FinitePoints, Rule, archimedean_exact, coherent_exact, d_compatible, instantiate_scheme,
    make_cone, monotonify,
)

diagonal = make_cone([(1, 1)])
orthant = make_cone([(1, 0), (0, 1)])

rules = [Rule((), FinitePoints([(1, 0), (0, 1)])), Rule((), FinitePoints([(1, 0)]))]
res = d_compatible(diagonal, rules)
print("diagonal cone compatible with the rules?", res.compatible, "- first failing rule:", res.witness_index)

rng = random.Random(0)
probes = [(Fraction(rng.randint(1, 9), rng.randint(1, 9)), Fraction(rng.randint(1, 9), rng.randint(1, 9)))
          for _ in range(200)]
for name, D in (("orthant", orthant), ("diagonal", diagonal)):
    sampled = d_compatible(D, instantiate_scheme("C", probes=probes)).compatible
    print(f"{name}: coherent (exact) = {coherent_exact(D)}, on 200 probes = {sampled}")

# Subtracting a small constant keeps (1,1) inside its own ray, but pushes
# (2,1) out of posi{(2,1),(1,2)}.
for D in (diagonal, make_cone([(2, 1), (1, 2)])):
    print(f"{D}: archimedean = {archimedean_exact(D)}")

# Adding the same set to premises and conclusion never changes the verdict.
base = [Rule([FinitePoints([(1, 0)])], FinitePoints([(0, 1)]))]
extended = monotonify(base, [FinitePoints([(5, 5)]), FinitePoints([(-1, 2)])])
for D in (orthant, make_cone([(1, 0)])):
    print(f"{D}: {d_compatible(D, base).compatible} before, {d_compatible(D, extended).compatible} after")
