"""From assessments to choice functions and back.

An assessment induces a choice function: u is kept in A unless A - u
follows from the assessment.  The same choice function comes from the set
of selection cones, so every such choice function is a union of
order-based choices.  When only one order is involved the choice function
is binary and the order can be read off pairwise comparisons.
"""

import itertools

from choicekit import Assessment, AssessmentFamily, Cones, choose, extract_order, make_cone, represent, vectors
from choicekit.errors import NotBinary
from choicekit.exact_geometry import format_vector


def show(vs):
    return "{" + ", ".join(format_vector(u) for u in vs) + "}"


F = AssessmentFamily([[(1, 0), (-1, 1)]])
model = Assessment(F)
cones = represent(model)
print("representing cones:", ", ".join(str(D) for D in cones))

universe = vectors([(0, 0), (1, 0), (-1, 1), (1, 1)])
agree = all(choose(model, A) == choose(Cones(cones), A)
            for r in (1, 2, 3, 4) for A in itertools.combinations(universe, r))
print("same choices on every subset of", show(universe) + ":", agree)

single = Cones([make_cone([(1, 0), (1, 1)])])
probes = vectors([(1, 0), (1, 1), (0, 1), (2, 1)])
print("order read back from pairwise choice:", extract_order(single, probes))

try:
    extract_order(Cones([make_cone([(1, 0)]), make_cone([(0, 1)])]), vectors([(1, 0), (0, 1)]))
except NotBinary as exc:
    print("two orders are not binary:", show(exc.option_set), "drops", format_vector(exc.option),
          "although every pair keeps it")
