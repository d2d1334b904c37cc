"""Strict vector orders as blunt cones.

A strict partial order on R^n that respects addition and positive scaling
is fixed by its positive cone D: v is preferred to u exactly when v - u
lies in D.  This script builds two cones, asks a few dominance questions
and shows what "maximal" means on a small option set.
"""

from choicekit import choice_from_order, choice_from_order_set, dominates, make_cone, vec, vectors
from choicekit.errors import NotBlunt
from choicekit.exact_geometry import format_vector

orthant = make_cone([(1, 0), (0, 1)])
print("cone:", orthant)

# (2,1) beats (1,1) because their difference (1,0) is a generator
print("(2,1) > (1,1)?", dominates(orthant, vec(2, 1), vec(1, 1)))
# (1,0) and (0,1) are incomparable
print("(1,0) > (0,1)?", dominates(orthant, vec(1, 0), vec(0, 1)))

# A cone containing a line would make some u preferred to itself.
try:
    make_cone([(1, 0), (-1, 0)])
except NotBlunt as exc:
    print("rejected:", exc)

A = vectors([(0, 0), (1, 0), (0, 1), ("1/2", "1/2")])
print("options:", ", ".join(format_vector(u) for u in A))
print("maximal under the orthant:", ", ".join(format_vector(u) for u in choice_from_order(orthant, A)))

# With two orders we keep whatever is maximal under at least one of them.
pareto = [make_cone([(1, 0)]), make_cone([(0, 1)])]
print("union over two orders:", ", ".join(format_vector(u) for u in choice_from_order_set(pareto, A)))
