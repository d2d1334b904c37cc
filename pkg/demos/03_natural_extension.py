"""Reasoning from an assessment.

An assessment lists option sets that are each known to contain something
better than zero.  The natural extension answers, for a new set S, whether
that conclusion follows.  It does exactly when S meets every selection
cone (the positive hull of one pick from each assessed set); a cone that
S misses is a certificate of non-membership.
"""

from choicekit import AssessmentFamily, FinitePoints, PosiHull, in_natural_extension, selection_cones
from choicekit.assessments import refutation_certificate
from choicekit.oracle import closure_witnesses

F = AssessmentFamily([[(1, 0), (-1, 1)], [(0, 1)]])
print("assessment:", ", ".join(str(A) for A in F.basis))
print("selection cones:", ", ".join(str(D) for D in selection_cones(F)))

for S in (FinitePoints([(1, 1), (0, 2)]), FinitePoints([(1, 0)]), PosiHull([(1, -1), (-1, 2)])):
    if in_natural_extension(F, S):
        print(f"{S}: follows")
    else:
        print(f"{S}: does not follow, it misses {refutation_certificate(F, S)}")

# Sets built from the assessment by positive combinations always follow.
witnesses = closure_witnesses(F, [1, 2], extra_points=[(-3, 0)])
print(f"{len(witnesses)} closure witnesses, all members:", all(in_natural_extension(F, S) for S in witnesses))
