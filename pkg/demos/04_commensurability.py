"""Virtual conjugacy of torus maps: equal traces and explicit intertwiners.

An intertwiner P with PA = BP and det(P) != 0 exhibits the finite cover on
which the two maps agree; its image lattice has index |det P|.
"""

from itertools import combinations

from solvsplit import (
    IntMatrix2,
    classes_of_trace,
    format_matrix,
    has_power_with_trace,
    intertwiner,
    virtually_conjugate,
)

A, B = IntMatrix2(2, 1, 1, 1), IntMatrix2(3, -1, 1, 0)
w = intertwiner(A, B)
print(f"A = {format_matrix(A)}, B = {format_matrix(B)}")
print(f"  P = {format_matrix(w.P)}, index {w.index}")
print(f"  PA = {format_matrix(w.P @ A)} = BP = {format_matrix(B @ w.P)}")
print()

print("intertwiners between all classes of each trace")
for t in range(3, 9):
    reps = classes_of_trace(t)
    if len(reps) < 2:
        print(f"  trace {t}: single class, trivially commensurable")
        continue
    for X, Y in combinations(reps, 2):
        w = intertwiner(X, Y)
        print(f"  trace {t}: {format_matrix(X)} ~ {format_matrix(Y)} "
              f"via P = {format_matrix(w.P)} (index {w.index})")
print()

print("unequal traces are never virtually conjugate")
v = virtually_conjugate(IntMatrix2(2, 1, 1, 1), IntMatrix2(4, -1, 1, 0))
print(f"  trace 3 vs trace 4: {v.virtually_conjugate}")
print()

print("which traces occur among powers of the trace-3 map?")
for s in (3, 7, 10, 18, 47, 50):
    n = has_power_with_trace(A, s)
    print(f"  trace {s}: " + (f"appears at power n = {n}" if n else "never"))
