"""Conjugacy invariants and the unit-curve decision, with cross-checks.

The cyclic R/S word is a complete conjugacy invariant for Anosov matrices;
this script computes a few, produces explicit conjugating witnesses, and
confirms the unit-curve decision against a small brute-force grid.
"""

from math import gcd

from solvsplit import (
    IntMatrix2,
    are_conjugate,
    classes_of_trace,
    cyclic_word,
    format_matrix,
    monodromy_form,
    represent_unit,
)

print("cyclic words for small monodromies")
for L in (IntMatrix2(2, 1, 1, 1), IntMatrix2(3, -1, 1, 0),
          IntMatrix2(3, 2, 1, 1), IntMatrix2(3, 1, 2, 1)):
    sign, word = cyclic_word(L)
    print(f"  {format_matrix(L)}  ->  {'+' if sign > 0 else '-'}({word})")
print()

A, B = IntMatrix2(2, 1, 1, 1), IntMatrix2(3, -1, 1, 0)
result = are_conjugate(A, B)
print(f"{format_matrix(A)} ~ {format_matrix(B)}: {result.conjugate}")
K = result.witness
print(f"  witness K = {format_matrix(K)}, K A K^-1 = "
      f"{format_matrix(K @ A @ K.inverse())}")
print()

print("conjugacy classes by trace")
for t in range(3, 8):
    reps = classes_of_trace(t)
    print(f"  trace {t}: {len(reps)} class(es): "
        + ", ".join(format_matrix(M) for M in reps))
print()

print("unit-curve decision vs brute force on |p|, |q| <= 60")
for L in (IntMatrix2(2, 1, 1, 1), IntMatrix2(1, 2, 2, 5), IntMatrix2(4, 1, -1, 0)):
    form = monodromy_form(L)
    brute = [
        (p, q)
        for p in range(-60, 61)
        for q in range(-60, 61)
        if gcd(p, q) == 1 and abs(form.evaluate(p, q)) == 1
    ]
    witness = represent_unit(L)
    verdict = "none" if witness is None else f"{witness.curve} with value {witness.value:+d}"
    print(f"  {format_matrix(L)}: represent_unit -> {verdict}; "
          f"brute force found {len(brute)} unit pair(s)")
    assert (witness is None) == (len(brute) == 0)
