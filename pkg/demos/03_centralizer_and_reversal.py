"""Centralizer structure of standard forms and reversibility.

Every matrix commuting with [[m, -1], [1, 0]] inside SL(2,Z) is a signed
power; at m = +-3 a determinant -1 coset appears and the monodromy becomes
conjugate to its own inverse.
"""

from solvsplit import (
    IntMatrix2,
    centralizer_description,
    express_power,
    format_matrix,
    is_reversible,
    mat_pow,
)

for m in (3, -3, 4, 5):
    L = IntMatrix2(m, -1, 1, 0)
    desc = centralizer_description(L)
    print(f"m = {m}: L = {format_matrix(L)}")
    print(f"  SL(2,Z) centralizer: {desc.sl_part}")
    if desc.gl_extra is not None:
        sign, n = desc.gl_extra_square
        print(f"  extra GL coset: B = {format_matrix(desc.gl_extra)} (det -1), "
              f"B^2 = {'+' if sign > 0 else '-'}L^{n}")
    else:
        print("  no determinant -1 commutant (needs trace +-3)")
    print(f"  reversible: {desc.reversible}")
    if desc.reversal_witness is not None:
        K = desc.reversal_witness
        print(f"  reversal witness K = {format_matrix(K)}: "
              f"K L K^-1 = {format_matrix(K @ L @ K.inverse())}")
    print()

print("recovering exponents of commuting powers")
L = IntMatrix2(4, -1, 1, 0)
for n in (-3, -1, 0, 2, 5):
    for sign in (1, -1):
        K = mat_pow(L, n)
        if sign < 0:
            K = -K
        recovered = express_power(K, L)
        print(f"  {'+' if sign > 0 else '-'}L^{n}: express_power -> {recovered}")
        assert recovered == (sign, n) or n == 0

print()
print("reversibility transports along conjugation")
L = IntMatrix2(2, 1, 1, 1)
res = is_reversible(L)
print(f"{format_matrix(L)} reversible: {res.reversible}, "
      f"witness {format_matrix(res.witness)}")
