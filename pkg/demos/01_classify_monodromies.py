"""Classify a gallery of torus-bundle monodromies.

Walks through the three possible verdicts: genus 2 with a unique splitting,
genus 2 with two splittings (trace +-3), and the weakly reducible genus 3
case where no curve meets its image exactly once.
"""

from solvsplit import IntMatrix2, classify, format_matrix, format_slope

GALLERY = [
    ("figure-eight filling", IntMatrix2(2, 1, 1, 1)),
    ("its sister (trace -3)", IntMatrix2(-2, -1, -1, -1)),
    ("standard form m = 5", IntMatrix2(5, -1, 1, 0)),
    ("a conjugated trace-7 map", IntMatrix2(8, -3, 3, -1)),
    ("an even form, genus 3", IntMatrix2(1, 2, 2, 5)),
    ("mirror-only unit curve", IntMatrix2(4, 1, -1, 0)),
]

for name, L in GALLERY:
    report = classify(L)
    print(f"{name}: L = {format_matrix(L)}")
    print(f"  trace {report.trace}, genus {report.genus}, "
          f"{report.irreducible_splitting_count} irreducible splitting(s)")
    print(f"  type: {report.splitting_type}")
    if report.standard_form is not None:
        sf = report.standard_form
        print(f"  conjugator K = {format_matrix(sf.conjugator)} "
              f"(det {sf.conjugator_det:+d}) lands on {format_matrix(sf.target())}")
        print(f"  witness curve {format_slope(report.witness_curve)} "
              f"meets its image exactly once")
    else:
        print("  no unit curve exists; the splitting is the standard genus 3 one")
    if report.involution is not None:
        print(f"  two spines, exchanged data: beta = {report.involution.beta}, "
              f"gamma = {report.involution.gamma}")
    print()
