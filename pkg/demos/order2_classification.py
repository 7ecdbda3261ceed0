"""
Classifying the two-element structures
======================================

"""

# enumeration walks every pair of associative tables, keeps those that
# satisfy the axioms, and dedups by canonical form under relabeling
from dimonoids import enumerate_dimonoids

result = enumerate_dimonoids(2)
print("labeled pairs:", result.labeled_count)
print("classes up to isomorphism:", result.class_count)

# classification names each class, computes its automorphism group, and
# links it to its dual class
from dimonoids import classify, render_report

report = classify(result)
print()
print(render_report(report, "markdown"))

# single rows are addressable by name
row = report.row_by_name("LO2|RO2")
print("LO2|RO2 abelian:", row.abelian, "Aut:", row.aut.name)

# the five trivial classes are exactly the two-element semigroups; the
# two-sided identity and zero classes force the pair to be trivial, so
# only one-sided families produce genuinely new structures
trivial = [r.name for r in report.rows if r.trivial]
print("trivial classes:", ", ".join(trivial))

# doppelsemigroups share the trivial classes but differ elsewhere: the
# interchange-style identity admits the inverse-twisted group pair C2|C2^-1
# while rejecting LO2|RO2
from dimonoids import enumerate_doppelsemigroups

doppel = classify(enumerate_doppelsemigroups(2))
print("doppelsemigroup classes:", [r.name for r in doppel.rows])
