"""
Checking the dimonoid and doppelsemigroup axioms
================================================

"""

# a structure is a pair of multiplication tables on the same carrier;
# parse_structure reads one or two whitespace-separated blocks
from dimonoids import parse_structure, check_structure, format_distructure

text = """
0 0 0
1 1 1
2 2 2

0 1 2
0 1 2
0 1 2
"""
d = parse_structure(text)
print(format_distructure(d))

# the left table takes its left factor, the right table its right factor;
# together they satisfy all three defining identities of a dimonoid
verdict = check_structure(d, "dimonoid")
print("dimonoid:", verdict.ok)

# the same pair fails as a doppelsemigroup, and the verdict carries a
# witness triple for the first identity that breaks
verdict = check_structure(d, "doppelsemigroup")
print("doppelsemigroup:", verdict.ok, "failures:", verdict.failures())
print("witness for d4:", verdict.witnesses["d4"])

# single tables are checked for associativity the same way
from dimonoids import parse_table, is_associative

nor = parse_table("1 0\n0 0")
flag, witness = is_associative(nor)
print("NOR associative:", flag, "witness:", witness)

# semigroup_profile reports the structural features of one table
from dimonoids import semigroup_profile, cyclic

profile = semigroup_profile(cyclic(3))
print("C3 commutative:", profile.commutative)
print("C3 identity:", profile.identity)
print("C3 monogenic, index and period:", profile.monogenic)

# dimonoid_profile reports the pair-level features; abelian means the two
# operations are transposes of one another, which is the same as the
# structure equalling its own dual
from dimonoids import dimonoid_profile

pair = dimonoid_profile(d)
print("trivial:", pair.trivial, "commutative:", pair.commutative,
      "abelian:", pair.abelian)
