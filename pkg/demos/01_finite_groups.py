"""
Finite unit-quaternion groups: construction and classification
===============================================================

Builds each of the named finite subgroups of the unit quaternions,
classifies them back from their multiplication tables, and runs the
arithmetic constraints a free sphere action must satisfy.
"""

import numpy as np

from homoglab import (
    GroupType,
    check_space_form_constraints,
    classify,
    is_sl25,
    named_binary_group,
)

# the five named families; cyclic and binary dihedral take a parameter
tags = [
    GroupType.cyclic(8),
    GroupType.binary_dihedral(3),
    GroupType.binary_tetrahedral(),
    GroupType.binary_octahedral(),
    GroupType.binary_icosahedral(),
]

for tag in tags:
    group = named_binary_group(tag)
    back = classify(group)
    print(f"{tag.kind:>20}  order {group.order:3d}  classified as {back.kind}")

# the binary icosahedral group is a copy of SL(2,5): order 120, perfect,
# with a unique involution -- no other named group passes all three tests
istar = named_binary_group(GroupType.binary_icosahedral())
print("\nis_sl25(I*):", is_sl25(istar))
print("is_sl25(binary dihedral 30):", is_sl25(named_binary_group(GroupType.binary_dihedral(30))))
print("is_sl25(cyclic 120):", is_sl25(named_binary_group(GroupType.cyclic(120))))

# every group acting freely on a sphere has cyclic odd Sylow subgroups and
# at most one element of order 2; the quaternion groups all qualify
rep = check_space_form_constraints(istar)
print("\nspace-form constraints for I*:")
print("  odd Sylow subgroups cyclic:", rep.odd_sylow_cyclic)
print("  unique central involution: ", rep.unique_central_involution)
print("  abelian subgroups cyclic:  ", rep.abelian_subgroups_cyclic)
