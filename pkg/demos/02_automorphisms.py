"""
Automorphisms used to normalize operators
=========================================

Each catalog map is an 8x8 matrix whose columns are basis images.  They are
checked against the multiplication table on all 64 basis pairs.
"""

from octorb import GF, build_map, verify_map
from octorb.maps import ANTIAUTOMORPHISM, AUTOMORPHISM, CLASSICAL, map_kind

phi = build_map(9, 2)
print(phi.describe("phi"))
print("automorphism:", verify_map(phi, AUTOMORPHISM))

psi = build_map(12)
print("antiautomorphism:", verify_map(psi, ANTIAUTOMORPHISM), " automorphism:", verify_map(psi, AUTOMORPHISM))

# an anti composed with an anti is an automorphism again
print("kind of psi o bar:", map_kind(psi @ build_map(CLASSICAL)))

# shear families are one-parameter groups; scalings multiply
F5 = GF(5)
print("Prop 2: 2 then 4 equals 1:", build_map(2, 2, F5) @ build_map(2, 4, F5) == build_map(2, 1, F5))
print("Prop 7: 2 then 3 equals 1:", build_map(7, 2, F5) @ build_map(7, 3, F5) == build_map(7, 1, F5))
