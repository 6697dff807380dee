#!/usr/bin/env python3
"""Carrying one statistics into another along a group homomorphism.

Regrade every generator by its image and exchange with the target phase
pairing.  When the homomorphism preserves the exchange phases, the functor is
cross symmetric and the twisted commutation relations transport; otherwise
the incompatibility is localized on a witness pair of grades.
"""

from braidstat import (check_cross_symmetric, check_relation_transport, check_transmutation,
                       gram_matrix, load_zoo, make_bicharacter, make_group, make_hom,
                       make_transmutation)

# Fold the Z2xZ2 model onto plain Z2: both generators become odd.
source = load_zoo("z2z2_fermion")
z2 = make_group([2])
fold = make_hom(source.group, z2, [[1], [1]])
eps_fermi = make_bicharacter(z2, [["1/2"]])

t = make_transmutation(source, fold, eps_fermi)
print("target grades:", [str(g) for g in t.target.grades])
print("phase compatibility:", check_transmutation(fold, source.eps, eps_fermi).ok)
print("cross-symmetric functor:", check_cross_symmetric(t).status)
print("relation transport:", check_relation_transport(t, n_max=3))

# Compatible phases mean identical sector geometry.
for n in range(4):
    same = abs(gram_matrix(source, n).matrix - gram_matrix(t.target, n).matrix).max()
    print(f"sector {n}: Gram matrices agree to {same:.1e}")

# Doubling a fermion into Z4 with the anyonic phase does NOT transport:
# the image of the odd grade braids trivially.
fermion = load_zoo("fermion1")
z4 = make_group([4])
double = make_hom(fermion.group, z4, [[2]])
eps_anyon = make_bicharacter(z4, [["1/4"]])
bad = make_transmutation(fermion, double, eps_anyon)
report = check_cross_symmetric(bad)
print("\nZ2 -> Z4 cross-symmetric:", report.status)
print("witness:", {k: str(v) for k, v in report.witness.items() if k != "grades"},
      "grades:", [str(g) for g in report.witness["grades"]])
# The target model is still internally consistent; only the functor fails.
print("target's own relations:", check_relation_transport(bad, n_max=2).status,
      "| functor image defect:", check_relation_transport(bad, n_max=2).data["image_defect"])
