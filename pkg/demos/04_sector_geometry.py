#!/usr/bin/env python3
"""Gram matrices, null states, and physical sector dimensions.

The scalar product of two n-letter words is computed by annihilating one word
against the other.  Null vectors of the Gram matrix are unphysical; the rank
is the dimension that survives.  Fermions shrink to binomials, bosons to
multiset counts, and q-swap models at |q| < 1 keep full rank with a strictly
positive Gram.
"""

import numpy as np

from braidstat import gram_matrix, gram_psd_check, load_zoo, sector_dimension

fermion3 = load_zoo("fermion3")
print("fermionic N=3 quotient dimensions:",
      [sector_dimension(fermion3, n).quotient for n in range(5)])

boson = load_zoo("boson")
print("bosonic   N=2 quotient dimensions:",
      [sector_dimension(boson, n).quotient for n in range(5)])

quon = load_zoo("quon_05")
dims = [sector_dimension(quon, n).quotient for n in range(5)]
eigs = [gram_psd_check(quon, n).data["min_eigenvalue"] for n in range(5)]
print("quon q=.5 N=2 quotient dimensions:", dims)
print("quon minimal Gram eigenvalues:   ", [round(e, 4) for e in eigs])

# The sector-2 fermionic Gram in basis [1,1],[1,2],[2,1],[2,2]: only the
# antisymmetric combination survives.
fermion2 = load_zoo("fermion2")
gram = gram_matrix(fermion2, 2)
print("\nfermion N=2 sector-2 Gram:\n", np.real(gram.matrix))
print("rank:", sector_dimension(fermion2, 2).quotient, "of", 2 ** 2)

# The anyonic Z4 model with identity pairing produces a complex, non-Hermitian
# Gram entry (single hop contributes the phase of eps(1, -1) = -i), so
# positivity is not even well posed; the check reports and skips.
anyon = load_zoo("anyon_z4")
gram = gram_matrix(anyon, 2)
print("\nanyon sector-2 Gram entry:", gram.matrix[0, 0], "| hermitian:", gram.hermitian)
print("anyon PSD check:", gram_psd_check(anyon, 2).status)
