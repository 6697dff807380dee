#!/usr/bin/env python3
"""Exact exchange phases on finite Abelian groups.

A statistics model starts from a grading group and a bicharacter: a phase
pairing that is multiplicative in each slot.  All of this is exact rational
arithmetic, so the defining laws hold with zero tolerance.
"""

from braidstat import check_transmutation, make_bicharacter, make_group, make_hom

# The fermionic prototype: Z2 with pairing exponent 1/2, i.e. eps(1,1) = -1.
z2 = make_group([2])
eps_fermi = make_bicharacter(z2, [["1/2"]])
one = z2.element([1])
print("Z2 exchange phase eps(1,1) =", complex(eps_fermi.phase(one, one)))

# An anyonic phase on Z4: eps(1,1) = i.  This is a perfectly good bicharacter
# but NOT a commutation factor: eps(1,1)*eps(1,1) = -1 != 1.
z4 = make_group([4])
eps_anyon = make_bicharacter(z4, [["1/4"]])
g = z4.element([1])
print("Z4 exchange phase eps(1,1) =", complex(eps_anyon.phase(g, g)))
check = eps_anyon.is_normalized()
print("Z4 phase normalized?", check.ok, "witness pair:",
      tuple(str(w) for w in check.witness))

# Bilinearity is built in: eps(a, b+c) = eps(a,b) * eps(a,c), exactly.
a, b, c = z4.element([1]), z4.element([2]), z4.element([3])
lhs = eps_anyon.phase(a, b + c)
rhs = eps_anyon.phase(a, b) * eps_anyon.phase(a, c)
print("bilinearity, exact fractions:", lhs.exponent, "==", rhs.exponent)

# Two graded worlds are compatible when a group homomorphism carries one
# phase pairing into the other.  Z2xZ2 with all exponents 1/2 collapses
# onto the plain fermionic Z2.
z2z2 = make_group([2, 2])
eps_two = make_bicharacter(z2z2, [["1/2", "1/2"], ["1/2", "1/2"]])
fold = make_hom(z2z2, z2, [[1], [1]])
print("Z2xZ2 -> Z2 phase-compatible?", check_transmutation(fold, eps_two, eps_fermi).ok)

# Doubling Z2 into Z4 is a homomorphism, but i^(2*2) = 1 loses the sign.
double = make_hom(z2, z4, [[2]])
verdict = check_transmutation(double, eps_fermi, eps_anyon)
print("Z2 -> Z4 phase-compatible?", verdict.ok,
      "| witness:", tuple(str(w) for w in verdict.witness),
      "source", complex(verdict.source_phase), "vs target", complex(verdict.target_phase))
