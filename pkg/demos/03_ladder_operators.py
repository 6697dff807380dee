#!/usr/bin/env python3
"""Creation and annihilation on tensor words.

The free annihilator only ever touches the first letter: together with left
creation it realizes the one-sided relation a-_i a+_j = <i|j> id and nothing
else (Boltzmann / infinite statistics).  The twisted annihilator hops through
the word with exchange factors and satisfies the twisted commutation relation
of its model.
"""

from braidstat import (AnnihilateTwisted, Create, Exchange, FockVector, annihilate_free,
                       annihilate_twisted, apply_program, check_infinite_statistics,
                       commutator_defect, create, load_zoo)

fermion = load_zoo("fermion2")
vac = FockVector.vacuum()

print("create twice:", apply_program(fermion, [Create(1), Create(2)], vac))
print("free annihilate wrong letter:", annihilate_free(fermion, 1, FockVector.basis((2, 1))))
print("free relation check:", check_infinite_statistics(fermion, n_max=4))

# Twisted annihilation sees the whole word.  For fermions the two hopping
# terms on [1,1] cancel: no two identical fermions.
print("\nfermion b-_1 [1,1]:", annihilate_twisted(fermion, 1, FockVector.basis((1, 1))))
boson = load_zoo("boson")
print("boson   b-_1 [1,1]:", annihilate_twisted(boson, 1, FockVector.basis((1, 1))))

# Twisted commutation relations close for the matched sign convention.
for name in ("fermion2", "boson", "quon_05"):
    model = load_zoo(name)
    worst = max(commutator_defect(model, i, j, n).defect
                for i in (1, 2) for j in (1, 2) for n in range(4))
    print(f"{name:9s} twisted commutator worst defect:", worst)

# A short particle process: create two quanta, exchange them (factor -1 for
# fermions), then annihilate the second sort.
program = [Create(1), Create(2), Exchange(1), AnnihilateTwisted(2)]
print("\nprocess c1;c2;x1;b2 on vacuum:", apply_program(fermion, program, vac))
