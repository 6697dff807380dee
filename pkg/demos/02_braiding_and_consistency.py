#!/usr/bin/env python3
"""Exchange structures on words and their consistency checks.

Two-letter exchanges extend to words; the hexagon-style extension is
consistent exactly when the two-letter data satisfies the Yang-Baxter
equation on three letters.  Grade-diagonal models pass automatically
(scalar phases commute); explicit coupling matrices are checked numerically.
"""

import numpy as np

from braidstat import (BraidMatrix, Bicharacter, braid_factor, braid_on_word, check_symmetry,
                       check_yang_baxter, load_zoo, make_group, make_model, q_swap_braid)

fermion = load_zoo("fermion2")
print("fermion swap factor:", braid_factor(fermion, 1, 2))
print("swap [1,2] ->", braid_on_word(fermion, (1, 2), 1))
print("fermion Yang-Baxter:", check_yang_baxter(fermion).status,
      "| exchange^2 = id:", check_symmetry(fermion).status)

anyon = load_zoo("anyon_z4")
print("\nanyon swap factor:", braid_factor(anyon, 1, 1))
print("anyon Yang-Baxter:", check_yang_baxter(anyon).status,
      "| exchange^2 = id:", check_symmetry(anyon).status,
      f"(defect {check_symmetry(anyon).defect})")

# A q-scaled swap: braids consistently for every q, but is a symmetry only
# at |q| = 1.
quon = load_zoo("quon_05")
print("\nq-swap braid on [1,2]:", braid_on_word(quon, (1, 2), 1))
print("q-swap Yang-Baxter:", check_yang_baxter(quon).status,
      "| exchange^2 = id:", check_symmetry(quon).status,
      f"(defect {check_symmetry(quon).defect})")

# A random dense coupling almost surely breaks Yang-Baxter.
rng = np.random.default_rng(7)
trivial = make_group([])
random_model = make_model(trivial, Bicharacter.trivial(trivial), [[], []], np.eye(2),
                          BraidMatrix(rng.standard_normal((4, 4))))
report = check_yang_baxter(random_model)
print("\nrandom coupling Yang-Baxter:", report.status, f"(defect {report.defect:.3f})")

# The exchange need not scale a swap: any invertible coupling is allowed.
mixer = make_model(trivial, Bicharacter.trivial(trivial), [[], []], np.eye(2),
                   q_swap_braid(2, 1j))
print("i-swap symmetric?", check_symmetry(mixer).status,
      "| Yang-Baxter:", check_yang_baxter(mixer).status)
