"""Pushing a graded model along a group homomorphism.

The target model keeps the generators and pairing, regrades generator ``i``
by ``h(grade_i)``, and exchanges with the target bicharacter.  The functor is
strict, so compatibility reduces to equality of exchange phases on the grades
that actually occur.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fock import annihilate_twisted, commutator_defect, create
from .groups import Bicharacter, GroupHom, GroupMismatchError
from .models import DERIVED_CROSS, GRADE_DIAGONAL, ModelSpecError, ParticleModel, make_model
from .report import CheckReport
from .words import FockVector, basis_words


@dataclass(eq=False, frozen=True)
class Transmutation:
    """A homomorphism together with the source and the pushed-forward model."""

    hom: GroupHom
    source: ParticleModel
    target: ParticleModel


def transmute_model(model: ParticleModel, hom: GroupHom, eps_target: Bicharacter) -> ParticleModel:
    """Push a grade-diagonal model forward along ``hom``."""
    if not model.is_grade_diagonal:
        raise ModelSpecError("transmutation is defined for grade-diagonal models")
    if hom.source != model.group:
        raise GroupMismatchError(f"homomorphism starts at {hom.source}, model is graded over {model.group}")
    if eps_target.group != hom.target:
        raise GroupMismatchError(f"target bicharacter lives on {eps_target.group}, expected {hom.target}")
    return make_model(
        hom.target,
        eps_target,
        [hom.apply(g) for g in model.grades],
        model.pairing,
        GRADE_DIAGONAL,
        DERIVED_CROSS,
        model.expansion_sign,
    )


def make_transmutation(model: ParticleModel, hom: GroupHom, eps_target: Bicharacter) -> Transmutation:
    return Transmutation(hom, model, transmute_model(model, hom, eps_target))


def check_cross_symmetric(t: Transmutation, tol: float = 1e-9) -> CheckReport:
    """Exchange compatibility of the functor on every generator pair.

    Compares, exactly, the source and target cross phases (dual past letter)
    and the particle-particle braid phases; ``tol`` is unused because phases
    either match or not.  For bicharacter exchanges the two comparisons are
    equivalent; both verdicts are reported.
    """
    source, target = t.source, t.target
    defect = 0.0
    witness = None
    cross_ok = True
    braid_ok = True
    for i in range(1, source.n_generators + 1):
        for j in range(1, source.n_generators + 1):
            pairs = (
                ("cross", source.cross_phase(i, j), target.cross_phase(i, j)),
                ("braid", source.braid_phase(i, j), target.braid_phase(i, j)),
            )
            for kind, p_src, p_tgt in pairs:
                if p_src != p_tgt:
                    if kind == "cross":
                        cross_ok = False
                    else:
                        braid_ok = False
                    d = abs(complex(p_src) - complex(p_tgt))
                    if d > defect or witness is None:
                        defect = max(defect, d)
                        witness = {
                            "kind": kind,
                            "grades": (source.grade(i), source.grade(j)),
                            "source_phase": p_src,
                            "target_phase": p_tgt,
                        }
    return CheckReport.from_defect("cross-symmetric", defect, 0.0, witness,
                                   {"cross_compatible": cross_ok, "braid_compatible": braid_ok})


def check_relation_transport(t: Transmutation, n_max: int = 3, tol: float = 1e-9) -> CheckReport:
    """Twisted commutation relations carried to the target model.

    Two readings are computed: the target model's own relations (its own
    cross phases) and the functor-image reading, where the target operators
    are twisted with the *source* cross phases.  They coincide exactly when
    :func:`check_cross_symmetric` passes; the pass/fail status follows the
    target's own relations.
    """
    source, target = t.source, t.target
    target_defect = 0.0
    image_defect = 0.0
    witness = None
    for i in range(1, target.n_generators + 1):
        for j in range(1, target.n_generators + 1):
            chi_source = complex(source.cross_phase(i, j))
            g = target.pairing_entry(i, j)
            for n in range(n_max + 1):
                report = commutator_defect(target, i, j, n, tol)
                if report.defect > target_defect:
                    target_defect = report.defect
                    witness = {"i": i, "j": j, "sector": n}
                for w in basis_words(target.n_generators, n):
                    base = FockVector.basis(w)
                    lhs = annihilate_twisted(target, i, create(target, j, base))
                    rhs = create(target, j, annihilate_twisted(target, i, base)).scale(chi_source)
                    image_defect = max(image_defect, (lhs - rhs - base.scale(g)).norm())
    return CheckReport.from_defect("relation-transport", target_defect, tol, witness,
                                   {"target_defect": target_defect, "image_defect": image_defect,
                                    "n_max": n_max})
