"""Graded generator systems with pairing and braid/cross exchange structure.

A :class:`ParticleModel` holds ``N`` generators ``x^1 .. x^N`` graded over a
finite Abelian group, a pairing matrix ``g[i][j] = <i|j>``, and an exchange
structure.  The exchange of two generators is either

* grade-diagonal: swapping letters of grades ``alpha`` (left) and ``beta``
  (right) multiplies by the exact phase ``eps(beta, alpha)``, and moving a
  dual letter of grade ``alpha`` (so graded ``-alpha``) rightward past a
  letter of grade ``beta`` multiplies by ``eps(beta, -alpha)``; or
* an explicit coupling matrix acting on pairs of letters.

Everything works in the strict monoidal skeleton: words are flat sequences,
associators and unitors are identities.  Generator indices are 1-based
throughout the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

import numpy as np

from .groups import Bicharacter, GroupElement, GroupSpec, RationalPhase
from .report import CheckReport
from .words import FockVector, TensorWord


class ModelSpecError(ValueError):
    """Model data is inconsistent, or an operation was called on the wrong kind of model."""


@dataclass(frozen=True)
class GradeDiagonal:
    """Exchange factors are bicharacter phases of the letter grades."""


@dataclass(eq=False, frozen=True)
class BraidMatrix:
    """Explicit pair coupling ``R``: the braid sends the basis pair ``(i, j)``
    to ``sum_kl R[i,j,k,l] * (k, l)`` (all indices 1-based in the API, the
    array is 0-based).

    Accepts either the 4-index array of shape ``(N, N, N, N)`` or the flat
    action matrix of shape ``(N^2, N^2)`` whose column ``(i-1)*N + (j-1)``
    lists the expansion of the braided pair ``(i, j)`` over output pairs.
    """

    coupling: np.ndarray

    def __init__(self, coupling, n_generators: int | None = None):
        object.__setattr__(self, "coupling", _as_coupling(coupling, n_generators))


@dataclass(frozen=True)
class DerivedCross:
    """Cross exchange derived from the braid data.

    Grade-diagonal models use the dual-grading phase ``eps(beta, -alpha)``;
    explicit-matrix models reuse ``R`` with the output pair transposed
    (``T[i,j,k,l] = R[i,j,l,k]``), which reproduces the scalar case.
    """


@dataclass(eq=False, frozen=True)
class CrossMatrix:
    """Explicit cross coupling ``T``: moving the dual letter ``i*`` past ``j``
    yields ``sum_kl T[i,j,k,l] * (l, k*)``.  Same shape conventions as
    :class:`BraidMatrix`."""

    coupling: np.ndarray

    def __init__(self, coupling, n_generators: int | None = None):
        object.__setattr__(self, "coupling", _as_coupling(coupling, n_generators))


GRADE_DIAGONAL = GradeDiagonal()
DERIVED_CROSS = DerivedCross()


def _as_coupling(array_like, n_generators: int | None = None) -> np.ndarray:
    arr = np.asarray(array_like, dtype=complex)
    if arr.ndim == 4:
        n = arr.shape[0]
        if arr.shape != (n, n, n, n):
            raise ModelSpecError(f"coupling array has inconsistent shape {arr.shape}")
    elif arr.ndim == 2:
        n2 = arr.shape[0]
        n = round(n2 ** 0.5)
        if arr.shape != (n2, n2) or n * n != n2:
            raise ModelSpecError(f"coupling matrix must be N^2 x N^2, got {arr.shape}")
        # column (i,j) -> output (k,l): M[(k,l),(i,j)] = R[i,j,k,l]
        arr = arr.reshape(n, n, n, n).transpose(2, 3, 0, 1)
    else:
        raise ModelSpecError("coupling must be an (N,N,N,N) array or an N^2 x N^2 matrix")
    if n_generators is not None and arr.shape[0] != n_generators:
        raise ModelSpecError(
            f"coupling is for {arr.shape[0]} generators, model has {n_generators}"
        )
    return arr


def _action_matrix(coupling: np.ndarray) -> np.ndarray:
    n = coupling.shape[0]
    return coupling.transpose(2, 3, 0, 1).reshape(n * n, n * n)


@dataclass(eq=False, frozen=True)
class ParticleModel:
    """Immutable model: grading group, bicharacter, grades, pairing, exchange."""

    group: GroupSpec
    eps: Bicharacter
    grades: tuple[GroupElement, ...]
    pairing: np.ndarray
    braid: GradeDiagonal | BraidMatrix = GRADE_DIAGONAL
    cross: DerivedCross | CrossMatrix = DERIVED_CROSS
    #: +1 for the hopping expansion that closes the twisted commutation
    #: relation; -1 keeps the alternating-sign reading for comparison.
    expansion_sign: int = 1

    @property
    def n_generators(self) -> int:
        return len(self.grades)

    @property
    def is_grade_diagonal(self) -> bool:
        return isinstance(self.braid, GradeDiagonal)

    @property
    def has_scalar_cross(self) -> bool:
        return self.is_grade_diagonal and isinstance(self.cross, DerivedCross)

    @cached_property
    def pairing_asymmetry(self) -> float:
        return float(np.abs(self.pairing - self.pairing.conj().T).max()) if self.n_generators else 0.0

    @cached_property
    def pairing_hermitian(self) -> bool:
        scale = max(1.0, float(np.abs(self.pairing).max()))
        return self.pairing_asymmetry <= 1e-12 * scale

    def grade(self, i: int) -> GroupElement:
        self._check_index(i)
        return self.grades[i - 1]

    def dual_grade(self, i: int) -> GroupElement:
        return -self.grade(i)

    def pairing_entry(self, i: int, j: int) -> complex:
        self._check_index(i)
        self._check_index(j)
        return complex(self.pairing[i - 1, j - 1])

    def braid_phase(self, i: int, j: int) -> RationalPhase:
        """Exact swap phase ``eps(grade_j, grade_i)`` (grade-diagonal only)."""
        if not self.is_grade_diagonal:
            raise ModelSpecError("braid_phase requires a grade-diagonal model")
        return self.eps.phase(self.grade(j), self.grade(i))

    def cross_phase(self, i: int, j: int) -> RationalPhase:
        """Exact phase for moving dual letter ``i*`` rightward past letter ``j``."""
        if not self.has_scalar_cross:
            raise ModelSpecError("cross_phase requires a grade-diagonal model with derived cross")
        return self.eps.phase(self.grade(j), self.dual_grade(i))

    @cached_property
    def braid_coupling(self) -> np.ndarray:
        if isinstance(self.braid, BraidMatrix):
            return self.braid.coupling
        n = self.n_generators
        arr = np.zeros((n, n, n, n), dtype=complex)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                arr[i - 1, j - 1, j - 1, i - 1] = complex(self.braid_phase(i, j))
        return arr

    @cached_property
    def cross_coupling(self) -> np.ndarray:
        if isinstance(self.cross, CrossMatrix):
            return self.cross.coupling
        if isinstance(self.braid, BraidMatrix):
            return self.braid.coupling.transpose(0, 1, 3, 2)
        n = self.n_generators
        arr = np.zeros((n, n, n, n), dtype=complex)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                arr[i - 1, j - 1, i - 1, j - 1] = complex(self.cross_phase(i, j))
        return arr

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n_generators:
            raise ModelSpecError(f"generator index {i} out of range 1..{self.n_generators}")

    def check_word(self, word: TensorWord) -> None:
        for letter in word:
            self._check_index(letter)


def make_model(group: GroupSpec,
               eps: Bicharacter,
               grades: Sequence[GroupElement | Sequence[int]],
               pairing,
               braid: GradeDiagonal | BraidMatrix = GRADE_DIAGONAL,
               cross: DerivedCross | CrossMatrix = DERIVED_CROSS,
               expansion_sign: int = 1) -> ParticleModel:
    """Validate and build a :class:`ParticleModel`.

    ``grades`` entries may be :class:`GroupElement` or raw residue sequences.
    The unit object is the empty word, graded by the group identity.
    """
    if eps.group != group:
        raise ModelSpecError(f"bicharacter lives on {eps.group}, model group is {group}")
    grade_elems = []
    for raw in grades:
        g = raw if isinstance(raw, GroupElement) else group.element(raw)
        if g.group != group:
            raise ModelSpecError(f"grade {g} is not an element of {group}")
        grade_elems.append(g)
    n = len(grade_elems)
    if n < 1:
        raise ModelSpecError("a model needs at least one generator")
    pairing_arr = np.asarray(pairing, dtype=complex)
    if pairing_arr.shape != (n, n):
        raise ModelSpecError(f"pairing must be {n}x{n}, got {pairing_arr.shape}")
    if isinstance(braid, np.ndarray):
        braid = BraidMatrix(braid, n)
    if isinstance(braid, BraidMatrix):
        _as_coupling(braid.coupling, n)
        action = _action_matrix(braid.coupling)
        if np.linalg.matrix_rank(action) != n * n:
            raise ModelSpecError("braid coupling matrix is singular; the exchange must be invertible")
    if isinstance(cross, np.ndarray):
        cross = CrossMatrix(cross, n)
    if isinstance(cross, CrossMatrix):
        _as_coupling(cross.coupling, n)
    if expansion_sign not in (1, -1):
        raise ModelSpecError("expansion_sign must be +1 or -1")
    return ParticleModel(group, eps, tuple(grade_elems), pairing_arr, braid, cross, expansion_sign)


def q_swap_braid(n_generators: int, q: complex) -> BraidMatrix:
    """Coupling sending pair ``(i, j)`` to ``q * (j, i)``."""
    arr = np.zeros((n_generators,) * 4, dtype=complex)
    for i in range(n_generators):
        for j in range(n_generators):
            arr[i, j, j, i] = q
    return BraidMatrix(arr)


def braid_factor(model: ParticleModel, i: int, j: int) -> complex:
    """Scalar swap factor for generators ``i``, ``j`` of a grade-diagonal model."""
    return complex(model.braid_phase(i, j))


def braid_on_word(model: ParticleModel, word: TensorWord, position: int) -> FockVector:
    """Apply the exchange to letters ``position`` and ``position+1`` (1-based)."""
    word = tuple(word)
    model.check_word(word)
    if not 1 <= position < len(word):
        raise ValueError(f"exchange position {position} out of range for a word of length {len(word)}")
    i, j = word[position - 1], word[position]
    head, tail = word[:position - 1], word[position + 1:]
    if model.is_grade_diagonal:
        factor = complex(model.braid_phase(i, j))
        return FockVector({head + (j, i) + tail: factor})
    coupling = model.braid_coupling
    out: dict[TensorWord, complex] = {}
    for k in range(1, model.n_generators + 1):
        for l in range(1, model.n_generators + 1):
            amp = coupling[i - 1, j - 1, k - 1, l - 1]
            if amp != 0:
                new = head + (k, l) + tail
                out[new] = out.get(new, 0.0) + amp
    return FockVector(out)


def check_yang_baxter(model: ParticleModel, tol: float = 1e-9) -> CheckReport:
    """Braid consistency on 3-letter words:
    ``(R x id)(id x R)(R x id) == (id x R)(R x id)(id x R)``.

    Grade-diagonal models are checked exactly on phases; explicit matrices
    numerically on the full two-step operators.
    """
    n = model.n_generators
    if model.is_grade_diagonal:
        defect = 0.0
        witness = None
        for i, j, k in product(range(1, n + 1), repeat=3):
            lhs = model.braid_phase(i, j) * model.braid_phase(i, k) * model.braid_phase(j, k)
            rhs = model.braid_phase(j, k) * model.braid_phase(i, k) * model.braid_phase(i, j)
            if lhs != rhs:
                d = abs(complex(lhs) - complex(rhs))
                if d > defect:
                    defect, witness = d, (i, j, k)
        return CheckReport.from_defect("yang-baxter", defect, tol, witness, {"exact": defect == 0.0})
    action = _action_matrix(model.braid_coupling)
    eye = np.eye(n)
    a = np.kron(action, eye)
    b = np.kron(eye, action)
    defect = float(np.abs(a @ b @ a - b @ a @ b).max())
    return CheckReport.from_defect("yang-baxter", defect, tol, None, {"exact": False})


def check_symmetry(model: ParticleModel, tol: float = 1e-9) -> CheckReport:
    """Whether the exchange squares to the identity on all 2-letter words."""
    n = model.n_generators
    if model.is_grade_diagonal:
        defect = 0.0
        witness = None
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                p = model.braid_phase(i, j) * model.braid_phase(j, i)
                if not p.is_one:
                    d = abs(complex(p) - 1.0)
                    if d > defect:
                        defect, witness = d, (i, j)
        return CheckReport.from_defect("symmetry", defect, tol, witness)
    action = _action_matrix(model.braid_coupling)
    diff = np.abs(action @ action - np.eye(n * n))
    defect = float(diff.max())
    witness = None
    if defect > tol:
        flat = int(diff.argmax())
        row, col = divmod(flat, n * n)
        witness = (divmod(row, n)[0] + 1, row % n + 1, divmod(col, n)[0] + 1, col % n + 1)
    return CheckReport.from_defect("symmetry", defect, tol, witness)


def extend_pairing(model: ParticleModel, dual_word: TensorWord, word: TensorWord) -> complex:
    """Pairing of ``(x_{i1} ... x_{in})*`` against ``x_{j1} ... x_{jn}``.

    Nested innermost-first evaluation collapses to the product of letterwise
    pairings ``prod_k <i_k|j_k>``.
    """
    dual_word, word = tuple(dual_word), tuple(word)
    if len(dual_word) != len(word):
        raise ValueError(f"pairing needs equal lengths, got {len(dual_word)} and {len(word)}")
    model.check_word(dual_word)
    model.check_word(word)
    value = 1.0 + 0.0j
    for i, j in zip(dual_word, word):
        value *= model.pairing_entry(i, j)
        if value == 0:
            return 0.0 + 0.0j
    return value
