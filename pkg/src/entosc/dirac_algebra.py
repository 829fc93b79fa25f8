"""Dirac's ten two-oscillator generators in three representations.

The labels L1, L2, L3, S3, K1, K2, K3, Q1, Q2, Q3 close under commutation
on the o(3,2) = sp(4,R) Lie algebra:

    [Li, Lj] = i eps_ijk Lk      [Li, Kj] = i eps_ijk Kk
    [Li, Qj] = i eps_ijk Qk      [Ki, Kj] = [Qi, Qj] = -i eps_ijk Lk
    [Li, S3] = 0                 [Ki, Qj] = -i delta_ij S3
    [Ki, S3] = -i Qi             [Qi, S3] = +i Ki

One 45-entry structure-constant table is checked against three
realizations:

``fock``
    Hermitian bilinears in two-mode ladder operators on the truncated
    number basis |n, m>, n, m <= cutoff, ordered row-major with the
    a-mode index outer.
``matrix5``
    5x5 matrices acting on (x, y, z, t, s) with metric (+, +, +, -, -):
    L's rotate the space block, K's boost against t, Q's boost against s,
    S3 rotates the (t, s) plane.
``sp4``
    4x4 flow matrices on phase space (x, y, p, q).  A generator G is the
    vector field -i (A v).grad, under which an operator bracket
    [G, G'] = i c G'' becomes the matrix bracket [A, A'] = c A''.

matrix5 and sp4 are stored as integer tables and checked in exact
rational arithmetic; only the fock check uses floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError

LABELS = ("L1", "L2", "L3", "S3", "K1", "K2", "K3", "Q1", "Q2", "Q3")

O32_METRIC = np.diag([1.0, 1.0, 1.0, -1.0, -1.0])

# Symplectic form on (x, y, p, q) with conjugate pairs (x, p) and (y, q).
SYMPLECTIC_FORM = np.array(
    [
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, -1.0, 0.0, 0.0],
    ]
)


# ---------------------------------------------------------------------------
# structure constants: [left, right] = i * lam * target, or zero
# ---------------------------------------------------------------------------

_EPS = {(1, 2): (3, 1), (2, 3): (1, 1), (1, 3): (2, -1)}


def _build_table() -> dict[tuple[str, str], tuple[int, str] | None]:
    table: dict[tuple[str, str], tuple[int, str] | None] = {}
    for (i, j), (k, sign) in _EPS.items():
        table[(f"L{i}", f"L{j}")] = (sign, f"L{k}")
        table[(f"L{i}", f"K{j}")] = (sign, f"K{k}")
        table[(f"L{i}", f"Q{j}")] = (sign, f"Q{k}")
        # swapped rotation index: eps_jik = -eps_ijk
        table[(f"L{j}", f"K{i}")] = (-sign, f"K{k}")
        table[(f"L{j}", f"Q{i}")] = (-sign, f"Q{k}")
        table[(f"K{i}", f"K{j}")] = (-sign, f"L{k}")
        table[(f"Q{i}", f"Q{j}")] = (-sign, f"L{k}")
    for i in (1, 2, 3):
        table[(f"L{i}", f"K{i}")] = None
        table[(f"L{i}", f"Q{i}")] = None
        table[(f"L{i}", "S3")] = None
        table[(f"K{i}", f"Q{i}")] = (-1, "S3")
        table[(f"K{i}", "S3")] = (-1, f"Q{i}")
        table[(f"Q{i}", "S3")] = (1, f"K{i}")
        for j in (1, 2, 3):
            if i != j:
                table[(f"K{i}", f"Q{j}")] = None
                table[(f"Q{j}", f"K{i}")] = None
    return table


_TABLE = _build_table()


def structure_constant(left: str, right: str) -> tuple[int, str] | None:
    """(lam, target) with [left, right] = i * lam * target, or None if zero."""
    if left not in LABELS or right not in LABELS:
        raise DomainError(f"unknown generator label in ({left!r}, {right!r})")
    if (left, right) in _TABLE:
        return _TABLE[(left, right)]
    entry = _TABLE.get((right, left))
    if entry is None:
        return None
    lam, target = entry
    return -lam, target


def canonical_pairs() -> list[tuple[str, str]]:
    """The 45 unordered generator pairs in canonical label order."""
    return [(LABELS[i], LABELS[j]) for i in range(len(LABELS)) for j in range(i + 1, len(LABELS))]


# ---------------------------------------------------------------------------
# integer tables for the exact representations
# ---------------------------------------------------------------------------

# sp4: twice the flow matrix (entries are half-integers), rows/cols (x, y, p, q).
_SP4_TWICE = {
    "L1": [[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]],
    "L2": [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    "L3": [[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]],
    "S3": [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]],
    "K1": [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]],
    "K2": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
    "K3": [[0, 0, 0, -1], [0, 0, -1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]],
    "Q1": [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
    "Q2": [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
    "Q3": [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]],
}

# matrix5: imaginary parts (the matrices are i times these), rows/cols (x, y, z, t, s).
_X, _Y, _Z, _T, _S = range(5)
_M5_PLANES = {
    "L1": (_Z, _Y, -1),  # rotation about x: i(E_zy - E_yz)
    "L2": (_X, _Z, -1),
    "L3": (_Y, _X, -1),
    "S3": (_S, _T, -1),
    "K1": (_X, _T, +1),  # boosts pair symmetrically: i(E_ab + E_ba)
    "K2": (_Y, _T, +1),
    "K3": (_Z, _T, +1),
    "Q1": (_X, _S, +1),
    "Q2": (_Y, _S, +1),
    "Q3": (_Z, _S, +1),
}


def _matrix5_im(label: str) -> list[list[int]]:
    a, b, sign = _M5_PLANES[label]
    mat = [[0] * 5 for _ in range(5)]
    mat[a][b] = 1
    mat[b][a] = sign
    return mat


def matrix5_generators() -> dict[str, np.ndarray]:
    """The ten 5x5 generators as complex arrays (entries 0, +/- i)."""
    return {lab: 1j * np.array(_matrix5_im(lab), dtype=float) for lab in LABELS}


def sp4_generators() -> dict[str, np.ndarray]:
    """The ten phase-space flow matrices (entries 0, +/- 1/2)."""
    return {lab: np.array(_SP4_TWICE[lab], dtype=float) / 2.0 for lab in LABELS}


# ---------------------------------------------------------------------------
# exact complex-rational matrices
# ---------------------------------------------------------------------------


class _ExactMatrix:
    """Square matrix over Q + iQ, for exact commutator checks."""

    __slots__ = ("re", "im", "dim")

    def __init__(self, re, im):
        self.re = [[Fraction(v) for v in row] for row in re]
        self.im = [[Fraction(v) for v in row] for row in im]
        self.dim = len(self.re)

    @classmethod
    def zeros(cls, dim: int) -> "_ExactMatrix":
        z = [[0] * dim for _ in range(dim)]
        return cls(z, z)

    def __matmul__(self, other: "_ExactMatrix") -> "_ExactMatrix":
        d = self.dim
        re = [[Fraction(0)] * d for _ in range(d)]
        im = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            for k in range(d):
                ar, ai = self.re[i][k], self.im[i][k]
                if not ar and not ai:
                    continue
                brow_r, brow_i = other.re[k], other.im[k]
                for j in range(d):
                    re[i][j] += ar * brow_r[j] - ai * brow_i[j]
                    im[i][j] += ar * brow_i[j] + ai * brow_r[j]
        return _ExactMatrix(re, im)

    def __sub__(self, other: "_ExactMatrix") -> "_ExactMatrix":
        d = self.dim
        return _ExactMatrix(
            [[self.re[i][j] - other.re[i][j] for j in range(d)] for i in range(d)],
            [[self.im[i][j] - other.im[i][j] for j in range(d)] for i in range(d)],
        )

    def scale_imag(self, lam: Fraction) -> "_ExactMatrix":
        """Multiply by the purely imaginary scalar i*lam."""
        d = self.dim
        return _ExactMatrix(
            [[-lam * self.im[i][j] for j in range(d)] for i in range(d)],
            [[lam * self.re[i][j] for j in range(d)] for i in range(d)],
        )

    def scale_real(self, lam: Fraction) -> "_ExactMatrix":
        d = self.dim
        return _ExactMatrix(
            [[lam * self.re[i][j] for j in range(d)] for i in range(d)],
            [[lam * self.im[i][j] for j in range(d)] for i in range(d)],
        )

    def commutator(self, other: "_ExactMatrix") -> "_ExactMatrix":
        return (self @ other) - (other @ self)

    def max_abs(self) -> Fraction:
        """Entrywise max of |Re| + |Im|; zero iff the matrix is zero."""
        top = Fraction(0)
        for i in range(self.dim):
            for j in range(self.dim):
                mag = abs(self.re[i][j]) + abs(self.im[i][j])
                if mag > top:
                    top = mag
        return top


def _exact_matrix5() -> dict[str, _ExactMatrix]:
    zeros = [[0] * 5 for _ in range(5)]
    return {lab: _ExactMatrix(zeros, _matrix5_im(lab)) for lab in LABELS}


def _exact_sp4() -> dict[str, _ExactMatrix]:
    zeros = [[0] * 4 for _ in range(4)]
    half = Fraction(1, 2)
    return {
        lab: _ExactMatrix([[half * v for v in row] for row in _SP4_TWICE[lab]], zeros)
        for lab in LABELS
    }


# ---------------------------------------------------------------------------
# truncated Fock representation
# ---------------------------------------------------------------------------


def two_mode_ladders(cutoff: int) -> tuple[np.ndarray, np.ndarray]:
    """Annihilation matrices (a, b) on |n, m>, n, m <= cutoff, a-mode outer."""
    if cutoff != int(cutoff) or cutoff < 2:
        raise DomainError(f"fock cutoff must be an integer >= 2, got {cutoff!r}")
    dim = int(cutoff) + 1
    lower = np.zeros((dim, dim))
    ns = np.arange(1, dim)
    lower[ns - 1, ns] = np.sqrt(ns)
    eye = np.eye(dim)
    return np.kron(lower, eye), np.kron(eye, lower)


def safe_sector_mask(cutoff: int) -> np.ndarray:
    """Boolean mask of basis states with total excitation n + m <= cutoff - 2.

    Creation bilinears leak one excitation per factor, so commutators on a
    cutoff-truncated space are only exact on columns drawn from this sector.
    """
    dim = int(cutoff) + 1
    n, m = np.divmod(np.arange(dim * dim), dim)
    return (n + m) <= (cutoff - 2)


def fock_generators(cutoff: int) -> dict[str, np.ndarray]:
    """The ten Hermitian bilinears on the truncated two-mode basis."""
    a, b = two_mode_ladders(cutoff)
    ad, bd = a.conj().T, b.conj().T
    gens = {
        "L1": (ad @ b + bd @ a) / 2.0,
        "L2": (ad @ b - bd @ a) / 2j,
        "L3": (ad @ a - bd @ b) / 2.0,
        # bb^dag ordering kept (vacuum carries S3 eigenvalue 1/2), but
        # written as b^dag b + 1 so the truncated matrix has the operator's
        # true elements; the literal product b @ bd zeroes the top diagonal
        # entry and corrupts commutators even on safe-sector columns.
        "S3": (ad @ a + bd @ b + np.eye(a.shape[0])) / 2.0,
        "K1": -(ad @ ad + a @ a - bd @ bd - b @ b) / 4.0,
        "K2": 1j * (ad @ ad - a @ a + bd @ bd - b @ b) / 4.0,
        "K3": (ad @ bd + a @ b) / 2.0,
        # The sign of the s-boosts is pinned by the commutator table: with
        # the opposite sign the nine brackets coupling Q to K and S3 flip.
        "Q1": 1j * (ad @ ad - a @ a - bd @ bd + b @ b) / 4.0,
        "Q2": (ad @ ad + a @ a + bd @ bd + b @ b) / 4.0,
        "Q3": -1j * (ad @ bd - a @ b) / 2.0,
    }
    return {lab: gens[lab].astype(complex) for lab in LABELS}


# ---------------------------------------------------------------------------
# the checker
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairCheck:
    left: str
    right: str
    expected: str
    deviation: float


@dataclass(frozen=True)
class AlgebraReport:
    rep: str
    pairs: tuple[PairCheck, ...]
    max_deviation: float

    def as_dict(self) -> dict:
        return {
            "rep": self.rep,
            "pairs": [
                {
                    "pair": f"[{p.left},{p.right}]",
                    "expected": p.expected,
                    "deviation": p.deviation,
                }
                for p in self.pairs
            ],
            "max_deviation": self.max_deviation,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent)


def _expected_string(entry: tuple[int, str] | None) -> str:
    if entry is None:
        return "0"
    lam, target = entry
    return f"i*{target}" if lam == 1 else f"-i*{target}" if lam == -1 else f"{lam}i*{target}"


def check_algebra(rep: str, cutoff: int | None = None) -> AlgebraReport:
    """Verify all 45 commutators of one representation against the table.

    fock requires a cutoff and is compared in floating point on columns
    from the truncation-safe sector; matrix5 and sp4 are compared in exact
    rational arithmetic (a deviation of exactly 0.0 is the expected outcome).
    For sp4 flow matrices the bracket [G, G'] = i*lam*G'' reads
    [A, A'] = lam * A''; for the other two it reads [G, G'] = (i*lam) G''.
    """
    if rep == "fock":
        if cutoff is None:
            raise DomainError("rep='fock' requires a cutoff")
        gens = fock_generators(cutoff)
        mask = safe_sector_mask(cutoff)
        checks = []
        for left, right in canonical_pairs():
            entry = structure_constant(left, right)
            comm = gens[left] @ gens[right] - gens[right] @ gens[left]
            if entry is not None:
                lam, target = entry
                comm = comm - 1j * lam * gens[target]
            dev = float(np.abs(comm[:, mask]).max())
            checks.append(PairCheck(left, right, _expected_string(entry), dev))
    elif rep in ("matrix5", "sp4"):
        if cutoff is not None:
            raise DomainError(f"cutoff applies only to rep='fock', not {rep!r}")
        gens = _exact_matrix5() if rep == "matrix5" else _exact_sp4()
        checks = []
        for left, right in canonical_pairs():
            entry = structure_constant(left, right)
            diff = gens[left].commutator(gens[right])
            if entry is not None:
                lam, target = entry
                expected = (
                    gens[target].scale_real(Fraction(lam))
                    if rep == "sp4"
                    else gens[target].scale_imag(Fraction(lam))
                )
                diff = diff - expected
            checks.append(PairCheck(left, right, _expected_string(entry), float(diff.max_abs())))
    else:
        raise DomainError(f"unknown representation {rep!r}; expected fock, matrix5, or sp4")
    return AlgebraReport(rep=rep, pairs=tuple(checks), max_deviation=max(c.deviation for c in checks))


# ---------------------------------------------------------------------------
# structural validators used by the tests and the CLI
# ---------------------------------------------------------------------------


def metric_defect(G: np.ndarray) -> float:
    """max |B g + g B^T| with B = -iG: zero iff B generates O(3,2) flows."""
    B = np.real(-1j * np.asarray(G, dtype=complex))
    return float(np.abs(B @ O32_METRIC + O32_METRIC @ B.T).max())


def symplectic_defect(A: np.ndarray) -> float:
    """max |A^T J + J A|: zero iff the flow of A is canonical."""
    A = np.asarray(A, dtype=float)
    J = SYMPLECTIC_FORM
    return float(np.abs(A.T @ J + J @ A).max())


def hermiticity_defect(G: np.ndarray) -> float:
    G = np.asarray(G, dtype=complex)
    return float(np.abs(G - G.conj().T).max())
