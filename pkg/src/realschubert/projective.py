"""Codimension-2 subspaces of P^d and the rational functions they define.

A subspace ``X`` is cut out by two linear forms whose coefficient rows
``b_0, b_1`` form a 2 x (d+1) matrix ``B``. Reading the rows as polynomial
coefficients (lowest degree first) gives ``f = p/q`` with ``p = b_0`` and
``q = b_1``. Row operations on ``B`` change ``f`` by a Moebius map, so the
row span of ``B`` (equivalently its Pluecker vector) is the class of ``f``.

Scalars may be exact (``int``/``Fraction``) or floating (``complex``). Exact
inputs get exact answers; anything else goes through numpy with a relative
tolerance.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Optional, Sequence

import numpy as np

from . import exact
from .errors import BlockTooLarge, DegenerateSubspace

DEFAULT_TOL = 1e-8


# ---------------------------------------------------------------- polynomials

def poly_eval(coeffs: Sequence, z):
    """Horner evaluation, coefficients lowest degree first."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_from_roots(roots: Sequence[tuple], exact_scalars: bool = False) -> list:
    """Monic ``prod (z - x)^m`` from ``(x, m)`` pairs."""
    out: list = [Fraction(1) if exact_scalars else 1.0]
    for x, m in roots:
        for _ in range(m):
            out = poly_mul(out, [-x, 1])
    return out


def poly_derivative(coeffs: Sequence) -> list:
    return [k * c for k, c in enumerate(coeffs)][1:] or [0]


def poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    """Long division, lowest degree first. ``den`` must have a nonzero leading coefficient."""
    num = list(num)
    den = list(den)
    while len(den) > 1 and den[-1] == 0:
        den.pop()
    lead = den[-1]
    n, m = len(num) - 1, len(den) - 1
    if n < m:
        return [0], num
    quot = [0] * (n - m + 1)
    for k in range(n - m, -1, -1):
        coef = num[k + m] / lead
        quot[k] = coef
        for i, c in enumerate(den):
            num[k + i] -= coef * c
    return quot, num[:m] if m else [0]


def wronskian(p: Sequence, q: Sequence) -> list:
    """``p' q - p q'``, lowest degree first."""
    a = poly_mul(poly_derivative(p), q)
    b = poly_mul(p, poly_derivative(q))
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def chordal(p1, q1, p2, q2) -> float:
    """Chordal distance on the Riemann sphere between ``p1/q1`` and ``p2/q2`` (homogeneous pairs)."""
    num = abs(p1 * q2 - p2 * q1)
    den = np.hypot(abs(p1), abs(q1)) * np.hypot(abs(p2), abs(q2))
    return float(num / den) if den else 0.0


# ---------------------------------------------------------------- types

def _is_exact_matrix(rows) -> bool:
    return all(exact.all_exact(r) for r in rows)


def _as_complex(rows) -> np.ndarray:
    return np.array([[complex(x) for x in r] for r in rows], dtype=complex)


@dataclass(frozen=True)
class CurveMatrix:
    """Columns spanning a subspace cut from the rational normal curve.

    A point of multiplicity ``m`` contributes ``E(x), E'(x), ..., E^(m-1)(x)``.
    """

    columns: tuple[tuple, ...]
    points: tuple[tuple, ...]
    d: int

    @property
    def exact(self) -> bool:
        return _is_exact_matrix(self.columns)

    @property
    def matrix(self) -> list[list]:
        """(d+1) x (a+1) matrix with the columns above."""
        return [list(row) for row in zip(*self.columns)]

    def array(self) -> np.ndarray:
        return _as_complex(self.columns).T


def curve_column(x, d: int, order: int = 0) -> tuple:
    """``order``-th derivative of ``E(z) = (1, z, ..., z^d)`` at ``x``."""
    col = []
    for i in range(d + 1):
        if i < order:
            col.append(0 * x)
        else:
            col.append(factorial(i) // factorial(i - order) * x ** (i - order))
    return tuple(col)


def curve_matrix(points: Sequence[tuple], d: int) -> CurveMatrix:
    pts = tuple((x, int(m)) for x, m in points)
    if any(m < 1 for _, m in pts):
        raise ValueError("multiplicities must be >= 1")
    total = sum(m for _, m in pts)
    if total > d:
        raise BlockTooLarge(f"block spans {total} columns but d = {d}")
    cols = []
    for x, m in pts:
        if exact.is_exact(x):
            x = Fraction(x)
        for k in range(m):
            cols.append(curve_column(x, d, k))
    return CurveMatrix(tuple(cols), pts, d)


@dataclass(frozen=True)
class Subspace:
    """Codimension-2 subspace given by its 2 x (d+1) coefficient matrix."""

    B: tuple[tuple, tuple]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.B)
        if len(rows) != 2 or len(rows[0]) != len(rows[1]) or len(rows[0]) < 2:
            raise DegenerateSubspace("B must be 2 x (d+1) with d >= 1")
        object.__setattr__(self, "B", rows)
        if _matrix_rank(rows) != 2:
            raise DegenerateSubspace("coefficient matrix must have rank 2")

    @property
    def d(self) -> int:
        return len(self.B[0]) - 1

    @property
    def exact(self) -> bool:
        return _is_exact_matrix(self.B)

    def array(self) -> np.ndarray:
        return _as_complex(self.B)


def _matrix_rank(rows, tol: float = 1e-12) -> int:
    if _is_exact_matrix(rows):
        return exact.rank(rows)
    s = np.linalg.svd(_as_complex(rows), compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))


@dataclass(frozen=True)
class RationalClass:
    """Class of ``f = p/q`` under Moebius post-composition; coefficients lowest degree first."""

    p: tuple
    q: tuple

    def __post_init__(self):
        p, q = tuple(self.p), tuple(self.q)
        n = max(len(p), len(q))
        zero = Fraction(0) if exact.all_exact(p + q) else 0.0
        p = p + (zero,) * (n - len(p))
        q = q + (zero,) * (n - len(q))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        if n < 2 or _matrix_rank((p, q)) != 2:
            raise DegenerateSubspace("numerator and denominator must be linearly independent")

    @property
    def d(self) -> int:
        return len(self.p) - 1

    @property
    def exact(self) -> bool:
        return exact.all_exact(self.p + self.q)

    def array(self) -> np.ndarray:
        return _as_complex((self.p, self.q))

    def __call__(self, z):
        num, den = poly_eval(self.p, z), poly_eval(self.q, z)
        if den == 0:
            return complex("inf")
        return num / den

    def homogeneous(self, z) -> tuple:
        return poly_eval(self.p, z), poly_eval(self.q, z)

    @property
    def plucker(self) -> tuple:
        return plucker(self.p, self.q)

    @property
    def canonical_key(self) -> np.ndarray:
        return canonical_key(self)

    def conjugate(self) -> "RationalClass":
        if self.exact:
            return self
        return RationalClass(tuple(np.conj(self.p)), tuple(np.conj(self.q)))

    def to_json(self) -> dict:
        return {
            "p": [[float(complex(c).real), float(complex(c).imag)] for c in self.p],
            "q": [[float(complex(c).real), float(complex(c).imag)] for c in self.q],
        }

    @classmethod
    def from_json(cls, obj) -> "RationalClass":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(complex(re, im) for re, im in obj["p"]),
                   tuple(complex(re, im) for re, im in obj["q"]))


def plucker(p: Sequence, q: Sequence) -> tuple:
    """All 2x2 minors ``p_i q_j - p_j q_i`` for ``i < j``."""
    return tuple(p[i] * q[j] - p[j] * q[i] for i, j in combinations(range(len(p)), 2))


def canonical_key(f: RationalClass) -> np.ndarray:
    """Unit-norm Pluecker vector with its first non-negligible coordinate made positive real."""
    key = np.array([complex(x) for x in f.plucker])
    key = key / np.linalg.norm(key)
    mags = np.abs(key)
    first = int(np.argmax(mags > 1e-9 * mags.max()))
    return key * (abs(key[first]) / key[first])


# ---------------------------------------------------------------- dictionary

def rational_from_subspace(X: Subspace) -> RationalClass:
    return RationalClass(X.B[0], X.B[1])


def subspace_from_rational(f: RationalClass) -> Subspace:
    return Subspace((f.p, f.q))


def _as_subspace(X) -> Subspace:
    if isinstance(X, RationalClass):
        return subspace_from_rational(X)
    if isinstance(X, Subspace):
        return X
    return Subspace(tuple(X))


# ---------------------------------------------------------------- predicates

def incidence_check(X, W: CurveMatrix, tol: float = DEFAULT_TOL) -> bool:
    """True when ``B C`` has rank at most one, i.e. ``X`` meets ``span(C)`` non-transversally."""
    X = _as_subspace(X)
    if X.d != W.d:
        raise ValueError(f"dimension mismatch: subspace in P^{X.d}, curve matrix in P^{W.d}")
    if X.exact and W.exact:
        BC = [[sum(b * c for b, c in zip(row, col)) for col in W.columns] for row in X.B]
        return all(BC[0][i] * BC[1][j] - BC[0][j] * BC[1][i] == 0
                   for i, j in combinations(range(len(BC[0])), 2))
    BC = X.array() @ W.array()
    s = np.linalg.svd(BC, compute_uv=False)
    if s.size < 2 or s[0] == 0:
        return True
    return bool(s[1] <= tol * s[0])


def sylvester(p: Sequence, q: Sequence, deg: Optional[int] = None) -> list[list]:
    """Sylvester matrix of ``p`` and ``q`` taken with formal degree ``deg`` (default: length - 1)."""
    n = len(p) - 1 if deg is None else deg
    p = list(p) + [0] * (n + 1 - len(p))
    q = list(q) + [0] * (n + 1 - len(q))
    hi_p, hi_q = p[::-1], q[::-1]
    size = 2 * n
    rows = []
    for i in range(n):
        rows.append([0] * i + hi_p + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + hi_q + [0] * (size - n - 1 - i))
    return rows


def _orthonormal_rows(A: np.ndarray) -> np.ndarray:
    _, _, vh = np.linalg.svd(A, full_matrices=False)
    return vh[:2]


def projective_roots(coeffs: Sequence, d: int, tol: float = DEFAULT_TOL) -> list[complex]:
    """Roots of a polynomial of formal degree ``d``; a degree drop of ``k`` adds ``k`` roots at infinity."""
    c = np.array([complex(x) for x in coeffs], dtype=complex)
    c = np.pad(c, (0, d + 1 - len(c)))
    scale = np.linalg.norm(c)
    k = 0
    while k < d and abs(c[d - k]) <= tol * scale:
        k += 1
    finite = np.polynomial.polynomial.polyroots(c[:d + 1 - k]) if d - k > 0 else np.array([])
    return list(finite) + [complex("inf")] * k


def chordal_point(a: complex, b: complex) -> float:
    """Chordal distance between two points of the Riemann sphere (``inf`` allowed)."""
    if np.isinf(a) and np.isinf(b):
        return 0.0
    if np.isinf(a):
        return float(1 / np.sqrt(1 + abs(b) ** 2))
    if np.isinf(b):
        return float(1 / np.sqrt(1 + abs(a) ** 2))
    return float(abs(a - b) / np.sqrt((1 + abs(a) ** 2) * (1 + abs(b) ** 2)))


def is_reducible(f, tol: float = DEFAULT_TOL) -> bool:
    """True when ``p`` and ``q`` share a root, counting a common root at infinity (degree drop).

    Exact classes use the resultant: both polynomials are taken with formal
    degree ``d``, so their Sylvester determinant vanishes exactly in those
    two situations. Floating classes compare the roots of an orthonormal
    basis pair in the chordal metric; the Sylvester matrix in the monomial
    basis is too ill-conditioned to threshold once ``d`` and the point
    spread grow.
    """
    if isinstance(f, Subspace):
        f = rational_from_subspace(f)
    d = f.d
    if f.exact:
        return exact.det(sylvester(f.p, f.q, d)) == 0
    rows = _orthonormal_rows(f.array())
    rp = projective_roots(rows[0], d, tol)
    rq = projective_roots(rows[1], d, tol)
    return any(chordal_point(a, b) <= tol for a in rp for b in rq)


def sylvester_gap(f: RationalClass) -> float:
    """``sigma_min / sigma_max`` of the formal-degree Sylvester matrix (diagnostic only)."""
    rows = _orthonormal_rows(f.array())
    S = np.array(sylvester(list(rows[0]), list(rows[1]), f.d), dtype=complex)
    s = np.linalg.svd(S, compute_uv=False)
    return float(s[-1] / s[0])


def real_representative(f: RationalClass, tol: float = DEFAULT_TOL) -> Optional[RationalClass]:
    """A real-coefficient member of the class of ``f``, or ``None`` if the class is not real."""
    if f.exact:
        return f
    B = f.array()
    stack = np.vstack([B, np.conj(B)])
    s = np.linalg.svd(stack, compute_uv=False)
    if s[2] > tol * s[0]:
        return None
    # real basis of the span
    _, _, vh = np.linalg.svd(np.vstack([B.real, B.imag]))
    R = vh[:2]
    # prefer Re(e^{-i phi} B) so the representative stays recognisable
    best, best_sv = None, -1.0
    for phi in np.linspace(0.0, np.pi, 181)[:-1]:
        cand = (np.exp(-1j * phi) * B).real
        score = np.linalg.svd(cand, compute_uv=False)[1]
        if score > best_sv * (1 + 1e-9):
            best, best_sv = cand, score
    if best is None or best_sv < 1e-6 * s[0]:
        best = R
    # project onto the real span to remove imaginary noise
    best = best @ R.T @ R
    return RationalClass(tuple(float(x) for x in best[0]), tuple(float(x) for x in best[1]))


def is_real_class(f, tol: float = DEFAULT_TOL) -> tuple[bool, Optional[RationalClass]]:
    """Whether the row span of ``B`` is invariant under complex conjugation."""
    if isinstance(f, Subspace):
        f = rational_from_subspace(f)
    rep = real_representative(f, tol)
    return rep is not None, rep


def key_distance(k1: np.ndarray, k2: np.ndarray) -> float:
    """Projective (sine) distance between two unit vectors.

    Measured as the length of the component of ``k2`` orthogonal to ``k1``,
    which stays accurate for tiny angles where ``sqrt(1 - cos^2)`` does not.
    """
    k1 = np.asarray(k1, dtype=complex)
    k2 = np.asarray(k2, dtype=complex)
    return float(min(1.0, np.linalg.norm(k2 - np.vdot(k1, k2) * k1)))


def classes_equal(f1, f2, tol: float = DEFAULT_TOL) -> bool:
    if isinstance(f1, Subspace):
        f1 = rational_from_subspace(f1)
    if isinstance(f2, Subspace):
        f2 = rational_from_subspace(f2)
    if f1.d != f2.d:
        return False
    if f1.exact and f2.exact:
        return exact.rank([f1.plucker, f2.plucker]) == 1
    return key_distance(f1.canonical_key, f2.canonical_key) <= tol


def conjugate_distance(f1: RationalClass, f2: RationalClass) -> float:
    """Key distance between ``f1`` and the complex conjugate class of ``f2``."""
    return key_distance(f1.canonical_key, np.conj(f2.canonical_key))
