"""Rational functions that are constant on prescribed blocks of real points.

Given blocks ``A_1, ..., A_q`` (points with multiplicities), find every class
of degree-``d`` rational functions ``f`` with ``f`` constant on each block,
where a point of multiplicity ``m`` asks ``f - f(x)`` to vanish to order ``m``.
A block that is a single point of multiplicity ``a+1`` therefore prescribes a
critical point of multiplicity ``a``.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Optional, Sequence

import numpy as np
import numpy.polynomial.polynomial as npoly

from . import exact
from .combinatorics import ContentVector, kostka
from .errors import (ConstraintViolation, DegenerateSubspace, GaugeFailure,
                     NotAFlagProblem, WrongCodimension)
from .projective import (CurveMatrix, RationalClass, Subspace, canonical_key,
                         conjugate_distance, curve_matrix, incidence_check,
                         is_real_class, is_reducible, key_distance, poly_divmod,
                         poly_eval, poly_from_roots, poly_mul, subspace_from_rational,
                         wronskian)

log = logging.getLogger(__name__)

Block = tuple[tuple[float, int], ...]


# ---------------------------------------------------------------- configuration

@dataclass(frozen=True)
class ProblemConfig:
    d: int
    blocks: tuple[Block, ...]
    non_generic: bool = False

    def __post_init__(self):
        blocks = tuple(tuple((x, int(m)) for x, m in blk) for blk in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.d < 2:
            raise ConstraintViolation(f"d must be >= 2, got {self.d}")
        if not blocks:
            raise ConstraintViolation("at least one block is required")
        for j, blk in enumerate(blocks, start=1):
            if any(m < 1 for _, m in blk):
                raise ConstraintViolation(f"block {j}: multiplicities must be positive")
            pts = [x for x, _ in blk]
            if len(set(pts)) != len(pts):
                raise ConstraintViolation(f"block {j}: points must be distinct")
            a = sum(m for _, m in blk) - 1
            if not 1 <= a <= self.d - 1:
                raise ConstraintViolation(f"block {j}: need 1 <= a_j <= d-1, got a_j = {a}")
        if self.has_collisions and not self.non_generic:
            raise ConstraintViolation(
                "a point is shared between blocks; pass non_generic=True to allow it")

    @property
    def content(self) -> tuple[int, ...]:
        return tuple(sum(m for _, m in blk) - 1 for blk in self.blocks)

    @property
    def q(self) -> int:
        return len(self.blocks)

    @property
    def has_collisions(self) -> bool:
        seen = [x for blk in self.blocks for x, _ in blk]
        return len(set(seen)) != len(seen)

    def content_vector(self) -> ContentVector:
        return ContentVector(self.content)

    def check_schubert(self) -> ContentVector:
        """Content vector, raising unless ``sum a_j = 2d - 2``."""
        cv = self.content_vector()
        if cv.d != self.d:
            raise ConstraintViolation(
                f"content {cv.entries} sums to {sum(cv.entries)}, expected 2d-2 = {2 * self.d - 2}")
        return cv

    def points(self) -> list:
        return [x for blk in self.blocks for x, _ in blk]

    def to_json(self) -> dict:
        out = {"d": self.d,
               "blocks": [[{"x": float(x), "m": m} for x, m in blk] for blk in self.blocks]}
        if self.non_generic:
            out["non_generic"] = True
        return out

    @classmethod
    def from_json(cls, obj) -> "ProblemConfig":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            blocks = tuple(tuple((float(pt["x"]), int(pt.get("m", 1))) for pt in blk)
                           for blk in obj["blocks"])
            return cls(int(obj["d"]), blocks, bool(obj.get("non_generic", False)))
        except (KeyError, TypeError) as exc:
            raise ConstraintViolation(f"malformed config: {exc}") from exc

    @classmethod
    def from_point_sets(cls, d: int, sets: Sequence[Sequence[float]], **kw) -> "ProblemConfig":
        return cls(d, tuple(tuple((x, 1) for x in s) for s in sets), **kw)


def hulls(config: ProblemConfig) -> list[tuple[float, float]]:
    return [(min(x for x, _ in blk), max(x for x, _ in blk)) for blk in config.blocks]


def separation_margin(config: ProblemConfig) -> float:
    """Smallest gap ``min(A_k) - max(A_i)`` over block pairs ``i < k`` (negative once blocks overlap)."""
    h = hulls(config)
    gaps = [h[k][0] - h[i][1] for i in range(len(h)) for k in range(i + 1, len(h))]
    return min(gaps) if gaps else float("inf")


def is_separated(config: ProblemConfig) -> bool:
    """True iff the closed intervals spanned by the blocks are pairwise disjoint."""
    h = sorted(hulls(config))
    return all(h[i][1] < h[i + 1][0] for i in range(len(h) - 1))


# ---------------------------------------------------------------- residuals

def _orthonormal(f: RationalClass) -> tuple[np.ndarray, np.ndarray]:
    _, _, vh = np.linalg.svd(f.array(), full_matrices=False)
    return vh[0], vh[1]


def block_remainder(f: RationalClass, block: Block) -> list:
    """Remainder of ``p(z) q(w) - q(z) p(w)`` modulo ``prod (z - x)^m`` over the block.

    ``w`` is the first point of the block. An exact class is evaluated
    exactly (float points are converted bit-for-bit); a floating class is
    first replaced by an orthonormal basis of its span.
    """
    w = block[0][0]
    if f.exact:
        p, q = list(f.p), list(f.q)
        w = Fraction(w)
        modulus = poly_from_roots([(Fraction(x), m) for x, m in block], exact_scalars=True)
    else:
        p, q = _orthonormal(f)
        p, q = list(p), list(q)
        modulus = poly_from_roots([(complex(x), m) for x, m in block])
    pw, qw = poly_eval(p, w), poly_eval(q, w)
    g = [a * qw - b * pw for a, b in zip(p, q)]
    return poly_divmod(g, modulus)[1]


def block_residual(f: RationalClass, block: Block) -> float:
    return float(np.linalg.norm(np.array([complex(c) for c in block_remainder(f, block)])))


def config_residuals(f: RationalClass, config: ProblemConfig) -> list[float]:
    return [block_residual(f, blk) for blk in config.blocks]


def relative_residual(f: RationalClass, config: ProblemConfig) -> float:
    return max(config_residuals(f, config)) / residual_scale(config)


def block_curve_matrix(block: Block, d: int) -> CurveMatrix:
    return curve_matrix(block, d)


# ---------------------------------------------------------------- polynomial case

def _derivative_basis(power: int, order: int, z):
    if order > power:
        return 0 * z
    return factorial(power) // factorial(power - order) * z ** (power - order)


def polynomial_system(config: ProblemConfig, use_exact: bool):
    """Linear system for ``c_1..c_{d-1}`` of ``p = z^d + c_{d-1} z^{d-1} + ... + c_1 z``."""
    d = config.d
    conv = Fraction if use_exact else float
    rows, rhs = [], []
    for blk in config.blocks:
        w = conv(blk[0][0])
        for idx, (x, m) in enumerate(blk):
            x = conv(x)
            for k in range(m):
                if idx == 0 and k == 0:
                    continue
                if k == 0:
                    rows.append([x ** l - w ** l for l in range(1, d)])
                    rhs.append(-(x ** d - w ** d))
                else:
                    rows.append([_derivative_basis(l, k, x) for l in range(1, d)])
                    rhs.append(-_derivative_basis(d, k, x))
    return rows, rhs


def solve_polynomial(config: ProblemConfig, arithmetic: str = "auto") -> RationalClass:
    """The unique normalised polynomial ``z^d + ... + c_1 z`` constant on every block.

    ``arithmetic`` is ``"exact"`` (Fractions, floats converted bit-exactly),
    ``"float"``, or ``"auto"`` (exact when all points are rational objects).
    """
    d = config.d
    if sum(config.content) != d - 1:
        raise WrongCodimension(f"need sum a_j = d-1 = {d - 1}, got {sum(config.content)}")
    use_exact = arithmetic == "exact" or (
        arithmetic == "auto" and exact.all_exact(config.points()))
    rows, rhs = polynomial_system(config, use_exact)
    if use_exact:
        try:
            c = exact.solve(rows, rhs)
        except ZeroDivisionError:
            raise AssertionError("singular system for a polynomial interpolation problem") from None
        p = [Fraction(0)] + c + [Fraction(1)]
        q = [Fraction(1)] + [Fraction(0)] * d
        return RationalClass(tuple(p), tuple(q))
    # The monomial system is badly conditioned away from the origin, so solve
    # for t = (z - centre) / scale and map back. Rescaling and dropping the
    # constant term are affine post-compositions, which keep the class.
    pts = [float(x) for x in config.points()]
    centre = 0.5 * (min(pts) + max(pts))
    scale = 0.5 * (max(pts) - min(pts)) or 1.0
    local = ProblemConfig(d, tuple(tuple(((float(x) - centre) / scale, m) for x, m in blk)
                                   for blk in config.blocks))
    rows, rhs = polynomial_system(local, use_exact=False)
    A = np.array(rows, dtype=float)
    b = np.array(rhs, dtype=float)
    assert np.linalg.matrix_rank(A) == d - 1, "singular system for a polynomial interpolation problem"
    c = np.linalg.solve(A, b)
    p_t = np.concatenate([[0.0], c, [1.0]])
    p = (_unscale(p_t, centre, scale, d) * scale ** d).real
    p[0] = 0.0
    p[d] = 1.0
    return RationalClass(tuple(float(x) for x in p), (1.0,) + (0.0,) * d)


def derivative_roots_in_gaps(config: ProblemConfig, f: RationalClass, tol: float = 1e-7) -> bool:
    """Check that ``p'`` has exactly ``d-1`` real roots, one inside each gap between consecutive block points."""
    p = np.array([float(c) for c in f.p])
    roots = npoly.polyroots(npoly.polyder(p))
    if len(roots) != config.d - 1:
        return False
    scale = max(1.0, max(abs(x) for x in config.points()))
    if np.any(np.abs(roots.imag) > tol * scale):
        return False
    real_roots = np.sort(roots.real)
    gaps = []
    for blk in config.blocks:
        xs = sorted(float(x) for x, _ in blk)
        gaps.extend(zip(xs[:-1], xs[1:]))
    if len(gaps) != len(real_roots):
        return False
    used = [False] * len(real_roots)
    for lo, hi in gaps:
        hits = [i for i, r in enumerate(real_roots) if lo < r < hi]
        if len(hits) != 1 or used[hits[0]]:
            return False
        used[hits[0]] = True
    return all(used)


# ---------------------------------------------------------------- Newton system

@dataclass
class SolverParams:
    seed: int = 0
    starts_budget: Optional[int] = None  # default 200 * kostka
    newton_tol: float = 1e-10
    dedup_tol: float = 1e-6
    max_iter: int = 200
    accept_tol: float = 1e-8
    max_gauges: int = 3

    def budget_for(self, target: int) -> int:
        return self.starts_budget if self.starts_budget is not None else 200 * max(1, target)

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in
                ("seed", "starts_budget", "newton_tol", "dedup_tol", "max_iter", "accept_tol", "max_gauges")}


def _shifted_derivative_rows(base: np.ndarray, n_terms: int, points: list[tuple[complex, int]]) -> np.ndarray:
    """Rows ``D^k[base(t) t^l](t_e)`` for ``l < n_terms`` and each (point, order) pair."""
    out = np.zeros((len(points), n_terms), dtype=complex)
    for l in range(n_terms):
        poly = np.concatenate([np.zeros(l), base])
        derivs = [poly]
        for e, (t, k) in enumerate(points):
            while len(derivs) <= k:
                derivs.append(npoly.polyder(derivs[-1]))
            out[e, l] = npoly.polyval(t, derivs[k]) if len(derivs[k]) else 0.0
    return out


class GaugedSystem:
    """Square system for one choice of gauge blocks ``(i1, i2, i3)``.

    ``p = P1 u`` with ``P1`` vanishing on block ``i1`` and ``u`` monic,
    ``q = P2 v`` with ``P2`` vanishing on block ``i2``, and ``f = c_j`` on
    every other block ``j`` with ``c_{i3} = 1``. Points are affinely
    rescaled to ``[-1, 1]`` first; ``to_class`` maps back.
    """

    def __init__(self, config: ProblemConfig, gauge: tuple[int, int, int]):
        self.config = config
        self.gauge = gauge
        d = config.d
        pts = [float(x) for x in config.points()]
        lo, hi = min(pts), max(pts)
        self.center = 0.5 * (lo + hi)
        self.scale = 0.5 * (hi - lo) if hi > lo else 1.0
        i1, i2, i3 = gauge
        content = config.content
        tblocks = [[((x - self.center) / self.scale, m) for x, m in blk] for blk in config.blocks]
        P1 = np.array(poly_from_roots(tblocks[i1]), dtype=float)
        P2 = np.array(poly_from_roots(tblocks[i2]), dtype=float)
        self.P1, self.P2 = P1, P2
        self.n_u = d - 1 - content[i1]
        self.n_v = d - 1 - content[i2] + 1
        others = [j for j in range(config.q) if j not in (i1, i2)]
        free_c = [j for j in others if j != i3]
        self.free_c = free_c
        rows: list[tuple[complex, int]] = []
        owner: list[int] = []
        for j in others:
            for t, m in tblocks[j]:
                for k in range(m):
                    rows.append((t, k))
                    owner.append(-1 if j == i3 else free_c.index(j))
        self.owner = np.array(owner)
        monic = np.concatenate([np.zeros(self.n_u), P1])
        derivs = [monic]
        a0 = []
        for t, k in rows:
            while len(derivs) <= k:
                derivs.append(npoly.polyder(derivs[-1]))
            a0.append(npoly.polyval(t, derivs[k]))
        self.a0 = np.array(a0, dtype=complex)
        self.Au = _shifted_derivative_rows(P1, self.n_u, rows)
        self.Av = _shifted_derivative_rows(P2, self.n_v, rows)
        self.n_c = len(free_c)
        self.n = self.n_u + self.n_v + self.n_c
        if self.n != len(rows):
            raise GaugeFailure(f"gauge {gauge}: {self.n} unknowns vs {len(rows)} equations")

    def split(self, x: np.ndarray):
        u = x[:self.n_u]
        v = x[self.n_u:self.n_u + self.n_v]
        c = x[self.n_u + self.n_v:]
        return u, v, c

    def values_per_row(self, c: np.ndarray) -> np.ndarray:
        cv = np.ones(len(self.owner), dtype=complex)
        mask = self.owner >= 0
        cv[mask] = c[self.owner[mask]]
        return cv

    def residual(self, x: np.ndarray) -> np.ndarray:
        u, v, c = self.split(x)
        return self.a0 + self.Au @ u - self.values_per_row(c) * (self.Av @ v)

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        u, v, c = self.split(x)
        cv = self.values_per_row(c)
        J = np.zeros((self.n, self.n), dtype=complex)
        J[:, :self.n_u] = self.Au
        J[:, self.n_u:self.n_u + self.n_v] = -cv[:, None] * self.Av
        Avv = self.Av @ v
        for e, o in enumerate(self.owner):
            if o >= 0:
                J[e, self.n_u + self.n_v + o] = -Avv[e]
        return J

    def magnitude(self, x: np.ndarray) -> float:
        u, v, c = self.split(x)
        cv = self.values_per_row(c)
        return float(np.linalg.norm(self.a0) + np.linalg.norm(self.Au @ u)
                     + np.linalg.norm(cv * (self.Av @ v)) + 1e-300)

    def newton(self, x: np.ndarray, tol: float, max_iter: int) -> tuple[np.ndarray, bool]:
        F = self.residual(x)
        fn = np.linalg.norm(F)
        for _ in range(max_iter):
            if fn <= tol * self.magnitude(x):
                return x, True
            try:
                step = np.linalg.solve(self.jacobian(x), F)
            except np.linalg.LinAlgError:
                return x, False
            if not np.all(np.isfinite(step)):
                return x, False
            lam = 1.0
            while True:
                xn = x - lam * step
                Fn = self.residual(xn)
                fnn = np.linalg.norm(Fn)
                if fnn < fn or lam < 1.0 / 64:
                    break
                lam *= 0.5
            x, F, fn = xn, Fn, fnn
            if not np.isfinite(fn) or np.linalg.norm(x) > 1e12:
                return x, False
        return x, fn <= tol * self.magnitude(x)

    def polish(self, x: np.ndarray, steps: int = 4) -> np.ndarray:
        """Plain Newton steps kept only while they reduce the residual."""
        fn = np.linalg.norm(self.residual(x))
        for _ in range(steps):
            try:
                xn = x - np.linalg.solve(self.jacobian(x), self.residual(x))
            except np.linalg.LinAlgError:
                break
            fnn = np.linalg.norm(self.residual(xn))
            if not fnn < fn:
                break
            x, fn = xn, fnn
        return x

    def from_class(self, f: RationalClass) -> Optional[np.ndarray]:
        """Coordinates of ``f`` in this gauge, or ``None`` if the class is not reachable here.

        The class is first moved by a Moebius map sending the value on block
        ``i1`` to 0, on block ``i2`` to infinity and on block ``i3`` to 1.
        """
        i1, i2, i3 = self.gauge
        d = self.config.d
        p_t = _rescale(np.array(f.p, dtype=complex), self.center, self.scale)
        q_t = _rescale(np.array(f.q, dtype=complex), self.center, self.scale)
        first = [(blk[0][0] - self.center) / self.scale for blk in self.config.blocks]
        vals = [(npoly.polyval(t, p_t), npoly.polyval(t, q_t)) for t in first]
        (a1, b1), (a2, b2) = vals[i1], vals[i2]
        new_p = b1 * p_t - a1 * q_t
        new_q = b2 * p_t - a2 * q_t
        num3, den3 = npoly.polyval(first[i3], new_p), npoly.polyval(first[i3], new_q)
        if abs(den3) < 1e-300 or abs(num3) < 1e-300:
            return None
        new_q = new_q * (num3 / den3)
        u_full = npoly.polydiv(np.pad(new_p, (0, max(0, d + 1 - len(new_p)))), self.P1)[0]
        v = npoly.polydiv(np.pad(new_q, (0, max(0, d + 1 - len(new_q)))), self.P2)[0]
        u_full = np.pad(u_full, (0, max(0, self.n_u + 1 - len(u_full))))[:self.n_u + 1]
        lead = u_full[self.n_u]
        mags = np.abs(u_full)
        if not np.all(np.isfinite(u_full)) or abs(lead) <= 1e-8 * mags.max():
            return None
        u = u_full[:self.n_u] / lead
        v = np.pad(v, (0, max(0, self.n_v - len(v))))[:self.n_v] / lead
        c = []
        for j in self.free_c:
            pv, qv = npoly.polyval(first[j], new_p), npoly.polyval(first[j], new_q)
            if abs(qv) < 1e-300:
                return None
            c.append(pv / qv)
        return np.concatenate([u, v, np.array(c, dtype=complex)])

    def to_class(self, x: np.ndarray) -> RationalClass:
        u, v, _ = self.split(x)
        p_t = npoly.polymul(self.P1, np.concatenate([u, [1.0]]))
        q_t = npoly.polymul(self.P2, v)
        p = _unscale(p_t, self.center, self.scale, self.config.d)
        q = _unscale(q_t, self.center, self.scale, self.config.d)
        return RationalClass(tuple(complex(c) for c in p), tuple(complex(c) for c in q))


def _unscale(coeffs_t: np.ndarray, center: float, scale: float, d: int) -> np.ndarray:
    """Coefficients in ``z`` of ``P((z - center) / scale)``."""
    lin = np.array([-center / scale, 1.0 / scale])
    out = np.zeros(1, dtype=complex)
    power = np.ones(1, dtype=complex)
    for c in coeffs_t:
        out = npoly.polyadd(out, c * power)
        power = npoly.polymul(power, lin)
    res = np.zeros(d + 1, dtype=complex)
    res[:min(len(out), d + 1)] = out[:d + 1]
    return res


def _rescale(coeffs: np.ndarray, center: float, scale: float) -> np.ndarray:
    """Coefficients in ``t`` of ``P(center + scale t)``."""
    lin = np.array([center, scale], dtype=complex)
    out = np.zeros(1, dtype=complex)
    power = np.ones(1, dtype=complex)
    for c in coeffs:
        out = npoly.polyadd(out, c * power)
        power = npoly.polymul(power, lin)
    return np.pad(out, (0, max(0, len(coeffs) - len(out))))[:len(coeffs)]


def refine(config: ProblemConfig, f: RationalClass) -> RationalClass:
    """Polish ``f`` in every gauge and keep the representative with the smallest residual.

    A gauge that sends two nearby blocks to 0 and infinity is badly
    conditioned, so a class found there can often be sharpened elsewhere.
    """
    best, best_res = f, max(config_residuals(f, config))
    floor = 1e-14 * residual_scale(config)
    for gauge in _gauge_order(config.q):
        if best_res <= floor:
            break
        system = GaugedSystem(config, gauge)
        x = system.from_class(best)
        if x is None:
            continue
        try:
            g = _tidy(system.to_class(system.polish(x)))
        except DegenerateSubspace:
            continue
        res = max(config_residuals(g, config))
        if res < best_res and key_distance(canonical_key(g), canonical_key(f)) < 1e-6:
            best, best_res = g, res
    return best


def _tidy(f: RationalClass) -> RationalClass:
    """Orthonormal basis of the span, as a representative with bounded coefficients."""
    p, q = _orthonormal(f)
    return RationalClass(tuple(complex(c) for c in p), tuple(complex(c) for c in q))


def _sort_key(f: RationalClass) -> tuple:
    k = canonical_key(f)
    return tuple(np.round(np.concatenate([k.real, k.imag]), 8))


# ---------------------------------------------------------------- solution sets

@dataclass
class SolutionSet:
    classes: list[RationalClass]
    residuals: list[float]
    reality_flags: list[bool]
    real_representatives: list[Optional[RationalClass]]
    starts_used: int
    starts_budget: int
    target_count: int
    incidence_ok: list[bool] = field(default_factory=list)
    gauges_tried: list[tuple[int, int, int]] = field(default_factory=list)
    non_generic: bool = False
    separated: bool = True
    wronskian_residuals: Optional[list[float]] = None

    @property
    def found(self) -> int:
        return len(self.classes)

    @property
    def real_count(self) -> int:
        return sum(self.reality_flags)

    @property
    def deficit(self) -> bool:
        return self.found < self.target_count

    def to_json(self) -> dict:
        out = {
            "target_count": self.target_count,
            "found": self.found,
            "real_count": self.real_count,
            "deficit": self.deficit,
            "starts_used": self.starts_used,
            "starts_budget": self.starts_budget,
            "separated": self.separated,
            "non_generic": self.non_generic,
            "gauges_tried": [list(g) for g in self.gauges_tried],
            "classes": [],
        }
        for i, f in enumerate(self.classes):
            entry = {
                "class": f.to_json(),
                "residual": self.residuals[i],
                "real": self.reality_flags[i],
                "incidence_ok": self.incidence_ok[i] if self.incidence_ok else None,
            }
            rep = self.real_representatives[i]
            if rep is not None:
                entry["real_representative"] = {"p": [float(complex(c).real) for c in rep.p],
                                                "q": [float(complex(c).real) for c in rep.q]}
            if self.wronskian_residuals is not None:
                entry["wronskian_residual"] = self.wronskian_residuals[i]
            out["classes"].append(entry)
        if self.deficit:
            out["deficit_explanations"] = [
                "numerical: start budget or tolerances too tight",
                "non-generic configuration: fewer isolated solutions than the Schubert bound",
            ]
        return out


def _gauge_order(q: int) -> list[tuple[int, int, int]]:
    pairs = [(i, j) for i, j in permutations(range(q), 2)]
    out = []
    for i, j in pairs:
        k = next(t for t in range(q) if t not in (i, j))
        out.append((i, j, k))
    return out


def _pair_class(config: ProblemConfig) -> RationalClass:
    p = poly_from_roots(config.blocks[0])
    q = poly_from_roots(config.blocks[1])
    return RationalClass(tuple(float(c) for c in p), tuple(float(c) for c in q))


def solve_problem1(config: ProblemConfig, params: Optional[SolverParams] = None) -> SolutionSet:
    """All classes of degree-``d`` rational functions constant on every block.

    Multi-start Newton on a gauge-fixed square system; stops once the Kostka
    number of distinct classes is reached or the start budget runs out.
    Output order is by canonical key, so it does not depend on which start
    found which class.
    """
    params = params or SolverParams()
    content = config.check_schubert()
    target = kostka(content)
    budget = params.budget_for(target)

    if config.q == 2:
        found = [_pair_class(config)]
        gauges: list[tuple[int, int, int]] = []
        used = 0
    else:
        found, used, gauges = _multistart(config, params, target, budget)
        found = [refine(config, f) for f in found]

    found.sort(key=_sort_key)
    return _assemble(config, found, used, budget, target, gauges)


def _multistart(config, params, target, budget):
    found: list[RationalClass] = []
    keys: list[np.ndarray] = []
    used = 0
    gauges = []
    seq = np.random.SeedSequence(params.seed)
    for g_idx, gauge in enumerate(_gauge_order(config.q)[:max(1, params.max_gauges)]):
        gauges.append(gauge)
        system = GaugedSystem(config, gauge)
        rngs = seq.spawn(budget)
        for child in rngs:
            if len(found) >= target:
                break
            rng = np.random.default_rng(child)
            x0 = (rng.standard_normal(system.n) + 1j * rng.standard_normal(system.n)) / np.sqrt(2)
            used += 1
            x, ok = system.newton(x0, params.newton_tol, params.max_iter)
            if not ok:
                continue
            x = system.polish(x)
            try:
                f = _tidy(system.to_class(x))
            except DegenerateSubspace:
                continue
            if is_reducible(f):
                continue
            if max(config_residuals(f, config)) > params.accept_tol * residual_scale(config):
                continue
            key = canonical_key(f)
            if any(key_distance(key, k) <= params.dedup_tol for k in keys):
                continue
            found.append(f)
            keys.append(key)
            if len(found) > target:
                raise AssertionError(
                    f"{len(found)} distinct classes exceed the Schubert bound {target}; dedup_tol too small?")
        if len(found) >= target:
            break
        log.info("gauge %s left a deficit (%d/%d); re-gauging", gauge, len(found), target)
    return found, used, gauges


def residual_scale(config: ProblemConfig) -> float:
    """Size of ``z^d`` over the configuration; block residuals are judged relative to it."""
    return max(1.0, max(abs(float(x)) for x in config.points())) ** config.d


def _assemble(config, classes, used, budget, target, gauges) -> SolutionSet:
    residuals, flags, reps, inc = [], [], [], []
    for f in classes:
        residuals.append(max(config_residuals(f, config)))
        real, rep = is_real_class(f, tol=1e-7)
        flags.append(real)
        reps.append(rep)
        inc.append(all(incidence_check(f, curve_matrix(blk, config.d), tol=1e-7)
                       for blk in config.blocks))
    return SolutionSet(
        classes=classes, residuals=residuals, reality_flags=flags,
        real_representatives=reps, starts_used=used, starts_budget=budget,
        target_count=target, incidence_ok=inc, gauges_tried=gauges,
        non_generic=config.non_generic, separated=is_separated(config))


# ---------------------------------------------------------------- critical points

def critical_point_config(points: Sequence[tuple[float, int]], d: int) -> ProblemConfig:
    return ProblemConfig(d, tuple(((x, a + 1),) for x, a in points))


def wronskian_residual(f: RationalClass, points: Sequence[tuple[float, int]]) -> float:
    """Relative distance of ``W(p, q)`` from the line spanned by ``prod (z - x_k)^{a_k}``."""
    p, q = _orthonormal(f)
    W = np.array(wronskian(list(p), list(q)), dtype=complex)
    T = np.array(poly_from_roots([(float(x), a) for x, a in points]), dtype=complex)
    n = max(len(W), len(T))
    W = np.pad(W, (0, n - len(W)))
    T = np.pad(T, (0, n - len(T)))
    lam = np.vdot(T, W) / np.vdot(T, T)
    return float(np.linalg.norm(W - lam * T) / np.linalg.norm(W))


def solve_critical_points(points: Sequence[tuple[float, int]], d: int,
                          params: Optional[SolverParams] = None) -> SolutionSet:
    """Classes of degree-``d`` functions with critical points ``x_k`` of multiplicity ``a_k``."""
    if sum(a for _, a in points) != 2 * d - 2:
        raise ConstraintViolation("critical point multiplicities must sum to 2d-2")
    config = critical_point_config(points, d)
    sol = solve_problem1(config, params)
    sol.wronskian_residuals = [wronskian_residual(f, points) for f in sol.classes]
    return sol


# ---------------------------------------------------------------- flags

@dataclass(frozen=True)
class Flag:
    F2: Subspace
    F1_equation: np.ndarray
    F2_generators: np.ndarray  # rows span F2 (projective dimension d-2)
    F1_generators: np.ndarray  # rows span F1 (projective dimension d-1)
    W1: CurveMatrix


def _null_rows(A: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    _, s, vh = np.linalg.svd(A)
    r = int(np.sum(s > tol * s[0]))
    return vh[r:].conj()


def flags_from_solution(config: ProblemConfig, f: RationalClass) -> Flag:
    """Flag ``F2 ⊂ F1`` from a solution: ``F2`` is the subspace of ``f``, ``F1 = span(F2, W1)``."""
    first, rest = config.blocks[0], config.blocks[1:]
    if any(m != 1 for _, m in first) or not rest or any(len(b) != 1 or b[0][1] != 2 for b in rest):
        raise NotAFlagProblem("need block 1 of distinct simple points and tangent blocks {(y, 2)}")
    d = config.d
    W1 = curve_matrix(first, d)
    F2 = subspace_from_rational(f)
    B = F2.array()
    # the combination of the two equations vanishing on W1: p - f(A_1) q
    BC = B @ W1.array()
    _, _, vh = np.linalg.svd(BC.T)
    combo = vh[-1].conj()
    eq = combo @ B
    return Flag(F2=F2, F1_equation=eq, F2_generators=_null_rows(B),
                F1_generators=_null_rows(eq[None, :]), W1=W1)
