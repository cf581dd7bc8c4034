from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from realschubert.errors import BlockTooLarge, DegenerateSubspace
from realschubert.projective import (RationalClass, Subspace, canonical_key, chordal,
                                     classes_equal, conjugate_distance, curve_matrix,
                                     incidence_check, is_real_class, is_reducible, key_distance,
                                     poly_derivative, poly_eval, poly_from_roots, poly_mul,
                                     rational_from_subspace, subspace_from_rational, wronskian)

small_ints = st.integers(-5, 5)
floats = st.floats(-3, 3, allow_nan=False)


def row_op(f, M):
    (a, b), (c, e) = M
    p = tuple(a * x + b * y for x, y in zip(f.p, f.q))
    q = tuple(c * x + e * y for x, y in zip(f.p, f.q))
    return RationalClass(p, q)


@st.composite
def float_classes(draw, d=None):
    d = d or draw(st.integers(2, 5))
    p = draw(st.lists(floats, min_size=d + 1, max_size=d + 1))
    q = draw(st.lists(floats, min_size=d + 1, max_size=d + 1))
    assume(np.linalg.matrix_rank(np.array([p, q]), tol=1e-3) == 2)
    return RationalClass(tuple(p), tuple(q))


class TestPolynomials:
    def test_mul_and_eval(self):
        assert poly_mul([1, 1], [-1, 1]) == [-1, 0, 1]
        assert poly_eval([1, 2, 3], 2) == 17

    def test_from_roots(self):
        assert poly_from_roots([(1, 2)], exact_scalars=True) == [1, -2, 1]

    def test_derivative(self):
        assert poly_derivative([5, 3, 2]) == [3, 4]

    def test_wronskian_of_z2_over_z_minus_1(self):
        # (z^2)' (z - 1) - z^2 = z^2 - 2z
        w = wronskian([0, 0, 1], [-1, 1, 0])
        assert list(w[:3]) == [0, -2, 1] and not any(w[3:])

    def test_chordal_symmetric(self):
        assert chordal(1, 0, 0, 1) == pytest.approx(1.0)
        assert chordal(1, 1, 1, 1) == pytest.approx(0.0)


class TestCurveMatrix:
    def test_points(self):
        assert curve_matrix([(0, 1), (1, 1)], 2).matrix == [[1, 1], [0, 1], [0, 1]]

    def test_osculating(self):
        assert curve_matrix([(0, 2)], 2).matrix == [[1, 0], [0, 1], [0, 0]]

    def test_single(self):
        assert curve_matrix([(2, 1)], 3).matrix == [[1], [2], [4], [8]]

    def test_second_derivative(self):
        assert curve_matrix([(1, 3)], 3).matrix == [[1, 0, 0], [1, 1, 0], [1, 2, 2], [1, 3, 6]]

    def test_too_large(self):
        with pytest.raises(BlockTooLarge):
            curve_matrix([(0, 2), (1, 2)], 3)

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=3, unique=True), st.integers(3, 5))
    def test_column_count(self, xs, d):
        W = curve_matrix([(x, 1) for x in xs], d)
        assert len(W.columns) == len(xs)
        assert W.array().shape == (d + 1, len(xs))


class TestDictionary:
    def test_subspace_to_function(self):
        f = rational_from_subspace(Subspace(([1, 0, 0], [0, 0, 1])))
        assert f(2) == Fraction(1, 4) or f(2) == pytest.approx(0.25)

    def test_function_to_subspace(self):
        X = subspace_from_rational(RationalClass((0, 1, 0), (1, 0, 0)))
        assert [list(r) for r in X.B] == [[0, 1, 0], [1, 0, 0]]

    def test_rank_deficient(self):
        with pytest.raises(DegenerateSubspace):
            Subspace(([1, 2, 3], [2, 4, 6]))
        with pytest.raises(DegenerateSubspace):
            RationalClass((1.0, 1.0), (2.0, 2.0))

    @given(float_classes())
    def test_round_trip(self, f):
        assert classes_equal(rational_from_subspace(subspace_from_rational(f)), f)

    @given(float_classes())
    def test_json_round_trip(self, f):
        g = RationalClass.from_json(f.to_json())
        assert key_distance(f.canonical_key, g.canonical_key) < 1e-12


class TestIncidence:
    inv_z2 = Subspace(([1, 0, 0], [0, 0, 1]))

    def test_constant_on_pair(self):
        assert incidence_check(self.inv_z2, curve_matrix([(1, 1), (-1, 1)], 2))

    def test_not_constant(self):
        assert not incidence_check(self.inv_z2, curve_matrix([(1, 1), (2, 1)], 2))

    def test_critical_point(self):
        assert incidence_check(RationalClass((0, 0, 1), (1, 0, 0)), curve_matrix([(0, 2)], 2))

    def test_float_path_agrees(self):
        X = Subspace(([1.0, 0.0, 0.0], [0.0, 0.0, 1.0]))
        assert incidence_check(X, curve_matrix([(1.0, 1), (-1.0, 1)], 2))
        assert not incidence_check(X, curve_matrix([(1.0, 1), (2.0, 1)], 2))

    @given(float_classes(d=3), st.lists(small_ints, min_size=4, max_size=4))
    def test_invariant_under_row_ops(self, f, m):
        M = ((m[0], m[1]), (m[2], m[3]))
        assume(m[0] * m[3] - m[1] * m[2] != 0)
        W = curve_matrix([(0.5, 1), (-1.0, 1)], 3)
        assert incidence_check(f, W, 1e-9) == incidence_check(row_op(f, M), W, 1e-9)


class TestReducible:
    def test_common_factor(self):
        assert is_reducible(RationalClass((-1, 0, 1), (-1, 1, 0)))

    def test_coprime(self):
        assert not is_reducible(RationalClass((0, 0, 1), (-1, 1, 0)))

    def test_degree_drop(self):
        assert is_reducible(RationalClass((1, 0, 1, 0), (0, 0, 1, 0)))

    def test_float_path(self):
        assert is_reducible(RationalClass((-1.0, 0.0, 1.0), (-1.0, 1.0, 0.0)))
        assert not is_reducible(RationalClass((0.0, 0.0, 1.0), (-1.0, 1.0, 0.0)))

    @given(st.lists(st.integers(-3, 3), min_size=3, max_size=3, unique=True), st.integers(-3, 3))
    def test_shared_root_is_reducible(self, roots, shared):
        p = poly_from_roots([(r, 1) for r in roots[:2]] + [(shared, 1)], exact_scalars=True)
        q = poly_mul(poly_from_roots([(roots[2], 1)], exact_scalars=True), [-shared, 1]) + [0]
        assert is_reducible(RationalClass(tuple(p), tuple(q)))


class TestReality:
    def test_common_scalar(self):
        real, rep = is_real_class(RationalClass((0, 0, 1j), (1j, 0, 0)))
        assert real
        assert classes_equal(rep, RationalClass((0.0, 0.0, 1.0), (1.0, 0.0, 0.0)))
        assert all(isinstance(c, float) for c in rep.p + rep.q)

    def test_non_real(self):
        # z^2 + i z has critical point -i/2, which no real class can have
        assert not is_real_class(RationalClass((0, 1j, 1), (1, 0, 0)))[0]

    def test_real_after_mobius_shift(self):
        # z^2 - i differs from z^2 by a translation of the target, so it is real
        assert is_real_class(RationalClass((-1j, 0, 1), (1, 0, 0)))[0]

    @given(float_classes(), st.floats(0, 6.28))
    def test_real_coefficients_rotated(self, f, phi):
        g = RationalClass(tuple(np.exp(1j * phi) * np.array(f.p)), tuple(np.array(f.q) * np.exp(1j * phi)))
        real, rep = is_real_class(g)
        assert real and classes_equal(rep, f, 1e-7)

    def test_conjugate_distance(self):
        f = RationalClass((0, 1j, 1), (1, 0, 0))
        assert conjugate_distance(f, f.conjugate()) < 1e-12
        assert conjugate_distance(f, f) > 1e-3


class TestEquivalence:
    f = RationalClass((Fraction(1), Fraction(-2), Fraction(3)), (Fraction(0), Fraction(1), Fraction(1)))

    def test_mobius(self):
        assert classes_equal(self.f, row_op(self.f, ((2, 1), (1, -1))))

    def test_different_spans(self):
        assert not classes_equal(RationalClass((0, 0, 1), (1, 0, 0)), RationalClass((0, 1, 1), (1, 0, 0)))

    def test_scaled(self):
        assert classes_equal(self.f, row_op(self.f, ((7, 0), (0, 7))))

    @given(st.lists(small_ints, min_size=4, max_size=4))
    def test_exact_keys_identical(self, m):
        assume(m[0] * m[3] - m[1] * m[2] != 0)
        g = row_op(self.f, ((m[0], m[1]), (m[2], m[3])))
        assert g.exact and classes_equal(self.f, g, tol=0.0)

    @given(float_classes(), st.lists(floats, min_size=4, max_size=4))
    def test_float_keys_stable(self, f, m):
        assume(abs(m[0] * m[3] - m[1] * m[2]) > 0.1)
        g = row_op(f, ((m[0], m[1]), (m[2], m[3])))
        assert key_distance(canonical_key(f), canonical_key(g)) < 1e-8
