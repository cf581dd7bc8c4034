from math import comb

import pytest
from hypothesis import given, strategies as st

from realschubert.combinatorics import (ContentVector, Tableau, as_content, catalan_count,
                                        enumerate_ssyt, hook_count, kostka, kostka_closed_form,
                                        valid_contents)
from realschubert.errors import ConstraintViolation

from conftest import brute_force_ssyt


@st.composite
def contents(draw, max_d=6):
    d = draw(st.integers(2, max_d))
    total = 2 * d - 2
    entries = []
    while total:
        hi = min(d - 1, total)
        a = draw(st.integers(1, hi))
        entries.append(a)
        total -= a
    if len(entries) < 2:
        entries = [d - 1, d - 1]
    return tuple(entries)


def rows(tabs):
    return [(t.row1, t.row2) for t in tabs]


class TestContentVector:
    def test_derived_fields(self):
        cv = ContentVector((2, 1, 1, 1, 1))
        assert cv.d == 4 and cv.q == 5 and list(cv) == [2, 1, 1, 1, 1]

    def test_parse(self):
        assert ContentVector.parse("1, 1,2,2").entries == (1, 1, 2, 2)

    @pytest.mark.parametrize("entries, clause", [
        ((1, 1, 1), "2d-2"),
        ((3, 1), "a_j <= d-1"),
        ((2,), "q >= 2"),
        ((0, 2, 2), "a_j >= 1"),
    ])
    def test_rejects_invalid(self, entries, clause):
        with pytest.raises(ConstraintViolation) as exc:
            ContentVector(entries)
        assert isinstance(exc.value, ValueError)
        assert clause in str(exc.value)

    def test_enumerate_rejects_invalid(self):
        with pytest.raises(ConstraintViolation):
            enumerate_ssyt((2, 1, 1, 1))


class TestEnumeration:
    def test_d2(self):
        assert rows(enumerate_ssyt((1, 1))) == [((1,), (2,))]

    def test_d3_ones(self):
        assert rows(enumerate_ssyt((1, 1, 1, 1))) == [((1, 2), (3, 4)), ((1, 3), (2, 4))]

    def test_222(self):
        assert rows(enumerate_ssyt((2, 2, 2))) == [((1, 1, 2), (2, 3, 3))]

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_matches_brute_force(self, d):
        for cv in valid_contents(d):
            assert rows(enumerate_ssyt(cv)) == brute_force_ssyt(cv.entries)

    @given(contents())
    def test_each_tableau_valid(self, entries):
        cv = as_content(entries)
        tabs = enumerate_ssyt(cv)
        assert all(t.is_valid(cv) for t in tabs)
        assert len(set(tabs)) == len(tabs) == kostka(cv)
        assert rows(tabs) == sorted(rows(tabs))

    def test_tableau_is_valid_detects_column_violation(self):
        assert not Tableau((1, 2), (1, 3)).is_valid()
        assert not Tableau((2, 1), (3, 4)).is_valid()
        assert not Tableau((1, 2), (3, 4)).is_valid(ContentVector((2, 1, 1)))

    def test_str(self):
        assert str(Tableau((1, 2), (3, 4))) == "[1 2 | 3 4]"


class TestKostka:
    def test_examples(self):
        assert kostka((1, 1, 1, 1)) == 2
        assert kostka((2, 1, 1, 1, 1)) == 3
        assert kostka((1,) * 6) == 5
        assert kostka((3, 1, 1, 1, 1, 1)) == 4

    @pytest.mark.parametrize("d", range(2, 9))
    def test_two_equal_parts(self, d):
        assert kostka((d - 1, d - 1)) == 1

    @pytest.mark.parametrize("d, expected", [(2, 1), (3, 2), (4, 5), (5, 14), (6, 42), (7, 132)])
    def test_catalan(self, d, expected):
        assert kostka((1,) * (2 * d - 2)) == catalan_count(d) == expected

    def test_hook_formula_independent(self):
        # the hook count written with the binomial directly, without the library helper
        for d in range(2, 8):
            for a1 in range(1, d):
                expected = (a1 + 1) * comb(2 * d - 2 - a1, d - 1) // d
                assert kostka((a1,) + (1,) * (2 * d - 2 - a1)) == hook_count(a1, d) == expected

    @given(contents(), st.randoms())
    def test_permutation_invariance(self, entries, rnd):
        perm = list(entries)
        rnd.shuffle(perm)
        assert kostka(tuple(perm)) == kostka(entries)

    @given(contents(max_d=5))
    def test_count_matches_brute_force(self, entries):
        assert kostka(entries) == len(brute_force_ssyt(entries))

    def test_closed_form(self):
        assert kostka_closed_form((1, 1, 1, 1, 1, 1)) == 5
        assert kostka_closed_form((1, 1, 1, 1, 1, 3)) == 4
        assert kostka_closed_form((4, 4)) == 1
        assert kostka_closed_form((2, 2, 2)) is None

    def test_valid_contents_are_valid(self):
        for d in range(2, 6):
            seen = list(valid_contents(d))
            assert len(seen) == len(set(seen))
            assert all(cv.d == d for cv in seen)
