import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from canonstrip.exceptions import ConvergenceError, InvalidInput, ZeroPolynomialError
from canonstrip.ratpoly import RationalPolynomial
from canonstrip.rootloc import (
    RootReport,
    approx_roots,
    classify_strip,
    hurwitz_minors,
    hurwitz_stable,
    line_split,
    strip_hurwitz_conditions,
    verdict_lines,
)

from ..oracles import random_constellation

HALF = Fraction(1, 2)


def poly(*coefficients):
    return RationalPolynomial(Fraction(value) for value in coefficients)


def counts(report):
    return report.left_count, report.on_count, report.right_count


class TestLineSplit:
    def test_real_pair(self):
        assert counts(line_split(poly(2, 9, 9), -HALF)) == (1, 0, 1)

    def test_pair_on_line(self):
        assert counts(line_split(poly(HALF, 1, 1), -HALF)) == (0, 2, 0)

    def test_root_at_origin(self):
        assert counts(line_split(poly(0, 9), 0)) == (0, 1, 0)

    def test_constant(self):
        report = line_split(poly(5), 3)
        assert counts(report) == (0, 0, 0)
        assert report.line == 3

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomialError):
            line_split(RationalPolynomial(), 0)

    def test_imaginary_axis_roots(self):
        p = poly(1, 0, 1) ** 2 * poly(-1, 1) * poly(0, 1)
        assert counts(line_split(p, 0)) == (0, 5, 1)

    def test_mirror_pairs_off_the_line(self):
        # Roots 1, -1 and 2 +- i, -2 +- i are symmetric about the line.
        p = poly(-1, 0, 1) * poly(5, -4, 1) * poly(5, 4, 1)
        assert counts(line_split(p, 0)) == (3, 0, 3)
        assert counts(line_split(p, Fraction(3, 2))) == (4, 0, 2)

    def test_unbalanced_mirror_multiplicities(self):
        p = poly(-1, 1) ** 3 * poly(1, 1)
        assert counts(line_split(p, 0)) == (1, 0, 3)

    def test_repeated_roots_on_line(self):
        p = poly(HALF, 1) ** 3 * poly(HALF, 1, 1) ** 2
        assert counts(line_split(p, -HALF)) == (0, 7, 0)
        assert counts(line_split(p, 0)) == (7, 0, 0)
        assert counts(line_split(p, -1)) == (0, 0, 7)

    def test_sign_of_leading_coefficient(self):
        p = poly(2, 9, 9)
        assert line_split(-p, Fraction(-1, 3)) == line_split(p, Fraction(-1, 3))
        assert counts(line_split(p, Fraction(-1, 3))) == (1, 1, 0)

    def test_report_degree_and_dict(self):
        report = line_split(poly(2, 9, 9), -HALF)
        assert report.degree == 2
        assert report.to_dict() == {"line": "-1/2", "left": 1, "on": 0, "right": 1}

    @given(
        st.lists(
            st.fractions(min_value=-3, max_value=3, max_denominator=4), max_size=7
        ),
        st.fractions(min_value=-2, max_value=2, max_denominator=6),
    )
    @settings(max_examples=75, deadline=None)
    def test_counts_sum_to_degree(self, coefficients, line):
        p = RationalPolynomial(coefficients + [1])
        assert line_split(p, line).degree == p.degree

    @given(
        st.fractions(min_value=-2, max_value=2, max_denominator=4),
        st.fractions(min_value=-2, max_value=2, max_denominator=4),
    )
    @settings(max_examples=50, deadline=None)
    def test_translation(self, offset, line):
        p = poly(2, 9, 9) * poly(HALF, 1, 1) * poly(-1, 1)
        assert counts(line_split(p.shift(offset), line)) == counts(
            line_split(p, line + offset)
        )

    def test_random_constellations(self):
        rng = random.Random(20)
        lines = [Fraction(-1), -HALF, Fraction(0), Fraction(1, 3)]
        for _ in range(40):
            constellation = random_constellation(rng, lines, max_degree=6)
            p = constellation.polynomial()
            for line in lines:
                assert counts(line_split(p, line)) == constellation.expected(line)


class TestHurwitz:
    def test_hurwitz_stable(self):
        assert hurwitz_stable(poly(2, 9, 9))
        assert not hurwitz_stable(poly(1, 0, 1))
        assert not hurwitz_stable(poly(Fraction(-1, 4), 1))
        assert not hurwitz_stable(poly(0, 1))

    def test_hurwitz_minors(self):
        # For a2 z**2 + a1 z + a0 the minors are a1 and a1 * a0.
        assert hurwitz_minors(poly(2, 9, 9)) == [9, 18]
        assert hurwitz_minors(poly(-2, -9, -9)) == [9, 18]
        assert hurwitz_minors(poly(1, 1, 1, 1)) == [1, 0, 0]

    def test_hurwitz_minors__zero(self):
        with pytest.raises(ZeroPolynomialError):
            hurwitz_minors(RationalPolynomial())

    def test_minors_agree_with_exact_test(self):
        rng = random.Random(3)
        for _ in range(30):
            roots = [
                Fraction(rng.randint(-9, 3), rng.randint(1, 4))
                for _ in range(rng.randint(1, 5))
            ]
            p = RationalPolynomial.from_roots(roots) * poly(
                rng.randint(1, 9), rng.randint(-2, 4), 1
            )
            positive = all(minor > 0 for minor in hurwitz_minors(p))
            assert positive == hurwitz_stable(p)

    def test_strip_hurwitz_conditions(self):
        minors, mirrored = strip_hurwitz_conditions(poly(2, 9, 9))
        assert all(value > 0 for value in minors + mirrored)
        minors, mirrored = strip_hurwitz_conditions(poly(3, 4, 1))
        assert all(value > 0 for value in minors)
        assert not all(value > 0 for value in mirrored)


class TestClassifyStrip:
    def test_verdict_lines(self):
        assert verdict_lines(2) == (
            Fraction(-1),
            Fraction(0),
            Fraction(-2, 3),
            Fraction(-1, 3),
            -HALF,
        )
        assert verdict_lines(1) == (Fraction(-1), Fraction(0), -HALF)

    def test_projective_plane(self):
        verdict = classify_strip(poly(2, 9, 9), 2)
        assert (verdict.cs, verdict.ncs, verdict.cl) == (True, True, False)
        assert verdict.report(Fraction(-2, 3)) == RootReport(Fraction(-2, 3), 0, 1, 1)
        assert verdict.degree == 2
        assert verdict.dim == 2

    def test_canonical_line(self):
        verdict = classify_strip(poly(HALF, 1, 1), 2)
        assert (verdict.cs, verdict.ncs, verdict.cl) == (True, True, True)

    def test_right_half_plane(self):
        verdict = classify_strip(poly(Fraction(-1, 4), 1), 1)
        assert (verdict.cs, verdict.ncs, verdict.cl) == (False, False, False)

    def test_strip_boundary_is_strict(self):
        verdict = classify_strip(poly(0, 1) * poly(1, 1), 1)
        assert not verdict.cs
        assert verdict.report(0).on_count == 1

    def test_narrowed_strip_is_closed(self):
        p = RationalPolynomial.from_roots([Fraction(-3, 4), Fraction(-1, 4)])
        assert classify_strip(p, 3).ncs
        assert not classify_strip(p, 2).ncs

    def test_flags_imply_each_other(self):
        rng = random.Random(11)
        lines = [Fraction(-1), -HALF, Fraction(0), Fraction(-1, 3)]
        for _ in range(25):
            p = random_constellation(rng, lines, max_degree=5).polynomial()
            for dim in (1, 2, 3):
                verdict = classify_strip(p, dim, approximate=False)
                assert not verdict.cl or verdict.ncs
                assert not verdict.ncs or verdict.cs

    def test_scale_invariance(self):
        p = poly(2, 9, 9) * poly(1, 1, 1)
        first = classify_strip(p, 3, approximate=False)
        second = classify_strip(p.scale(Fraction(-7, 3)), 3, approximate=False)
        assert (first.cs, first.ncs, first.cl) == (second.cs, second.ncs, second.cl)

    def test_approximate_flag(self):
        assert classify_strip(poly(2, 9, 9), 2, approximate=False).approx_roots == []
        assert len(classify_strip(poly(2, 9, 9), 2).approx_roots) == 2

    def test_invalid(self):
        with pytest.raises(ZeroPolynomialError):
            classify_strip(RationalPolynomial(), 1)
        with pytest.raises(InvalidInput):
            classify_strip(poly(1, 1), 0)


class TestApproxRoots:
    def test_complex_pair(self):
        roots = approx_roots(poly(HALF, 1, 1))
        assert [root.value for root in roots] == [
            pytest.approx(complex(-0.5, -0.5)),
            pytest.approx(complex(-0.5, 0.5)),
        ]
        assert all(root.residual <= 1e-12 for root in roots)

    def test_real_roots(self):
        roots = approx_roots(poly(2, 9, 9))
        assert [root.value.real for root in roots] == [
            pytest.approx(-2 / 3),
            pytest.approx(-1 / 3),
        ]

    def test_ehrhart_quadratic(self):
        roots = approx_roots(poly(1, 2, 2))
        assert sorted(root.value.imag for root in roots) == [
            pytest.approx(-0.5),
            pytest.approx(0.5),
        ]

    def test_multiplicity(self):
        roots = approx_roots(poly(HALF, 1) ** 3 * poly(2, 1))
        assert len(roots) == 4
        assert [root.multiplicity for root in roots] == [1, 3, 3, 3]

    def test_convergence_error(self):
        with pytest.raises(ConvergenceError) as excinfo:
            approx_roots(RationalPolynomial.from_roots(range(1, 12)), iteration_cap=1)
        assert excinfo.value.cap == 1
        assert "approx_iteration_cap" in str(excinfo.value)

    def test_invalid(self):
        with pytest.raises(ZeroPolynomialError):
            approx_roots(RationalPolynomial())
        with pytest.raises(InvalidInput):
            approx_roots(poly(1, 1), tolerance=0)
