import cmath
import math

import numpy as np
import pytest

from polarpoly.errors import DegreeZeroError, EmptyRootSetError
from polarpoly.polar import s_poly
from polarpoly.polynomial import (
    Polynomial,
    make_monic,
    max_coeff_diff,
    poly_from_roots,
    sup_norm,
)
from polarpoly.roots import RootSet, find_roots, max_modulus, vieta_residuals

from oracles import closed_form_roots, sort_roots


def sample_separated_roots(rng, count, min_dist=0.1, radius=1.5):
    while True:
        roots = [
            radius * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
            for _ in range(count)
        ]
        if all(
            abs(a - b) >= min_dist
            for i, a in enumerate(roots)
            for b in roots[:i]
        ):
            return roots


class TestBasics:
    def test_quadratic_example(self):
        rs = find_roots(Polynomial([3, 3, 1]))
        expected = sort_roots(closed_form_roots([3, 3, 1]))
        assert rs.converged
        for got, want in zip(rs.roots, expected):
            assert abs(got - want) <= 1e-12
        assert all(abs(abs(r) - math.sqrt(3)) <= 1e-12 for r in rs.roots)

    def test_linear(self):
        rs = find_roots(Polynomial([2, 1]))
        assert rs.roots == (-2 + 0j,)
        assert rs.converged

    def test_monomial_cluster(self):
        for n in (2, 5, 9, 15):
            rs = find_roots(Polynomial([0] * n + [1]))
            assert len(rs) == n
            assert all(abs(r) <= 1e-6 for r in rs.roots)
            assert rs.max_residual <= 1e-12

    def test_constant_rejected(self):
        with pytest.raises(DegreeZeroError):
            find_roots(Polynomial([5]))

    def test_length_matches_degree(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            deg = int(rng.integers(1, 12))
            p = Polynomial(list(rng.normal(size=deg)) + [1.0])
            assert len(find_roots(p)) == deg


class TestOrdering:
    def test_modulus_then_argument(self):
        # z^2 + 1 has the tie |i| = |-i|; the argument in (-pi, pi]
        # breaks it in favour of -i.
        rs = find_roots(Polynomial([1, 0, 1]))
        assert abs(rs.roots[0] - (-1j)) <= 1e-12
        assert abs(rs.roots[1] - 1j) <= 1e-12

    def test_negative_real_axis_sorts_last(self):
        # Argument exactly pi belongs to the top of the range.
        rs = find_roots(Polynomial([-1, 0, 1]))
        assert abs(rs.roots[0] - 1) <= 1e-12
        assert abs(rs.roots[1] - (-1)) <= 1e-12

    def test_nondecreasing_modulus(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            p = Polynomial(list(rng.normal(size=9)) + [1.0])
            rs = find_roots(p)
            mods = [abs(r) for r in rs.roots]
            assert mods == sorted(mods)


class TestAgainstClosedForms:
    def test_random_quadratics(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            coeffs = rng.normal(size=3) + 1j * rng.normal(size=3)
            while abs(coeffs[2]) < 0.3:
                coeffs = rng.normal(size=3) + 1j * rng.normal(size=3)
            p = Polynomial(coeffs)
            got = find_roots(p).roots
            want = sort_roots(closed_form_roots(p.coeffs))
            for g, w in zip(got, want):
                assert abs(g - w) <= 1e-10

    def test_random_linears(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            coeffs = rng.normal(size=2) + 1j * rng.normal(size=2)
            while abs(coeffs[1]) < 0.3:
                coeffs = rng.normal(size=2) + 1j * rng.normal(size=2)
            p = Polynomial(coeffs)
            got = find_roots(p).roots[0]
            assert abs(got - closed_form_roots(p.coeffs)[0]) <= 1e-12


class TestReconstruction:
    def test_separated_roots_round_trip(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            deg = int(rng.integers(2, 16))
            roots = sample_separated_roots(rng, deg)
            p = poly_from_roots(roots)
            rs = find_roots(p)
            assert rs.converged
            rebuilt = poly_from_roots(rs.roots)
            assert max_coeff_diff(rebuilt, make_monic(p)) <= 1e-8 * sup_norm(p)

    def test_vieta_identities(self):
        rng = np.random.default_rng(13)
        for _ in range(30):
            deg = int(rng.integers(1, 16))
            p = Polynomial(list(rng.normal(size=deg)) + [1.0])
            rs = find_roots(p)
            sum_err, prod_err = vieta_residuals(p, rs)
            assert sum_err <= 1e-8
            assert prod_err <= 1e-8


class TestDeterminismAndFlags:
    def test_bit_for_bit_determinism(self):
        p = s_poly(12, 3)
        a = find_roots(p)
        b = find_roots(p)
        assert a.roots == b.roots
        assert a.max_residual == b.max_residual
        assert a.converged == b.converged

    def test_not_converged_is_reported(self):
        rs = find_roots(s_poly(8, 2), max_iter=1)
        assert not rs.converged

    def test_residual_is_scaled(self):
        rs = find_roots(Polynomial([3, 3, 1]))
        assert 0.0 <= rs.max_residual <= 1e-14


class TestMaxModulus:
    def test_s_poly_2_1(self):
        assert abs(max_modulus(find_roots(s_poly(2, 1))) - math.sqrt(3)) <= 1e-12

    def test_monomial(self):
        assert max_modulus(find_roots(Polynomial([0, 0, 0, 1]))) <= 1e-6

    def test_s_poly_2_2(self):
        # w^2 + 4w + 6 has roots -2 +/- i sqrt(2), modulus sqrt(6).
        assert abs(max_modulus(find_roots(s_poly(2, 2))) - math.sqrt(6)) <= 1e-12

    def test_empty_rejected(self):
        with pytest.raises(EmptyRootSetError):
            max_modulus(RootSet(roots=(), max_residual=0.0, converged=True))
