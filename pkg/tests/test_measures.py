"""Atomic and IFS transforms, the 4^k spectrum, Gram matrices, frame
bounds, and the completeness diagnostic."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from spectrapairs import (
    AtomicMeasure,
    IFSMeasure,
    InvalidInputError,
    atomic_transform,
    cantor4_measure,
    completeness_defect,
    frame_bounds,
    gram_matrix,
    ifs_transform,
    is_spectral_pair,
    FiniteRationalSet,
    jp_spectrum,
)


def uniform(*points):
    return AtomicMeasure.uniform([Fraction(p) for p in points])


class TestAtomicTransform:
    def test_examples(self):
        mu = uniform(0, "1/2")
        assert atomic_transform(mu, 0) == pytest.approx(1.0)
        assert abs(atomic_transform(mu, 1)) < 1e-15
        assert abs(atomic_transform(uniform(0, "1/3", "2/3"), 1)) < 1e-15

    def test_total_mass(self):
        mu = AtomicMeasure([0, "1/2", 3], [0.2, 0.3, 0.5])
        assert atomic_transform(mu, 0) == pytest.approx(1.0)


class TestIFSMeasure:
    def test_validation(self):
        with pytest.raises(InvalidInputError):
            IFSMeasure(1, (0, 2))
        with pytest.raises(InvalidInputError):
            IFSMeasure(4, (2,))

    def test_cantor4(self):
        mu = cantor4_measure()
        assert mu.scale == 4 and mu.digits == (0, 2)


class TestIFSTransform:
    def test_examples(self):
        mu = cantor4_measure()
        assert ifs_transform(mu, 0, 1e-12).value == 1.0
        v1 = ifs_transform(mu, 1, 1e-12)
        assert v1.value == 0 and v1.depth == 1  # k=1 factor vanishes exactly
        v4 = ifs_transform(mu, 4, 1e-12)
        assert v4.value == 0 and v4.depth == 2

    def test_eps_validation(self):
        with pytest.raises(InvalidInputError):
            ifs_transform(cantor4_measure(), 1, 0.0)

    def test_symbolic_matches_float(self):
        mu = cantor4_measure()
        # Where no factor vanishes, symbolic and plain float evaluation
        # agree to the certified accuracy.
        for t in (Fraction(1, 3), Fraction(7, 5), Fraction(22, 7)):
            a = ifs_transform(mu, t, 1e-12, symbolic=True).value
            b = ifs_transform(mu, t, 1e-12, symbolic=False).value
            assert abs(a - b) <= 1e-11

    def test_error_certification_halving(self):
        mu = cantor4_measure()
        rng = random.Random(99)
        for _ in range(100):
            t = rng.uniform(-100, 100)
            eps = 10 ** rng.uniform(-10, -3)
            coarse = ifs_transform(mu, t, eps, symbolic=False).value
            fine = ifs_transform(mu, t, eps / 2, symbolic=False).value
            assert abs(coarse - fine) <= eps

    def test_general_digit_set_symbolic_zero(self):
        # Three equally spaced digits: the level-1 factor at t = 1 is
        # 1 + zeta_3 + zeta_3^2 = 0 for scale 3, digits {0,1,2}.
        mu = IFSMeasure(3, (0, 1, 2))
        assert ifs_transform(mu, 1, 1e-10).value == 0


class TestJpSpectrum:
    def test_examples(self):
        assert jp_spectrum(0) == (0, 1)
        assert jp_spectrum(1) == (0, 1, 4, 5)
        assert jp_spectrum(2) == (0, 1, 4, 5, 16, 17, 20, 21)

    def test_size_and_bounds(self):
        assert len(jp_spectrum(6)) == 128
        with pytest.raises(InvalidInputError):
            jp_spectrum(21)
        with pytest.raises(InvalidInputError):
            jp_spectrum(-1)


class TestGramMatrix:
    def test_atomic_identity(self):
        G = gram_matrix(uniform(0, "1/2"), [0, 1])
        assert np.allclose(G, np.eye(2))

    def test_jp_level1_identity(self):
        G = gram_matrix(cantor4_measure(), jp_spectrum(1), eps=1e-12)
        assert np.max(np.abs(G - np.eye(4))) <= 1e-10

    def test_all_ones(self):
        G = gram_matrix(uniform(0, "1/2"), [0, 2])
        assert np.allclose(G, np.ones((2, 2)))

    def test_hermitian_unit_diagonal(self):
        G = gram_matrix(uniform(0, "1/3", "5/7"), [0, 1, "1/2"])
        assert np.allclose(G, G.conj().T)
        assert np.allclose(np.diag(G), 1.0)


class TestFrameBounds:
    def test_examples(self):
        mu = uniform(0, "1/2")
        r = frame_bounds(mu, [0, 1])
        assert (r.lower, r.upper) == (pytest.approx(1.0), pytest.approx(1.0))
        r = frame_bounds(mu, [0, 1, 2])
        assert (r.lower, r.upper) == (pytest.approx(1.0), pytest.approx(2.0))
        r = frame_bounds(mu, [0])
        assert (r.lower, r.upper) == (pytest.approx(0.0, abs=1e-12), pytest.approx(1.0))

    def test_spectrum_gives_tight_frame(self):
        mu = uniform(0, "1/3", "2/3")
        lam = FiniteRationalSet([0, 1, 2])
        assert is_spectral_pair(lam, FiniteRationalSet(mu.points))
        r = frame_bounds(mu, lam.elements)
        assert abs(r.lower - 1.0) <= 1e-10 and abs(r.upper - 1.0) <= 1e-10


class TestCompletenessDefect:
    def test_parseval_identity_two_points(self):
        mu = uniform(0, "1/2")
        for k in range(7):
            q = completeness_defect(mu, [0, 1], Fraction(k, 7))
            assert q == pytest.approx(1.0, abs=1e-12)

    def test_empty_lambda(self):
        assert completeness_defect(uniform(0, "1/2"), [], Fraction(1, 3)) == 0.0

    def test_jp_at_zero(self):
        mu = cantor4_measure()
        for level in range(5):
            assert completeness_defect(mu, jp_spectrum(level), 0) == 1.0

    def test_monotone_in_lambda(self):
        mu = cantor4_measure()
        t = Fraction(3, 7)
        values = [
            completeness_defect(mu, jp_spectrum(level), t, eps=1e-10)
            for level in range(6)
        ]
        for a, b in zip(values, values[1:]):
            assert b >= a - 1e-12

    def test_bessel_bound(self):
        mu = cantor4_measure()
        for k in range(5):
            q = completeness_defect(mu, jp_spectrum(4), Fraction(k, 5), eps=1e-10)
            assert q <= 1 + 1e-8
