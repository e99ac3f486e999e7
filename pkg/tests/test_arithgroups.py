"""Exact matrix identities: U(1,1; Z[i]), Cayley, embeddings, reduction."""

import random
from fractions import Fraction

import pytest

from taf.arithgroups import (
    G_GEN_C4,
    G_GEN_S,
    G_GEN_TRANSLATION,
    H,
    IOTA_IMAGE_C4,
    IOTA_IMAGE_S,
    IOTA_IMAGE_TRANSLATION,
    J,
    Mat,
    T_MATRIX,
    U_GEN_C4,
    U_GEN_PARABOLIC,
    U_GEN_ROTATION,
    cayley,
    cayley_inverse,
    embedding_suite,
    eq2_check,
    eq6_check,
    equivariance_check,
    generator_correspondence_check,
    in_fundamental_domain,
    in_g,
    in_gamma_theta,
    in_u11,
    iota,
    iota_image_check,
    is_symplectic,
    j_identities,
    omega_ball,
    omega_halfplane,
    r_matrix,
    random_ball_point,
    random_group_element,
    random_halfplane_point,
    reduce_to_fundamental_domain,
    rho,
    sigma,
)
from taf.exact import GaussianRational as GR
from taf.exact import I, InputError


class TestMat:
    def test_inverse(self):
        m = Mat([[1, 2], [3, 5]])
        assert m * m.inv() == Mat.identity(2)

    def test_det(self):
        assert Mat([[1, 2], [3, 5]]).det() == GR(-1)
        assert Mat([[I, 0], [0, I]]).det() == GR(-1)

    def test_singular_rejected(self):
        with pytest.raises(InputError):
            Mat([[1, 2], [2, 4]]).inv()

    def test_conj_transpose(self):
        m = Mat([[I, 1], [0, -I]])
        assert m.conj_transpose() == Mat([[-I, 0], [1, I]])


class TestMembership:
    def test_generators_in_u11(self):
        for g in (U_GEN_PARABOLIC, U_GEN_ROTATION, U_GEN_C4):
            assert in_u11(g)

    def test_nonmember(self):
        assert not in_u11(Mat([[1, 1], [0, 1]]))  # does not preserve H
        assert not in_u11(Mat([[GR(Fraction(1, 2)), 0], [0, 2]]))

    def test_gamma_theta(self):
        assert in_gamma_theta(G_GEN_TRANSLATION)
        assert in_gamma_theta(G_GEN_S)
        assert not in_gamma_theta(Mat([[1, 1], [0, 1]]))  # ab odd
        assert not in_gamma_theta(G_GEN_C4)  # not integral

    def test_in_g_via_inverse_cayley(self):
        for g in (G_GEN_TRANSLATION, G_GEN_S, G_GEN_C4):
            assert in_g(g)


class TestCayley:
    def test_generator_correspondence(self):
        assert cayley(U_GEN_PARABOLIC) == G_GEN_TRANSLATION
        assert cayley(U_GEN_ROTATION) == G_GEN_S
        assert cayley(U_GEN_C4) == G_GEN_C4
        assert generator_correspondence_check()

    def test_cayley_roundtrip(self):
        rng = random.Random(3)
        for _ in range(5):
            gamma = random_group_element(rng)
            assert cayley(cayley_inverse(gamma)) == gamma

    def test_cayley_is_homomorphism(self):
        lhs = cayley(U_GEN_PARABOLIC * U_GEN_ROTATION)
        rhs = cayley(U_GEN_PARABOLIC) * cayley(U_GEN_ROTATION)
        assert lhs == rhs


class TestEmbeddings:
    def test_rho_symplectic_integral(self):
        for g in (U_GEN_PARABOLIC, U_GEN_ROTATION, U_GEN_C4):
            m = rho(g)
            assert m.is_rational_integral()
            assert is_symplectic(m)

    def test_rho_is_homomorphism(self):
        g1, g2 = U_GEN_PARABOLIC, U_GEN_ROTATION
        assert rho(g1 * g2) == rho(g1) * rho(g2)

    def test_eq2(self):
        rng = random.Random(5)
        for _ in range(10):
            g = cayley_inverse(random_group_element(rng))
            assert eq2_check(g)

    def test_iota_generator_images(self):
        assert iota(G_GEN_TRANSLATION) == IOTA_IMAGE_TRANSLATION
        assert iota(G_GEN_S) == IOTA_IMAGE_S
        assert iota(G_GEN_C4) == IOTA_IMAGE_C4
        assert iota_image_check()

    def test_iota_is_homomorphism_with_integral_image(self):
        rng = random.Random(11)
        for _ in range(5):
            a = random_group_element(rng, 4)
            b = random_group_element(rng, 4)
            assert iota(a * b) == iota(a) * iota(b)
            m = iota(a)
            assert m.is_rational_integral() and is_symplectic(m)

    def test_eq6_and_t(self):
        assert eq6_check()
        assert T_MATRIX.is_rational_integral()
        assert is_symplectic(T_MATRIX)

    def test_sigma_is_involution(self):
        assert sigma(sigma(J)) == J


class TestPeriodMatrices:
    def test_omega_ball_symmetric(self):
        z = GR(Fraction(1, 3), Fraction(1, 4))
        o = omega_ball(z)
        assert o == o.transpose()

    def test_ball_needs_interior_point(self):
        with pytest.raises(InputError):
            omega_ball(GR(1, 0))

    def test_halfplane_needs_upper(self):
        with pytest.raises(InputError):
            omega_halfplane(GR(0, -1))

    def test_r_matrix_properties(self):
        z = GR(Fraction(1, 5), Fraction(2, 5))
        r = r_matrix(z)
        assert r.det() == GR(-1)
        assert r.apply([z, GR(1)]) == [-z, GR(-1)]

    def test_j_identities_random(self):
        rng = random.Random(2)
        for _ in range(10):
            assert j_identities(random_ball_point(rng))

    def test_equivariance_random(self):
        rng = random.Random(9)
        for _ in range(10):
            gamma = random_group_element(rng)
            tau = random_halfplane_point(rng)
            w = GR(Fraction(1, 2), Fraction(1, 3))
            assert equivariance_check(gamma, tau, w)

    def test_full_suite(self):
        assert all(embedding_suite().values())


class TestReduction:
    def test_random_points(self):
        rng = random.Random(7)
        for _ in range(100):
            tau = complex(rng.uniform(-40, 40), rng.uniform(0.05, 20))
            r = reduce_to_fundamental_domain(tau)
            assert in_fundamental_domain(r.tau_reduced, eps=1e-9)
            assert r.certificate_ok(tau)

    def test_fixed_point_is_identity(self):
        r = reduce_to_fundamental_domain(3j)
        assert r.word == ()
        assert r.matrix == Mat.identity(2)

    def test_rejects_lower_half_plane(self):
        with pytest.raises(InputError):
            reduce_to_fundamental_domain(complex(0, -1))
