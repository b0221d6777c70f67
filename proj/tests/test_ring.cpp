#include <gtest/gtest.h>

#include <random>

#include "twalg/ring.hpp"

using namespace twalg;

namespace {

constexpr double kTol = 1e-9;

struct Gen {
    std::mt19937 rng{20240611};
    std::normal_distribution<double> nd;
    std::uniform_int_distribution<int> ex{-3, 3};

    cplx c(bool real) { return real ? cplx(nd(rng), 0.0) : cplx(nd(rng), nd(rng)); }

    RingValue value(const DescPtr& d) {
        switch (d->kind) {
            case RingKind::ComplexScalar: return complex_value(c(false));
            case RingKind::RealScalar: return real_value(nd(rng));
            case RingKind::Laurent: {
                LaurentTerms t;
                for (int i = 0; i < 3; ++i) {
                    Exponent e(d->m);
                    for (auto& x : e) x = ex(rng);
                    t[e] += c(d->is_real());
                }
                return laurent_value(d, t);
            }
            case RingKind::Matrix: {
                Eigen::MatrixXcd m(d->k, d->k);
                for (int i = 0; i < d->k; ++i)
                    for (int j = 0; j < d->k; ++j) m(i, j) = c(d->is_real());
                return matrix_value(d, m);
            }
            case RingKind::Quaternion: return quaternion_value(nd(rng), nd(rng), nd(rng), nd(rng));
            case RingKind::Product: {
                std::vector<RingValue> parts;
                for (const auto& p : d->parts) parts.push_back(value(p));
                return product_value(d, parts);
            }
        }
        return {};
    }
};

std::vector<DescPtr> all_kinds() {
    return {desc::complex_scalar(),
            desc::real_scalar(),
            desc::laurent(1),
            desc::laurent(2),
            desc::laurent(1, Field::Real),
            desc::matrix(2),
            desc::matrix(3, Field::Real),
            desc::quaternion(),
            desc::product({desc::complex_scalar(), desc::matrix(2)})};
}

// Quaternion product through the 2x2 complex representation.
Eigen::Matrix2cd quat_rep(const Quat& q) {
    Eigen::Matrix2cd m;
    m << cplx(q[0], q[1]), cplx(q[2], q[3]), cplx(-q[2], q[3]), cplx(q[0], -q[1]);
    return m;
}

}  // namespace

TEST(RingAxioms, AssociativeDistributiveUnital) {
    Gen g;
    for (const auto& d : all_kinds())
        for (int trial = 0; trial < 20; ++trial) {
            const RingValue a = g.value(d), b = g.value(d), c = g.value(d);
            EXPECT_LE(ring_distance((a * b) * c, a * (b * c)), kTol * (1 + ring_size(a) * ring_size(b) * ring_size(c)))
                << d->name();
            EXPECT_LE(ring_distance(a * (b + c), a * b + a * c), 1e-9 * 100) << d->name();
            EXPECT_LE(ring_distance(a * ring_unit(d), a), kTol) << d->name();
            EXPECT_LE(ring_distance(ring_unit(d) * a, a), kTol) << d->name();
            EXPECT_TRUE(ring_is_zero(a - a, kTol));
        }
}

TEST(RingStar, InvolutiveAntiMultiplicativeConjugateLinear) {
    Gen g;
    for (const auto& d : all_kinds())
        for (int trial = 0; trial < 20; ++trial) {
            const RingValue a = g.value(d), b = g.value(d);
            EXPECT_LE(ring_distance(ring_star(ring_star(a)), a), kTol);
            EXPECT_LE(ring_distance(ring_star(a * b), ring_star(b) * ring_star(a)), 1e-8) << d->name();
            const cplx s = d->is_real() ? cplx(1.7, 0.0) : cplx(0.3, -1.2);
            EXPECT_LE(ring_distance(ring_star(ring_scale(a, s)), ring_scale(ring_star(a), std::conj(s))), kTol);
            EXPECT_LE(ring_distance(ring_star(a + b), ring_star(a) + ring_star(b)), kTol);
        }
}

TEST(RingNorm, SubmultiplicativeAndCStar) {
    Gen g;
    for (const auto& d : all_kinds())
        for (int trial = 0; trial < 10; ++trial) {
            const RingValue a = g.value(d), b = g.value(d);
            const double na = ring_norm(a), nb = ring_norm(b);
            const double cstar = ring_norm(ring_star(a) * a);
            if (d->kind == RingKind::Laurent) {
                // Grid sampling: both sides come from the same grid, so |a|^2 sampled equals |a^*a| sampled.
                EXPECT_NEAR(cstar, na * na, 0.02 * na * na) << d->name();
                EXPECT_LE(ring_norm(a * b), na * nb * 1.02 + 1e-9) << d->name();
            } else {
                EXPECT_NEAR(cstar, na * na, 1e-9 * (1 + na * na)) << d->name();
                EXPECT_LE(ring_norm(a * b), na * nb * (1 + 1e-12) + 1e-12) << d->name();
            }
        }
}

TEST(RingNorm, UnitariesHaveNormOne) {
    const auto c = complex_value(std::polar(1.0, 0.7));
    EXPECT_TRUE(is_unitary(c, kTol));
    EXPECT_NEAR(ring_norm(c), 1.0, kTol);
    const auto z = laurent_monomial(desc::laurent(2), {3, -1}, cplx(0, 1));
    EXPECT_TRUE(is_unitary(z, kTol));
    EXPECT_NEAR(ring_norm(z), 1.0, kTol);
    const double h = 0.5;
    const auto q = quaternion_value(h, h, -h, h);
    EXPECT_TRUE(is_unitary(q, kTol));
    EXPECT_NEAR(ring_norm(q), 1.0, kTol);
    Eigen::MatrixXcd rot(2, 2);
    rot << std::cos(0.4), -std::sin(0.4), std::sin(0.4), std::cos(0.4);
    const auto r = matrix_value(desc::matrix(2, Field::Real), rot);
    EXPECT_TRUE(is_unitary(r, kTol));
    EXPECT_NEAR(ring_norm(r), 1.0, kTol);
    EXPECT_FALSE(is_unitary(complex_value(2.0), kTol));
    // 1 + z is not unitary although it has unit coefficients.
    const auto d1 = desc::laurent(1);
    EXPECT_FALSE(is_unitary(laurent_monomial(d1, {0}) + laurent_monomial(d1, {1}), kTol));
}

TEST(Quaternion, MatchesComplexRepresentation) {
    Gen g;
    for (int trial = 0; trial < 50; ++trial) {
        const RingValue a = g.value(desc::quaternion()), b = g.value(desc::quaternion());
        const Eigen::Matrix2cd expect = quat_rep(a.quat()) * quat_rep(b.quat());
        EXPECT_LE((quat_rep((a * b).quat()) - expect).norm(), 1e-12);
    }
    const auto i = quaternion_value(0, 1, 0, 0), j = quaternion_value(0, 0, 1, 0), k = quaternion_value(0, 0, 0, 1);
    EXPECT_LE(ring_distance(i * j, k), 0.0);
    EXPECT_LE(ring_distance(j * i, -k), 0.0);
    EXPECT_LE(ring_distance(i * i, ring_central(desc::quaternion(), -1.0)), 0.0);
}

TEST(Laurent, ProductMatchesPointEvaluation) {
    Gen g;
    const auto d = desc::laurent(2);
    std::uniform_real_distribution<double> ang(0, 6.283185307179586);
    for (int trial = 0; trial < 30; ++trial) {
        const RingValue a = g.value(d), b = g.value(d);
        const std::vector<cplx> pt = {std::polar(1.0, ang(g.rng)), std::polar(1.0, ang(g.rng))};
        EXPECT_NEAR(std::abs(evaluate_laurent(a * b, pt) - evaluate_laurent(a, pt) * evaluate_laurent(b, pt)), 0.0,
                    1e-9);
        EXPECT_NEAR(std::abs(evaluate_laurent(ring_star(a), pt) - std::conj(evaluate_laurent(a, pt))), 0.0, 1e-9);
    }
}

TEST(Laurent, ExactCancellation) {
    const auto d = desc::laurent(1);
    const auto z = laurent_monomial(d, {1});
    EXPECT_TRUE((z * ring_star(z) - ring_unit(d)).terms().empty());
    EXPECT_EQ(format_value(z * z), "(1)z^(2)");
    EXPECT_EQ(format_value(ring_zero(d)), "0");
}

TEST(RealKinds, RejectComplexScalars) {
    EXPECT_THROW(ring_central(desc::real_scalar(), cplx(0, 1)), DomainError);
    EXPECT_THROW(ring_scale(real_value(1.0), cplx(0, 1)), DomainError);
    EXPECT_THROW(ring_add(real_value(1.0), complex_value(1.0)), DomainError);
}

TEST(Descriptors, Dimensions) {
    EXPECT_EQ(real_dim(desc::complex_scalar()), 2);
    EXPECT_EQ(real_dim(desc::matrix(2)), 8);
    EXPECT_EQ(real_dim(desc::matrix(3, Field::Real)), 9);
    EXPECT_EQ(real_dim(desc::quaternion()), 4);
    EXPECT_EQ(real_dim(desc::product({desc::quaternion(), desc::real_scalar()})), 5);
    EXPECT_THROW(real_dim(desc::laurent(1)), DomainError);
    EXPECT_EQ(static_cast<int>(real_basis(desc::laurent(1), 2).size()), 10);
    EXPECT_TRUE(same_ring(desc::matrix(2), desc::matrix(2)));
    EXPECT_FALSE(same_ring(desc::matrix(2), desc::matrix(2, Field::Real)));
}

TEST(Format, Scalars) {
    EXPECT_EQ(format_scalar(1.0), "1");
    EXPECT_EQ(format_scalar(cplx(0, 1)), "i");
    EXPECT_EQ(format_scalar(cplx(0, -1)), "-i");
    EXPECT_EQ(format_scalar(cplx(3, -2)), "3-2i");
    EXPECT_EQ(format_scalar(cplx(-0.0, 0.0)), "0");
    EXPECT_EQ(format_value(quaternion_value(1, 0, -1, 0.5)), "(1,0,-1,0.5)");
}

TEST(Roots, TorusGridShape) {
    const auto pts = torus_grid(2, 8);
    EXPECT_EQ(pts.size(), 64u);
    for (const auto& p : pts)
        for (const auto& z : p) EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
}
