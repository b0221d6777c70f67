#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "twalg/clifford.hpp"
#include "twalg/error.hpp"

using namespace twalg;

namespace {

constexpr double kTol = 1e-9;

std::mt19937& rng() {
    static std::mt19937 r(1618033);
    return r;
}

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Bubble sort the concatenated word and count swaps.
int bubble_sign(std::uint32_t a, std::uint32_t b) {
    std::vector<int> w;
    for (int i = 0; i < 32; ++i)
        if (a >> i & 1) w.push_back(i);
    for (int i = 0; i < 32; ++i)
        if (b >> i & 1) w.push_back(i);
    int swaps = 0;
    for (size_t pass = 0; pass < w.size(); ++pass)
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                ++swaps;
            }
    return swaps % 2 ? -1 : 1;
}

std::vector<std::string> labels(int n) {
    std::vector<std::string> l;
    for (int i = 1; i <= n; ++i) l.push_back("e" + std::to_string(i));
    return l;
}

RingValue random_rho(const DescPtr& d) {
    static const cplx units[] = {1.0, -1.0, cplx(0, 1), cplx(0, -1)};
    if (d->kind == RingKind::Laurent && uniform(0, 1))
        return laurent_monomial(d, {uniform(-3, 3)}, units[uniform(0, 3)]);
    if (d->is_real()) return ring_central(d, uniform(0, 1) ? 1.0 : -1.0);
    return ring_central(d, units[uniform(0, 3)]);
}

CliffordSpec random_spec(int n, const DescPtr& d) {
    std::vector<RingValue> rho;
    for (int i = 0; i < n; ++i) rho.push_back(random_rho(d));
    return make_clifford_spec(labels(n), rho, d);
}

RingValue phase() {
    std::uniform_real_distribution<double> u(0.0, 6.283185307179586);
    return complex_value(std::polar(1.0, u(rng())));
}

void expect_verified(const Morphism& m, double tol = kTol) {
    const MorphismReport r = verify_morphism(m, tol);
    EXPECT_TRUE(r.verified()) << m.name << " mult " << r.mult_residual << " star " << r.star_residual << " unit "
                              << r.unit_residual << " rank " << r.image_rank << "/" << r.source_dim << " target "
                              << r.target_dim;
}

}  // namespace

TEST(Sign, MatchesBubbleSort) {
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint32_t a = static_cast<std::uint32_t>(uniform(0, 255));
        const std::uint32_t b = static_cast<std::uint32_t>(uniform(0, 255));
        ASSERT_EQ(transposition_sign(a, b), bubble_sign(a, b)) << a << " " << b;
    }
}

TEST(Relations, GeneratorsAnticommuteAndSquareToRho) {
    for (const DescPtr& d : {desc::complex_scalar(), desc::laurent(1)}) {
        for (int n = 0; n <= 6; ++n) {
            const CliffordSpec spec = random_spec(n, d);
            auto f = clifford_cocycle(spec);
            ASSERT_TRUE(validate(*f).ok()) << n;
            for (int s = 0; s < n; ++s) {
                const AlgebraElement vs = generator(f, 1 << s);
                EXPECT_LE(alg_distance(alg_mul(vs, vs), embed_scalar(f, spec.rho[s])), kTol);
                for (int t = s + 1; t < n; ++t) {
                    const AlgebraElement vt = generator(f, 1 << t);
                    EXPECT_LE(alg_distance(alg_mul(vs, vt), alg_scale(alg_mul(vt, vs), -1.0)), kTol);
                }
            }
        }
    }
}

TEST(Relations, SquareOfEveryBasisElement) {
    for (int n = 0; n <= 6; ++n) {
        const CliffordSpec spec = random_spec(n, desc::laurent(1));
        auto f = clifford_cocycle(spec);
        for (int A = 0; A < (1 << n); ++A) {
            const int m = __builtin_popcount(static_cast<unsigned>(A));
            RingValue expect = ring_central(spec.desc, (m * (m - 1) / 2) % 2 ? -1.0 : 1.0);
            AlgebraElement word = generator(f, 0);
            for (int s = 0; s < n; ++s)
                if (A >> s & 1) {
                    expect = ring_mul(expect, spec.rho[s]);
                    word = alg_mul(word, generator(f, 1 << s));
                }
            const AlgebraElement va = generator(f, A);
            EXPECT_LE(alg_distance(word, va), kTol);
            EXPECT_LE(alg_distance(alg_mul(va, va), embed_scalar(f, expect)), kTol) << A;
        }
        EXPECT_LE(ring_distance(clifford_tilde_full(spec), tilde(*f, (1 << n) - 1)), kTol);
    }
}

TEST(Spec, RejectsBadRho) {
    const auto C = desc::complex_scalar();
    EXPECT_THROW(make_clifford_spec(labels(2), {ring_unit(C), ring_central(C, 2.0)}), DomainError);
    EXPECT_THROW(make_clifford_spec(labels(2), {ring_unit(C)}), DomainError);
    EXPECT_THROW(make_clifford_spec(labels(9), std::vector<RingValue>(9, ring_unit(C))), DomainError);
    const auto M = desc::matrix(2);
    EXPECT_THROW(make_clifford_spec(labels(1), {matrix_value(M, Eigen::Matrix2cd{{1, 0}, {0, -1}})}), DomainError);
}

TEST(Universal, NamesTheFailingRelation) {
    const auto C = desc::complex_scalar();
    const CliffordSpec spec = make_clifford_spec({"p", "q"}, {ring_unit(C), ring_unit(C)});
    auto target = model::matrix(2, model::ring(C));
    auto mat = [&](cplx a, cplx b, cplx c, cplx d) {
        return matrix_element(target, {model_embed(model::ring(C), complex_value(a)), model_embed(model::ring(C), complex_value(b)),
                                       model_embed(model::ring(C), complex_value(c)), model_embed(model::ring(C), complex_value(d))});
    };
    const ModelElement sx = mat(0, 1, 1, 0), sz = mat(1, 0, 0, -1), id = mat(1, 0, 0, 1);
    const Morphism ok = universal_map(spec, {sx, sz}, target);
    expect_verified(ok);
    try {
        universal_map(spec, {sx, id}, target);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("(p, q)"), std::string::npos) << e.what();
    }
    try {
        universal_map(spec, {sx, model_scale(sz, 2.0)}, target);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("s = q"), std::string::npos) << e.what();
    }
}

TEST(Periodicity, ExtendTwoMatrix) {
    for (int n : {0, 2}) {
        const CliffordSpec spec = random_spec(n, desc::complex_scalar());
        const Periodicity p = extend_two_matrix(spec, phase(), phase());
        EXPECT_EQ(p.extended.size(), n + 2);
        expect_verified(p.morphism);
        EXPECT_LE(p.projection_residual, 1e-12);
    }
    const CliffordSpec real = random_spec(2, desc::real_scalar());
    expect_verified(extend_two_matrix(real, real_value(1.0), real_value(-1.0)).morphism);
}

TEST(Periodicity, RealQuaternionAndComplexify) {
    for (int n : {0, 2}) {
        const CliffordSpec spec = random_spec(n, desc::real_scalar());
        const Periodicity q = extend_two_quaternion(spec, real_value(1.0), real_value(-1.0));
        expect_verified(q.morphism);
        const Periodicity c = complexify_odd(spec);
        expect_verified(c.morphism);
        EXPECT_EQ(c.extended.size(), n + 1);
    }
    EXPECT_THROW(complexify_odd(random_spec(1, desc::real_scalar())), DomainError);
    EXPECT_THROW(complexify_odd(random_spec(2, desc::complex_scalar())), DomainError);
}

TEST(Periodicity, SplitOddProjectionsAndIsometries) {
    for (const DescPtr& d : {desc::complex_scalar(), desc::real_scalar()})
        for (int n : {0, 2}) {
            const SplitOdd s = split_odd(random_spec(n, d));
            EXPECT_LE(s.isometry_residual, 1e-12);
            EXPECT_LE(s.range_residual, 1e-12);
            EXPECT_LE(s.intertwine_residual, 1e-12);
            EXPECT_LE(s.extraction_residual, 1e-12);
            EXPECT_LE(s.central_residual, 1e-12);
            EXPECT_TRUE(is_projection(s.plus));
            EXPECT_TRUE(is_projection(s.minus));
            expect_verified(s.morphism);
        }
    EXPECT_THROW(split_odd(random_spec(3, desc::complex_scalar())), DomainError);
}

TEST(Periodicity, DoubleExtensionIsFourByFour) {
    const auto C = desc::complex_scalar();
    const CliffordSpec base = make_clifford_spec({}, {}, C);
    const Periodicity first = extend_two_matrix(base, phase(), phase());
    const Periodicity second = extend_two_matrix(first.extended, phase(), phase());
    const Morphism m = compose_entrywise(second.morphism, first.morphism);
    EXPECT_EQ(m.target->kind, ModelKind::Matrix);
    EXPECT_EQ(m.target->k, 4);
    EXPECT_EQ(m.source->order(), 16);
    expect_verified(m);
}

TEST(EvenProjection, CornerOfTwoExtraGenerators) {
    for (int n : {0, 2}) {
        const CliffordSpec spec = random_spec(n, desc::complex_scalar());
        const EvenProjection e = extend_even_projection(spec, {phase(), phase()});
        EXPECT_TRUE(e.is_projection);
        EXPECT_LE(e.commute_residual, kTol);
        EXPECT_LE(e.bc_residual, kTol);
        const MorphismReport r = verify_morphism(e.morphism);
        EXPECT_TRUE(r.homomorphism()) << r.mult_residual << " " << r.unit_residual;
        EXPECT_TRUE(r.injective);
    }
    const EvenProjection one = extend_even_projection(random_spec(2, desc::complex_scalar()), {phase()});
    EXPECT_TRUE(one.is_projection);
    EXPECT_THROW(extend_even_projection(random_spec(1, desc::complex_scalar()), {phase()}), DomainError);
}

TEST(ProjectionFamily, ChecksHypotheses) {
    const auto C = desc::complex_scalar();
    const CliffordSpec spec = make_clifford_spec(labels(2), {ring_unit(C), ring_unit(C)});
    auto f = clifford_cocycle(spec);
    const AlgebraElement p = projection_family(f, {1}, {ring_unit(C)}, {ring_central(C, 0.5)});
    EXPECT_TRUE(is_projection(p));
    EXPECT_THROW(projection_family(f, {1}, {ring_unit(C)}, {ring_central(C, 0.4)}), DomainError);
    EXPECT_THROW(projection_family(f, {0}, {ring_unit(C)}, {ring_central(C, 0.5)}), DomainError);
    const double h = 0.5 / std::sqrt(2.0);
    EXPECT_TRUE(is_projection(
        projection_family(f, {1, 2}, {ring_unit(C), ring_central(C, -1.0)}, {ring_central(C, h), ring_central(C, h)})));
    // V_{e1 e2}^2 = -1 needs an imaginary coefficient.
    EXPECT_THROW(projection_family(f, {3}, {ring_unit(C)}, {ring_central(C, 0.5)}), DomainError);
    EXPECT_TRUE(is_projection(projection_family(f, {3}, {ring_unit(C)}, {ring_central(C, cplx(0, 0.5))})));
}
