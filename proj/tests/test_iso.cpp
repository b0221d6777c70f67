#include <gtest/gtest.h>

#include <random>

#include "twalg/iso.hpp"

using namespace twalg;

namespace {

constexpr double kTol = 1e-9;

std::mt19937& rng() {
    static std::mt19937 r(2718281);
    return r;
}

RingValue phase() {
    std::uniform_real_distribution<double> u(0.0, 6.283185307179586);
    return complex_value(std::polar(1.0, u(rng())));
}

std::vector<RingValue> phases(int k) {
    std::vector<RingValue> v;
    for (int i = 0; i < k; ++i) v.push_back(phase());
    return v;
}

AlgebraElement random_element(const CocyclePtr& f) {
    std::normal_distribution<double> nd;
    std::vector<RingValue> c;
    for (int t = 0; t < f->order(); ++t)
        c.push_back(f->desc()->is_real() ? ring_central(f->desc(), nd(rng()))
                                         : ring_central(f->desc(), cplx(nd(rng()), nd(rng()))));
    return AlgebraElement(f, c);
}

void expect_verified(const Morphism& m, double tol = kTol) {
    const MorphismReport r = verify_morphism(m, tol);
    EXPECT_TRUE(r.homomorphism()) << m.name << " mult " << r.mult_residual << " star " << r.star_residual << " unit "
                                  << r.unit_residual;
    EXPECT_TRUE(r.injective) << m.name;
    EXPECT_TRUE(r.surjective) << m.name << " rank " << r.image_rank << "/" << r.target_dim;
    EXPECT_LT(r.mult_residual, tol);
    EXPECT_LT(r.star_residual, tol);
}

// Gaussian-integer coefficients keep sums and sign flips exact in floating point.
AlgebraElement integer_element(const CocyclePtr& f) {
    std::uniform_int_distribution<int> u(-50, 50);
    std::vector<RingValue> c;
    for (int t = 0; t < f->order(); ++t) c.push_back(ring_central(f->desc(), cplx(u(rng()), u(rng()))));
    return AlgebraElement(f, c);
}

}  // namespace

TEST(Lambda, TwistByCoboundaryIsIsomorphism) {
    const auto C = desc::complex_scalar();
    auto G = direct_product(*make_cyclic(2), *make_cyclic(3));
    auto f = std::make_shared<SchurFunction>(trivial_cocycle(G, C));
    Lambda lam{G, C, {complex_value(1.0)}};
    for (int t = 1; t < 6; ++t) lam.values.push_back(phase());
    expect_verified(lambda_isomorphism(f, lam));
    expect_verified(identity_morphism(f));
}

TEST(Z2, SplitOverComplexAndReal) {
    for (const DescPtr& d : {desc::complex_scalar(), desc::real_scalar(), desc::matrix(2)}) {
        auto f = std::make_shared<SchurFunction>(make_f_alpha(2, {ring_unit(d)}, d));
        expect_verified(z2_split(f, ring_unit(d)));
        expect_verified(z2_split(f, ring_neg(ring_unit(d))));
    }
    const RingValue a = phase();
    auto f = std::make_shared<SchurFunction>(make_f_alpha(2, {a}, desc::complex_scalar()));
    expect_verified(z2_split(f, *nth_root(a, 2)));
    EXPECT_THROW(z2_split(f, a), DomainError);
}

TEST(Z2, RealMinusOneIsComplexNumbers) {
    const auto R = desc::real_scalar();
    auto f = std::make_shared<SchurFunction>(make_f_alpha(2, {real_value(-1.0)}, R));
    EXPECT_FALSE(nth_root((*f)(1, 1), 2).has_value());
    const Morphism m = z2_complexify(f);
    expect_verified(m);
    // Multiplication table of C on the images of 1 and V_1.
    const ModelElement one = m.images[0], i = m.images[1];
    EXPECT_EQ(model_distance(model_mul(i, i), model_scale(one, -1.0)), 0.0);
    EXPECT_EQ(model_distance(model_mul(one, i), i), 0.0);
    EXPECT_EQ(model_distance(model_star(i), model_scale(i, -1.0)), 0.0);
}

TEST(Z2, LaurentOddWindingHasNoSplit) {
    const auto L = desc::laurent(1);
    auto f = std::make_shared<SchurFunction>(make_f_alpha(2, {laurent_monomial(L, {1})}, L));
    EXPECT_FALSE(nth_root((*f)(1, 1), 2).has_value());
    EXPECT_THROW(z2_split(f, laurent_monomial(L, {1})), DomainError);
    auto g = std::make_shared<SchurFunction>(make_f_alpha(2, {laurent_monomial(L, {2})}, L));
    const Morphism m = z2_split(g, laurent_monomial(L, {1}));
    const MorphismReport r = verify_morphism(m, kLaurentTol);
    EXPECT_TRUE(r.homomorphism());
    EXPECT_TRUE(r.injective);
    EXPECT_TRUE(r.bijective()) << r.surjectivity_method;
}

TEST(Klein, MatrixModelForEveryComplexEpsMinusOneTable) {
    const auto C = desc::complex_scalar();
    for (int trial = 0; trial < 25; ++trial) {
        const KleinParams p{phase(), phase(), phase(), complex_value(-1.0)};
        const RingValue x = *nth_root(p.beta * p.gamma, 2);
        expect_verified(klein_matrix(p, x, phase()));
        const RingValue x2 = *nth_root(p.alpha * p.beta, 2);
        expect_verified(klein_matrix_alt(p, x2, phase()));
    }
    (void)C;
}

TEST(Klein, MatrixModelOverSignTables) {
    const auto R = desc::real_scalar();
    for (int bits = 0; bits < 8; ++bits) {
        auto s = [&](int i) { return real_value((bits >> i) & 1 ? -1.0 : 1.0); };
        const KleinParams p{s(0), s(1), s(2), real_value(-1.0)};
        auto x = nth_root(p.beta * p.gamma, 2);
        if (!x) continue;  // beta gamma = -1 has no real root
        expect_verified(klein_matrix(p, *x, real_value(1.0)));
    }
    (void)R;
}

TEST(Klein, SplitIntoFourCopies) {
    for (int trial = 0; trial < 10; ++trial) {
        const KleinParams p{phase(), phase(), phase(), complex_value(1.0)};
        expect_verified(klein_split4(p, *nth_root(p.beta * p.gamma, 2), *nth_root(p.alpha * p.gamma, 2)));
    }
    const KleinParams bad{phase(), phase(), phase(), complex_value(-1.0)};
    EXPECT_THROW(klein_split4(bad, ring_unit(desc::complex_scalar()), ring_unit(desc::complex_scalar())), DomainError);
}

TEST(Klein, RealQuaternionModel) {
    const RingValue one = real_value(1.0), m1 = real_value(-1.0);
    const KleinParams p{one, m1, one, m1};
    const Morphism m = klein_quaternion(p, one, one);
    expect_verified(m);
    using K = KleinLabels;
    // i j = k on the images.
    EXPECT_EQ(model_distance(model_mul(m.images[K::a], m.images[K::b]), m.images[K::c]), 0.0);
    EXPECT_EQ(model_distance(model_mul(m.images[K::a], m.images[K::a]), model_scale(m.images[0], -1.0)), 0.0);
    // (1,1,1,-1) is the split case over the reals.
    const KleinParams q{one, one, one, m1};
    expect_verified(klein_matrix(q, one, one));
    EXPECT_THROW(klein_quaternion(q, one, one), DomainError);
}

TEST(Klein, RealComplexPair) {
    const RingValue one = real_value(1.0), m1 = real_value(-1.0);
    expect_verified(klein_complex_pair({one, m1, one, one}, one, one));
    expect_verified(klein_complex_pair({m1, m1, one, one}, one, one));
}

TEST(Characters, BijectiveWithInverseIdentity) {
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
        auto f = std::make_shared<SchurFunction>(trivial_cocycle(make_subset_group(labels).group(), desc::complex_scalar()));
        const Morphism m = char_decompose_z2n(f);
        expect_verified(m);
        for (int trial = 0; trial < 10; ++trial) EXPECT_EQ(char_inverse_residual(m, integer_element(f)), 0.0);
    }
}

TEST(Characters, PairingIsSymmetricBicharacter) {
    for (int t = 0; t < 16; ++t)
        for (int s = 0; s < 16; ++s) {
            EXPECT_EQ(z2n_pairing(t, s), z2n_pairing(s, t));
            for (int r = 0; r < 16; ++r) EXPECT_EQ(z2n_pairing(t ^ r, s), z2n_pairing(t, s) * z2n_pairing(r, s));
        }
}

TEST(Cyclic, DecompositionVerified) {
    const auto C = desc::complex_scalar();
    for (int n = 1; n <= 8; ++n) {
        const auto alpha = phases(n - 1);
        RingValue prod = ring_unit(C);
        for (const auto& a : alpha) prod = prod * a;
        const Morphism m = cyclic_decompose(n, alpha, *nth_root(prod, n));
        expect_verified(m);
    }
    EXPECT_THROW(cyclic_decompose(3, phases(2), phase()), DomainError);
}

TEST(Cyclic, DecompositionCommutesWithEquivalence) {
    const auto C = desc::complex_scalar();
    for (int n = 2; n <= 8; ++n) {
        const auto a = phases(n - 1), b = phases(n - 1);
        auto lam = equivalent_cyclic(b, a, C);
        ASSERT_TRUE(lam);
        // f_b = f_a * delta(lam), so L: S(f_a) -> S(f_b), V_t -> lam(t)^* V_t.
        auto fa = std::make_shared<SchurFunction>(make_f_alpha(n, a, C));
        const Morphism L = lambda_isomorphism(fa, *lam);
        EXPECT_TRUE(cocycles_equal(*L.target->f, make_f_alpha(n, b, C), 1e-9));
        RingValue pa = ring_unit(C);
        for (const auto& v : a) pa = pa * v;
        const RingValue ba = *nth_root(pa, n);
        const RingValue bb = ring_mul(lam->values[1], ba);
        const Morphism Da = cyclic_decompose(n, a, ba), Db = cyclic_decompose(n, b, bb);
        for (int t = 0; t < n; ++t) {
            const AlgebraElement image = to_algebra(L.images[t]);
            AlgebraElement in_b(std::make_shared<SchurFunction>(make_f_alpha(n, b, C)), image.coeffs());
            EXPECT_LE(model_distance(apply(Db, in_b), apply(Da, generator(fa, t))), 1e-9) << "n=" << n << " t=" << t;
        }
    }
}

TEST(Tensor, KroneckerStructure) {
    const auto C = desc::complex_scalar();
    const auto z2 = make_f_alpha(2, phases(1), C), z4 = make_f_alpha(4, phases(3), C);
    const auto k = klein_table(phase(), phase(), phase(), complex_value(-1.0));
    for (const auto& [f, g] : std::vector<std::pair<SchurFunction, SchurFunction>>{{z2, z2}, {z2, z4}, {k, z2}}) {
        const TensorReport r = tensor_structure_check(f, g);
        EXPECT_EQ(r.pairs, f.order() * g.order());
        EXPECT_LE(r.max_residual, 1e-15);
    }
}

TEST(Tensor, Amplification) {
    auto f = std::make_shared<SchurFunction>(make_f_alpha(3, phases(2), desc::complex_scalar()));
    const TensorReport r = amplification_check(f, 2, 20, 99);
    EXPECT_EQ(r.pairs, 20);
    EXPECT_LE(r.max_residual, 1e-12);
}

TEST(Rewrite, LaurentSquareRoot) {
    const auto L = desc::laurent(1);
    auto f = std::make_shared<SchurFunction>(make_f_alpha(2, {laurent_monomial(L, {1})}, L));
    const RewriteReport r = laurent_z2_rewrite(f, 4);
    EXPECT_EQ(r.basis, 18);
    EXPECT_EQ(r.pairs, 18 * 18);
    EXPECT_TRUE(r.ok());
    // X_0 = z, X_1 = 1 maps to z^2 + z.
    AlgebraElement x(f, {laurent_monomial(L, {1}), ring_unit(L)});
    EXPECT_EQ(format_value(torus_substitute(x)), "(1)z^(1) + (1)z^(2)");
}

TEST(Rewrite, TorusSubstitutionOracle) {
    for (int n = 1; n <= 3; ++n) {
        auto f = torus_cocycle(n);
        EXPECT_TRUE(validate(*f).ok());
        const DescPtr d = f->desc();
        // Image exponent of z^e V_I is 2e + 1_I, computed here coordinate by coordinate.
        for (int I = 0; I < f->order(); ++I) {
            Exponent e(n);
            for (int i = 0; i < n; ++i) e[i] = (i + I) % 3 - 1;
            std::vector<RingValue> c(f->order(), ring_zero(d));
            c[I] = laurent_monomial(d, e, cplx(0, 2));
            Exponent expect(n);
            for (int i = 0; i < n; ++i) expect[i] = 2 * e[i] + ((I >> i) & 1);
            EXPECT_LE(ring_distance(torus_substitute(AlgebraElement(f, c)), laurent_monomial(d, expect, cplx(0, 2))), 0.0);
        }
    }
}

TEST(Rewrite, TorusSmallDegrees) {
    for (int n = 1; n <= 2; ++n) {
        const RewriteReport r = z2n_torus_rewrite(n, 4);
        EXPECT_TRUE(r.ok()) << n;
    }
}

TEST(Z2Z4, PrintedTableFailsCocycleIdentity) {
    const auto C = desc::complex_scalar();
    auto f = z2z4_cocycle(ring_unit(C), ring_unit(C), ring_unit(C), complex_value(-1.0));
    const auto rep = validate(*f);
    ASSERT_FALSE(rep.ok());
    const Violation& v = rep.violations.front();
    EXPECT_EQ(v.kind, "cocycle");
    EXPECT_EQ(describe(v, f->G()), "cocycle at ((0,1),(0,1),(1,0)) residual 2");
}

TEST(Z2Z4, ValidTablesMakeAAndBCommute) {
    // Graded product of f_alpha on Z/2 and Z/4 with the sign (-1)^{s2 t1}, twisted by a random coboundary.
    const auto C = desc::complex_scalar();
    auto G = direct_product(*make_cyclic(2), *make_cyclic(4));
    const SchurFunction f1 = make_f_alpha(2, phases(1), C), f2 = make_f_alpha(4, phases(3), C);
    std::vector<RingValue> table;
    for (int s = 0; s < 8; ++s)
        for (int t = 0; t < 8; ++t) {
            const double sign = ((s % 4) * (t / 4)) % 2 ? -1.0 : 1.0;
            table.push_back(ring_scale(f1(s / 4, t / 4) * f2(s % 4, t % 4), sign));
        }
    Lambda lam{G, C, {complex_value(1.0)}};
    for (int t = 1; t < 8; ++t) lam.values.push_back(phase());
    auto f = std::make_shared<SchurFunction>(cocycle_mul(SchurFunction(G, C, table), coboundary(lam)));
    ASSERT_TRUE(validate(*f).ok());
    const AlgebraElement va = generator(f, 4), vb = generator(f, 2), v1 = generator(f, 1);
    EXPECT_LE(alg_distance(alg_add(alg_mul(v1, va), alg_mul(va, v1)), alg_zero(f)), 1e-12);
    EXPECT_LE(alg_distance(alg_mul(vb, va), alg_mul(va, vb)), 1e-12);
}

TEST(Z2Z4, CornerReportOnPrintedTable) {
    const auto C = desc::complex_scalar();
    auto f = z2z4_cocycle(ring_unit(C), ring_unit(C), ring_unit(C), complex_value(-1.0));
    const CornerReport c = z2z4_corner_check(f, ring_unit(C), ring_unit(C));
    EXPECT_EQ(c.dim_e, 2);
    EXPECT_LE(c.sum_residual, 1e-12);
    EXPECT_FALSE(c.ok());
}

TEST(Z2Z4, DecompositionMapIsNotMultiplicativeOnA) {
    // V_a^2 = delta V_0 in the table, but the matrix block sends V_a to a symmetric involution.
    const auto C = desc::complex_scalar();
    auto f = z2z4_cocycle(ring_unit(C), ring_unit(C), ring_unit(C), complex_value(-1.0));
    const Morphism m = z2z4_decompose(f);
    const AlgebraElement va = generator(f, 4);
    const ModelElement lhs = apply(m, alg_mul(va, va));
    const ModelElement rhs = model_mul(apply(m, va), apply(m, va));
    EXPECT_GT(model_distance(lhs, rhs), 1.0);
    EXPECT_FALSE(verify_morphism(m).homomorphism());
}
