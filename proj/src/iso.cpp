#include "twalg/iso.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace twalg {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

void require_central_unitary(const RingValue& x, const char* name, double tol) {
    require(is_central(x, tol), std::string(name) + " must be central");
    require(is_unitary(x, tol), std::string(name) + " must be unitary");
}

void require_square(const RingValue& x, const RingValue& target, const std::string& what, double tol) {
    require(ring_distance(ring_mul(x, x), target) <= tol, "root hypothesis fails: " + what);
}

ModelElement ring_elem(const ModelPtr& r, const RingValue& v) { return ModelElement{r, {v}}; }

RingValue scal(const DescPtr& d, cplx c) { return ring_central(d, c); }

}  // namespace

Morphism lambda_isomorphism(const CocyclePtr& f, const Lambda& lambda) {
    require(static_cast<int>(lambda.values.size()) == f->order(), "lambda has wrong length");
    auto g = std::make_shared<SchurFunction>(cocycle_mul(*f, coboundary(lambda)));
    Morphism m{"lambda_isomorphism", f, model::twisted(g), {}, std::nullopt};
    for (int t = 0; t < f->order(); ++t)
        m.images.push_back(ModelElement{m.target, alg_left(ring_star(lambda.values[t]), generator(g, t)).coeffs()});
    return m;
}

Morphism z2_split(const CocyclePtr& f, const RingValue& x, double tol) {
    require(f->order() == 2, "z2_split needs the group Z/2");
    require_central_unitary(x, "x", tol);
    require_square(x, (*f)(1, 1), "x^2 = f(1,1)", tol);
    const DescPtr& d = f->desc();
    auto r = model::ring(d);
    auto target = model::direct_sum({r, r});
    Morphism m{"z2_split", f, target, {}, std::nullopt};
    m.images.push_back(model_unit(target));
    m.images.push_back(sum_element(target, {ring_elem(r, x), ring_elem(r, ring_neg(x))}));
    return m;
}

Morphism z2_complexify(const CocyclePtr& f, double tol) {
    require(f->order() == 2, "z2_complexify needs the group Z/2");
    const DescPtr& d = f->desc();
    require(d->is_real(), "z2_complexify needs a real coefficient ring");
    require(ring_distance((*f)(1, 1), scal(d, -1.0)) <= tol, "z2_complexify needs f(1,1) = -1");
    auto r = model::ring(d);
    auto target = model::complexify(r);
    Morphism m{"z2_complexify", f, target, {}, std::nullopt};
    m.images.push_back(model_unit(target));
    m.images.push_back(complex_element(target, ring_elem(r, ring_zero(d)), ring_elem(r, ring_unit(d))));
    return m;
}

CocyclePtr klein_cocycle(const KleinParams& p) {
    return std::make_shared<SchurFunction>(klein_table(p.alpha, p.beta, p.gamma, p.eps));
}

Morphism klein_split4(const KleinParams& p, const RingValue& x, const RingValue& y, double tol) {
    const DescPtr& d = p.alpha.desc();
    require(ring_distance(p.eps, ring_unit(d)) <= tol, "klein_split4 needs eps = 1");
    require_central_unitary(x, "x", tol);
    require_central_unitary(y, "y", tol);
    require_square(x, ring_mul(p.beta, p.gamma), "x^2 = beta gamma", tol);
    require_square(y, ring_mul(p.alpha, p.gamma), "y^2 = alpha gamma", tol);
    const RingValue z = ring_mul(ring_mul(x, y), ring_star(p.gamma));
    auto f = klein_cocycle(p);
    auto r = model::ring(d);
    auto target = model::direct_sum({r, r, r, r});
    Morphism m{"klein_split4", f, target, std::vector<ModelElement>(4, model_zero(target)), std::nullopt};
    const double signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::vector<ModelElement> va, vb, vc;
    for (const auto& s : signs) {
        va.push_back(ring_elem(r, ring_scale(x, s[0])));
        vb.push_back(ring_elem(r, ring_scale(y, s[1])));
        vc.push_back(ring_elem(r, ring_scale(z, s[0] * s[1])));
    }
    m.images[0] = model_unit(target);
    m.images[KleinLabels::a] = sum_element(target, va);
    m.images[KleinLabels::b] = sum_element(target, vb);
    m.images[KleinLabels::c] = sum_element(target, vc);
    return m;
}

Morphism klein_complex_pair(const KleinParams& p, const RingValue& x, const RingValue& y, double tol) {
    const DescPtr& d = p.alpha.desc();
    require(d->is_real(), "klein_complex_pair needs a real coefficient ring");
    require(ring_distance(p.eps, ring_unit(d)) <= tol, "klein_complex_pair needs eps = 1");
    require_central_unitary(x, "x", tol);
    require_central_unitary(y, "y", tol);
    require_square(x, ring_neg(ring_mul(p.beta, p.gamma)), "x^2 = -beta gamma", tol);
    const RingValue ag = ring_mul(p.alpha, p.gamma);
    const bool plus = ring_distance(ring_mul(y, y), ag) <= tol;
    require(plus || ring_distance(ring_mul(y, y), ring_neg(ag)) <= tol, "root hypothesis fails: y^2 = +-alpha gamma");
    const RingValue z = ring_mul(ring_mul(x, y), ring_star(p.gamma));
    auto f = klein_cocycle(p);
    auto r = model::ring(d);
    auto c = model::complexify(r);
    auto target = model::direct_sum({c, c});
    const RingValue zero = ring_zero(d);
    auto cx = [&](const RingValue& re, const RingValue& im) {
        return complex_element(c, ring_elem(r, re), ring_elem(r, im));
    };
    Morphism m{"klein_complex_pair", f, target, std::vector<ModelElement>(4, model_zero(target)), std::nullopt};
    m.images[0] = model_unit(target);
    m.images[KleinLabels::a] = sum_element(target, {cx(zero, x), cx(zero, x)});
    if (plus) {
        m.images[KleinLabels::b] = sum_element(target, {cx(y, zero), cx(ring_neg(y), zero)});
        m.images[KleinLabels::c] = sum_element(target, {cx(zero, z), cx(zero, ring_neg(z))});
    } else {
        m.images[KleinLabels::b] = sum_element(target, {cx(zero, y), cx(zero, ring_neg(y))});
        m.images[KleinLabels::c] = sum_element(target, {cx(ring_neg(z), zero), cx(z, zero)});
    }
    return m;
}

Morphism klein_quaternion(const KleinParams& p, const RingValue& x, const RingValue& y, double tol) {
    const DescPtr& d = p.alpha.desc();
    require(d->is_real(), "klein_quaternion needs a real coefficient ring");
    require(ring_distance(p.eps, scal(d, -1.0)) <= tol, "klein_quaternion needs eps = -1");
    require_central_unitary(x, "x", tol);
    require_central_unitary(y, "y", tol);
    require_square(x, ring_neg(ring_mul(p.beta, p.gamma)), "x^2 = -beta gamma", tol);
    require_square(y, ring_mul(p.alpha, p.gamma), "y^2 = alpha gamma", tol);
    const RingValue z = ring_mul(ring_mul(x, y), ring_star(p.gamma));
    auto f = klein_cocycle(p);
    auto r = model::ring(d);
    auto target = model::quat_tensor(r);
    const ModelElement zero = model_zero(r);
    Morphism m{"klein_quaternion", f, target, std::vector<ModelElement>(4, model_zero(target)), std::nullopt};
    m.images[0] = model_unit(target);
    m.images[KleinLabels::a] = quat_element(target, {zero, ring_elem(r, x), zero, zero});
    m.images[KleinLabels::b] = quat_element(target, {zero, zero, ring_elem(r, y), zero});
    m.images[KleinLabels::c] = quat_element(target, {zero, zero, zero, ring_elem(r, z)});
    return m;
}

Morphism klein_matrix(const KleinParams& p, const RingValue& x, const RingValue& y, double tol) {
    const DescPtr& d = p.alpha.desc();
    require(ring_distance(p.eps, scal(d, -1.0)) <= tol, "klein_matrix needs eps = -1");
    require_central_unitary(x, "x", tol);
    require_central_unitary(y, "y", tol);
    require_square(x, ring_mul(p.beta, p.gamma), "x^2 = beta gamma", tol);
    const RingValue z = ring_mul(ring_star(p.gamma), ring_mul(x, y));
    auto f = klein_cocycle(p);
    auto r = model::ring(d);
    auto target = model::matrix(2, r);
    const ModelElement zero = model_zero(r);
    auto e = [&](const RingValue& v) { return ring_elem(r, v); };
    Morphism m{"klein_matrix", f, target, std::vector<ModelElement>(4, model_zero(target)), std::nullopt};
    m.images[0] = model_unit(target);
    m.images[KleinLabels::a] = matrix_element(target, {e(x), zero, zero, e(ring_neg(x))});
    m.images[KleinLabels::b] = matrix_element(
        target, {zero, e(ring_mul(p.alpha, y)), e(ring_neg(ring_mul(p.gamma, ring_star(y)))), zero});
    m.images[KleinLabels::c] =
        matrix_element(target, {zero, e(ring_mul(p.alpha, z)), e(ring_mul(p.beta, ring_star(z))), zero});
    return m;
}

Morphism klein_matrix_alt(const KleinParams& p, const RingValue& x, const RingValue& delta, double tol) {
    const DescPtr& d = p.alpha.desc();
    require(ring_distance(p.eps, scal(d, -1.0)) <= tol, "klein_matrix_alt needs eps = -1");
    require_central_unitary(x, "x", tol);
    require_central_unitary(delta, "delta", tol);
    require_square(x, ring_mul(p.alpha, p.beta), "x^2 = alpha beta", tol);
    auto f = klein_cocycle(p);
    auto r = model::ring(d);
    auto target = model::matrix(2, r);
    const ModelElement zero = model_zero(r);
    auto e = [&](const RingValue& v) { return ring_elem(r, v); };
    const RingValue gd = ring_mul(p.gamma, ring_star(delta));
    Morphism m{"klein_matrix_alt", f, target, std::vector<ModelElement>(4, model_zero(target)), std::nullopt};
    m.images[0] = model_unit(target);
    m.images[KleinLabels::c] = matrix_element(target, {e(x), zero, zero, e(ring_neg(x))});
    m.images[KleinLabels::a] = matrix_element(target, {zero, e(ring_mul(gd, p.beta)), e(delta), zero});
    m.images[KleinLabels::b] = matrix_element(
        target, {zero, e(ring_neg(ring_mul(gd, x))), e(ring_mul(delta, ring_mul(x, ring_star(p.beta)))), zero});
    return m;
}

int z2n_pairing(int t, int s) { return (__builtin_popcount(static_cast<unsigned>(t & s)) % 2 == 0) ? 1 : -1; }

Morphism char_decompose_z2n(const CocyclePtr& f, double tol) {
    const GroupTable& g = f->G();
    const int n = g.order();
    require((n & (n - 1)) == 0, "char_decompose_z2n needs a group of order 2^n");
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            require(g.mul(s, t) == (s ^ t), "char_decompose_z2n needs (Z/2)^n indexed by bitmask");
            require(ring_distance((*f)(s, t), ring_unit(f->desc())) <= tol, "char_decompose_z2n needs f = 1");
        }
    auto r = model::ring(f->desc());
    auto target = model::direct_sum(std::vector<ModelPtr>(n, r));
    Morphism m{"char_decompose_z2n", f, target, {}, std::nullopt};
    for (int s = 0; s < n; ++s) {
        ModelElement e = model_zero(target);
        for (int t = 0; t < n; ++t) e.slots[t] = scal(f->desc(), z2n_pairing(t, s));
        m.images.push_back(std::move(e));
    }
    return m;
}

double char_inverse_residual(const Morphism& m, const AlgebraElement& x) {
    const ModelElement phi = apply(m, x);
    const int n = x.size();
    double worst = 0.0;
    for (int r = 0; r < n; ++r) {
        RingValue acc = ring_zero(x.f().desc());
        for (int t = 0; t < n; ++t) acc = ring_add(acc, ring_scale(phi.slots[t], z2n_pairing(r, t)));
        worst = std::max(worst, ring_distance(acc, ring_scale(x[r], n)));
    }
    return worst;
}

Morphism cyclic_decompose(int n, const std::vector<RingValue>& alpha, const RingValue& b, double tol) {
    require(n >= 1, "cyclic_decompose needs n >= 1");
    require(static_cast<int>(alpha.size()) == n - 1, "alpha must have n-1 entries");
    const DescPtr& d = b.desc();
    require(!d->is_real(), "cyclic_decompose needs a complex coefficient ring");
    require_central_unitary(b, "b", tol);
    RingValue prod = ring_unit(d);
    for (const auto& a : alpha) prod = ring_mul(prod, a);
    RingValue bn = ring_unit(d);
    for (int i = 0; i < n; ++i) bn = ring_mul(bn, b);
    require(ring_distance(bn, prod) <= tol, "root hypothesis fails: b^n = prod alpha");
    auto f = std::make_shared<SchurFunction>(make_f_alpha(n, alpha, d, tol));
    auto r = model::ring(d);
    auto target = model::direct_sum(std::vector<ModelPtr>(n, r));
    Morphism m{"cyclic_decompose", f, target, {}, std::nullopt};
    RingValue coef = ring_unit(d);  // b^j prod_{l<j} alpha_l^*
    for (int j = 0; j < n; ++j) {
        ModelElement e = model_zero(target);
        for (int k = 0; k < n; ++k) {
            const double ang = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / n;
            e.slots[k] = ring_scale(coef, std::polar(1.0, ang));
        }
        m.images.push_back(std::move(e));
        if (j + 1 < n) coef = ring_mul(coef, j == 0 ? b : ring_mul(b, ring_star(alpha[j - 1])));
    }
    m.images[0] = model_unit(target);
    return m;
}

TensorReport tensor_structure_check(const SchurFunction& f, const SchurFunction& g) {
    const SchurFunction h = tensor_cocycle(f, g);
    auto fp = std::make_shared<SchurFunction>(f);
    auto gp = std::make_shared<SchurFunction>(g);
    auto hp = std::make_shared<SchurFunction>(h);
    const int nf = f.order(), ng = g.order();
    TensorReport rep;
    for (int t = 0; t < nf; ++t)
        for (int s = 0; s < ng; ++s) {
            const EMatrix rf = regular_matrix(generator(fp, t));
            const EMatrix rg = regular_matrix(generator(gp, s));
            const EMatrix rh = regular_matrix(generator(hp, t * ng + s));
            for (int t1 = 0; t1 < nf; ++t1)
                for (int s1 = 0; s1 < ng; ++s1)
                    for (int t2 = 0; t2 < nf; ++t2)
                        for (int s2 = 0; s2 < ng; ++s2) {
                            const RingValue k = ring_tensor(rf(t1, t2), rg(s1, s2), h.desc());
                            rep.max_residual =
                                std::max(rep.max_residual, ring_distance(rh(t1 * ng + s1, t2 * ng + s2), k));
                        }
            ++rep.pairs;
        }
    return rep;
}

TensorReport amplification_check(const CocyclePtr& f, int k, int trials, unsigned seed) {
    require(f->desc()->kind == RingKind::ComplexScalar, "amplification_check needs complex scalars");
    auto g = std::make_shared<SchurFunction>(amplify(*f, k));
    const int n = f->order();
    auto target = model::matrix(k, model::twisted(f));
    std::mt19937 rng(seed);
    std::normal_distribution<double> nd;
    auto random_elem = [&]() {
        std::vector<RingValue> c;
        for (int t = 0; t < n; ++t) {
            Eigen::MatrixXcd m(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m(i, j) = cplx(nd(rng), nd(rng));
            c.push_back(matrix_value(g->desc(), m));
        }
        return AlgebraElement(g, std::move(c));
    };
    auto psi = [&](const AlgebraElement& x) {
        ModelElement e = model_zero(target);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (int t = 0; t < n; ++t) e.slots[(i * k + j) * n + t] = complex_value(x[t].matrix()(i, j));
        return e;
    };
    TensorReport rep;
    for (int i = 0; i < trials; ++i) {
        const AlgebraElement x = random_elem(), y = random_elem();
        const double scale = std::max(1.0, alg_norm(x) * alg_norm(y));
        rep.max_residual = std::max(rep.max_residual, model_distance(psi(alg_mul(x, y)), model_mul(psi(x), psi(y))) / scale);
        rep.max_residual = std::max(rep.max_residual, model_distance(psi(alg_star(x)), model_star(psi(x))) / scale);
        ++rep.pairs;
    }
    return rep;
}

RingValue torus_substitute(const AlgebraElement& x) {
    const DescPtr& d = x.f().desc();
    require(d->kind == RingKind::Laurent, "torus substitution needs Laurent coefficients");
    const int m = d->m;
    LaurentTerms out;
    for (int I = 0; I < x.size(); ++I) {
        require(I < (1 << m), "group larger than the torus dimension allows");
        for (const auto& [e, c] : x[I].terms()) {
            Exponent k(m);
            for (int i = 0; i < m; ++i) k[i] = 2 * e[i] + ((I >> i) & 1);
            out[k] += c;
        }
    }
    return laurent_value(d, std::move(out));
}

namespace {

void exponents_up_to(int m, int degree, Exponent& cur, int i, std::vector<Exponent>& out) {
    if (i == m) {
        int s = 0;
        for (int v : cur) s += std::abs(v);
        if (s <= degree) out.push_back(cur);
        return;
    }
    for (int v = -degree; v <= degree; ++v) {
        cur[i] = v;
        exponents_up_to(m, degree, cur, i + 1, out);
    }
}

RewriteReport rewrite_check(const CocyclePtr& f, int degree) {
    const DescPtr& d = f->desc();
    std::vector<Exponent> exps;
    Exponent cur(d->m);
    exponents_up_to(d->m, degree, cur, 0, exps);
    std::vector<AlgebraElement> basis;
    for (int t = 0; t < f->order(); ++t)
        for (const auto& e : exps) {
            std::vector<RingValue> c(f->order(), ring_zero(d));
            c[t] = laurent_monomial(d, e);
            basis.emplace_back(f, std::move(c));
        }
    RewriteReport rep;
    rep.basis = static_cast<int>(basis.size());
    std::vector<RingValue> img;
    std::set<Exponent> seen;
    for (const auto& x : basis) {
        img.push_back(torus_substitute(x));
        rep.star_residual = std::max(rep.star_residual, ring_distance(torus_substitute(alg_star(x)), ring_star(img.back())));
        if (img.back().terms().size() == 1) seen.insert(img.back().terms().begin()->first);
    }
    rep.injective = static_cast<int>(seen.size()) == rep.basis;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            const RingValue lhs = torus_substitute(alg_mul(basis[i], basis[j]));
            rep.mult_residual = std::max(rep.mult_residual, ring_distance(lhs, ring_mul(img[i], img[j])));
            ++rep.pairs;
        }
    return rep;
}

}  // namespace

RewriteReport laurent_z2_rewrite(const CocyclePtr& f, int degree) {
    const DescPtr& d = f->desc();
    require(f->order() == 2, "laurent_z2_rewrite needs the group Z/2");
    require(d->kind == RingKind::Laurent && d->m == 1 && !d->is_real(), "laurent_z2_rewrite needs complex Laurent m = 1");
    require(ring_distance((*f)(1, 1), laurent_monomial(d, {1})) == 0.0, "laurent_z2_rewrite needs f(1,1) = z");
    return rewrite_check(f, degree);
}

CocyclePtr torus_cocycle(int n) {
    require(n >= 1 && n <= 6, "torus_cocycle supports 1 <= n <= 6");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    SubsetGroup sg(labels);
    const DescPtr d = desc::laurent(n);
    const int order = 1 << n;
    std::vector<RingValue> table;
    for (int I = 0; I < order; ++I)
        for (int J = 0; J < order; ++J) {
            Exponent e(n);
            for (int i = 0; i < n; ++i) e[i] = ((I & J) >> i) & 1;
            table.push_back(laurent_monomial(d, e));
        }
    return std::make_shared<SchurFunction>(sg.group(), d, std::move(table));
}

RewriteReport z2n_torus_rewrite(int n, int degree) { return rewrite_check(torus_cocycle(n), degree); }

CocyclePtr z2z4_cocycle(const RingValue& alpha, const RingValue& beta, const RingValue& gamma, const RingValue& delta) {
    const DescPtr& d = alpha.desc();
    auto G = direct_product(*make_cyclic(2), *make_cyclic(4));
    const RingValue one = ring_unit(d);
    const RingValue as = ring_star(alpha), bs = ring_star(beta);
    const RingValue abg = ring_mul(as, ring_mul(beta, gamma));  // alpha^* beta gamma
    const RingValue ag = ring_mul(as, gamma);                   // alpha^* gamma
    const RingValue bg = ring_mul(bs, gamma);                   // beta^* gamma
    auto neg = [](const RingValue& v) { return ring_neg(v); };
    auto dl = [&](const RingValue& v) { return ring_mul(v, delta); };
    // Rows and columns (0,1),(0,2),(0,3),(1,0),(1,1),(1,2),(1,3).
    const std::vector<std::vector<RingValue>> rows = {
        {alpha, beta, gamma, neg(one), neg(alpha), neg(beta), neg(gamma)},
        {beta, abg, ag, neg(one), neg(beta), neg(abg), neg(ag)},
        {gamma, ag, bg, neg(one), neg(gamma), neg(ag), neg(bg)},
        {one, one, one, delta, delta, delta, delta},
        {alpha, beta, gamma, neg(delta), neg(dl(alpha)), neg(dl(beta)), neg(dl(gamma))},
        {beta, abg, ag, neg(delta), neg(dl(beta)), neg(dl(abg)), neg(dl(ag))},
        {gamma, ag, bg, neg(delta), neg(dl(gamma)), neg(dl(ag)), neg(dl(bg))},
    };
    std::vector<RingValue> table(64, one);
    for (int r = 1; r < 8; ++r)
        for (int c = 1; c < 8; ++c) table[r * 8 + c] = rows[r - 1][c - 1];
    return std::make_shared<SchurFunction>(G, d, std::move(table));
}

namespace {
// Indices in Z/2 x Z/4 (row-major): (i,j) -> 4i + j.
constexpr int zz(int i, int j) { return 4 * i + j; }
constexpr int kZ4a = zz(1, 0), kZ4b = zz(0, 2), kZ4c = zz(1, 2);
}  // namespace

Morphism z2z4_decompose(const CocyclePtr& f) {
    require(f->order() == 8 && f->G().factor_orders() == std::vector<int>({2, 4}), "z2z4_decompose needs Z/2 x Z/4");
    const DescPtr& d = f->desc();
    require(!d->is_real(), "z2z4_decompose needs a complex coefficient ring");
    auto r = model::ring(d);
    auto mat = model::matrix(2, r);
    auto target = model::direct_sum({mat, r, r, r, r});
    const RingValue one = ring_unit(d), zero = ring_zero(d);
    Morphism m{"z2z4_decompose", f, target, {}, std::nullopt};
    for (int t = 0; t < 8; ++t) {
        // Matrix block [[Z_0 + Z_c, Z_a - Z_b], [Z_a + Z_b, Z_0 - Z_c]].
        RingValue m11 = zero, m12 = zero, m21 = zero, m22 = zero;
        if (t == 0) m11 = m22 = one;
        if (t == kZ4c) { m11 = one; m22 = ring_neg(one); }
        if (t == kZ4a) m12 = m21 = one;
        if (t == kZ4b) { m12 = ring_neg(one); m21 = one; }
        std::vector<ModelElement> parts = {matrix_element(mat, {ring_elem(r, m11), ring_elem(r, m12), ring_elem(r, m21),
                                                                ring_elem(r, m22)})};
        // phi_{j,k} Z = Z_0 + (-1)^j Z_b + i^j Z_{(k,1)} - i^j Z_{(k,3)}, order (0,0),(0,1),(1,0),(1,1).
        for (int jk = 0; jk < 4; ++jk) {
            const int j = jk >> 1, k = jk & 1;
            const cplx ij = j == 0 ? cplx(1.0) : cplx(0.0, 1.0);
            cplx c = 0.0;
            if (t == 0) c += 1.0;
            if (t == kZ4b) c += (j == 0 ? 1.0 : -1.0);
            if (t == zz(k, 1)) c += ij;
            if (t == zz(k, 3)) c -= ij;
            parts.push_back(ring_elem(r, ring_central(d, c)));
        }
        m.images.push_back(sum_element(target, parts));
    }
    return m;
}

CornerReport z2z4_corner_check(const CocyclePtr& f, const RingValue& beta1, const RingValue& beta2, double tol) {
    const RingValue a1 = (*f)(kZ4a, kZ4a);
    const RingValue gamma = ring_mul(ring_mul(ring_star(a1), ring_star(beta1)), beta2);
    const AlgebraElement one = generator(f, 0);
    const AlgebraElement gv = alg_left(gamma, generator(f, kZ4c));
    CornerReport rep{alg_scale(alg_add(one, gv), 0.5), alg_scale(alg_sub(one, gv), 0.5)};
    rep.plus_projection = is_projection(rep.plus, tol);
    rep.minus_projection = is_projection(rep.minus, tol);
    rep.sum_residual = alg_distance(alg_add(rep.plus, rep.minus), one);
    rep.product_residual = alg_distance(alg_mul(rep.plus, rep.minus), alg_zero(f));
    const DescPtr& d = f->desc();
    rep.dim_e = real_dim(d);
    for (int sign = 0; sign < 2; ++sign) {
        const AlgebraElement& p = sign == 0 ? rep.plus : rep.minus;
        std::vector<ModelElement> corner;
        for (int t = 0; t < f->order(); ++t)
            for (const auto& y : real_basis(d, 0))
                corner.push_back(from_algebra(alg_mul(alg_mul(p, alg_left(y, generator(f, t))), p)));
        (sign == 0 ? rep.plus_rank : rep.minus_rank) = real_rank(corner);
    }
    return rep;
}

}  // namespace twalg
