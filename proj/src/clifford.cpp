#include "twalg/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace twalg {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

EMatrix identity_ematrix(const DescPtr& d, int n) {
    EMatrix m = ematrix_zero(d, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ring_unit(d);
    return m;
}

ModelElement twisted_elem(const ModelPtr& m, const AlgebraElement& x) { return ModelElement{m, x.coeffs()}; }

void require_even(const CliffordSpec& spec, const char* op) {
    require(spec.size() % 2 == 0, std::string(op) + " needs an even number of labels");
}

void require_real(const CliffordSpec& spec, const char* op) {
    require(spec.desc->is_real(), std::string(op) + " needs a real coefficient ring");
}

}  // namespace

CliffordSpec make_clifford_spec(std::vector<std::string> labels, std::vector<RingValue> rho, DescPtr d, double tol) {
    require(labels.size() == rho.size(), "rho needs one value per label");
    require(!rho.empty() || labels.empty(), "rho values missing");
    require(static_cast<int>(labels.size()) <= kMaxCliffordLabels, "at most 8 Clifford labels are supported");
    SubsetGroup base(std::move(labels));
    if (!d) d = rho.empty() ? desc::complex_scalar() : rho.front().desc();
    for (size_t i = 0; i < rho.size(); ++i) {
        require(same_ring(rho[i].desc(), d), "rho values over different rings");
        require(is_central(rho[i], tol), "rho(" + base.base()[i] + ") is not central");
        require(is_unitary(rho[i], tol), "rho(" + base.base()[i] + ") is not unitary");
    }
    return CliffordSpec{std::move(base), std::move(rho), std::move(d)};
}

CliffordSpec extend_spec(const CliffordSpec& spec, const std::vector<RingValue>& extra) {
    std::vector<std::string> labels = spec.base.base();
    std::set<std::string> used(labels.begin(), labels.end());
    for (size_t i = 0; i < extra.size(); ++i) {
        std::string l = std::to_string(spec.size() + static_cast<int>(i) + 1);
        while (used.count(l)) l = "x" + l;
        used.insert(l);
        labels.push_back(l);
    }
    std::vector<RingValue> rho = spec.rho;
    rho.insert(rho.end(), extra.begin(), extra.end());
    return make_clifford_spec(std::move(labels), std::move(rho), spec.desc);
}

int transposition_sign(std::uint32_t a, std::uint32_t b) {
    int tau = 0;
    for (std::uint32_t x = a; x; x &= x - 1) {
        const int bit = __builtin_ctz(x);
        tau += popcount(b & ((1u << bit) - 1u));
    }
    return (tau % 2 == 0) ? 1 : -1;
}

CocyclePtr clifford_cocycle(const CliffordSpec& spec) {
    const int n = 1 << spec.size();
    std::vector<RingValue> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int A = 0; A < n; ++A)
        for (int B = 0; B < n; ++B) {
            RingValue v = ring_central(spec.desc, static_cast<double>(transposition_sign(A, B)));
            for (int s = 0; s < spec.size(); ++s)
                if ((A & B) >> s & 1) v = ring_mul(v, spec.rho[s]);
            table.push_back(std::move(v));
        }
    return std::make_shared<SchurFunction>(spec.base.group(), spec.desc, std::move(table));
}

RingValue clifford_tilde_full(const CliffordSpec& spec) {
    // tilde(S) = f(S,S)^* with f(S,S) = (-1)^{n(n-1)/2} prod rho.
    const int n = spec.size();
    RingValue v = ring_central(spec.desc, ((n * (n - 1) / 2) % 2 == 0) ? 1.0 : -1.0);
    for (const auto& r : spec.rho) v = ring_mul(v, r);
    return ring_star(v);
}

Morphism universal_map(const CliffordSpec& spec, const std::vector<ModelElement>& images, const ModelPtr& target,
                       double tol) {
    const int n = spec.size();
    require(static_cast<int>(images.size()) == n, "universal_map needs one image per label");
    const auto& L = spec.base.base();
    const ModelElement unit = model_unit(target);
    for (int s = 0; s < n; ++s) {
        const ModelElement& x = images[s];
        require(model_distance(model_mul(x, x), model_left(spec.rho[s], unit)) <= tol,
                "relation x_s^2 = rho(s) fails for s = " + L[s]);
        require(model_distance(model_star(x), model_left(ring_star(spec.rho[s]), x)) <= tol,
                "relation x_s^* = rho(s)^* x_s fails for s = " + L[s]);
        for (const auto& y : real_basis(spec.desc, spec.desc->kind == RingKind::Laurent ? 1 : 0)) {
            const ModelElement ey = model_left(y, unit);
            require(model_distance(model_mul(x, ey), model_mul(ey, x)) <= tol,
                    "x_s does not commute with E for s = " + L[s]);
        }
        for (int t = s + 1; t < n; ++t)
            require(model_distance(model_mul(x, images[t]), model_scale(model_mul(images[t], x), -1.0)) <= tol,
                    "relation x_s x_t = -x_t x_s fails for (" + L[s] + ", " + L[t] + ")");
    }
    auto f = clifford_cocycle(spec);
    Morphism m{"universal_map", f, target, {}, std::nullopt};
    for (int A = 0; A < (1 << n); ++A) {
        ModelElement p = unit;
        for (int s = 0; s < n; ++s)
            if (A >> s & 1) p = model_mul(p, images[s]);
        m.images.push_back(std::move(p));
    }
    return m;
}

AlgebraElement projection_family(const CocyclePtr& f, const std::vector<int>& elements,
                                 const std::vector<RingValue>& eps, const std::vector<RingValue>& coeffs, double tol) {
    require(!elements.empty(), "projection family needs at least one element");
    require(eps.size() == elements.size() && coeffs.size() == elements.size(), "one eps and one coefficient per element");
    const GroupTable& g = f->G();
    const DescPtr& d = f->desc();
    RingValue sum = ring_zero(d);
    for (size_t i = 0; i < elements.size(); ++i) {
        const int t = elements[i];
        require(t != 0, "projection family elements must differ from the identity");
        require(g.mul(t, t) == 0, "element " + g.label(t) + " does not have order 2");
        require(ring_distance(ring_mul(eps[i], eps[i]), ring_unit(d)) <= tol, "eps^2 = 1 fails at " + g.label(t));
        require(is_unitary(eps[i], tol), "eps must be unitary at " + g.label(t));
        const RingValue alpha = (*f)(t, t);
        require(ring_distance(ring_star(coeffs[i]), ring_mul(alpha, coeffs[i])) <= tol,
                "X_t^* = alpha_t X_t fails at " + g.label(t));
        sum = ring_add(sum, ring_mul(ring_star(coeffs[i]), coeffs[i]));
        for (size_t j = 0; j < i; ++j) {
            const int s = elements[j];
            require(g.mul(s, t) == g.mul(t, s), "elements " + g.label(s) + ", " + g.label(t) + " do not commute");
            const int cs = popcount(static_cast<std::uint32_t>(s)), ct = popcount(static_cast<std::uint32_t>(t));
            const int ci = popcount(static_cast<std::uint32_t>(s & t));
            require((cs * ct - ci) % 2 != 0, "pairing of " + g.label(s) + ", " + g.label(t) + " is even");
        }
    }
    require(ring_distance(sum, ring_central(d, 0.25)) <= tol, "sum |X_t|^2 = 1/4 fails");
    AlgebraElement p = alg_scale(generator(f, 0), 0.5);
    for (size_t i = 0; i < elements.size(); ++i)
        p = alg_add(p, alg_left(ring_mul(eps[i], coeffs[i]), generator(f, elements[i])));
    return p;
}

Periodicity extend_two_matrix(const CliffordSpec& spec, const RingValue& a1, const RingValue& a2) {
    const int n = spec.size();
    const DescPtr& d = spec.desc;
    CliffordSpec ext = extend_spec(spec, {ring_mul(a1, a1), ring_neg(ring_mul(a2, a2))});
    auto f = clifford_cocycle(spec);
    auto inner = model::twisted(f);
    auto target = model::matrix(2, inner);
    const ModelElement zero = model_zero(inner);
    const ModelElement one = model_unit(inner);
    std::vector<ModelElement> x;
    for (int s = 0; s < n; ++s) {
        const ModelElement v = twisted_elem(inner, generator(f, 1 << s));
        x.push_back(matrix_element(target, {v, zero, zero, model_scale(v, -1.0)}));
    }
    x.push_back(model_left(a1, matrix_element(target, {zero, one, one, zero})));
    x.push_back(model_left(a2, matrix_element(target, {zero, model_scale(one, -1.0), one, zero})));
    Periodicity out{ext, nullptr, universal_map(ext, x, target)};
    out.source = out.morphism.source;
    out.morphism.name = "extend_two_matrix";
    const int pair = (1 << n) | (1 << (n + 1));
    const AlgebraElement v0 = generator(out.source, 0);
    const AlgebraElement vp = alg_left(ring_mul(ring_star(a1), ring_star(a2)), generator(out.source, pair));
    const ModelElement e11 = matrix_element(target, {one, zero, zero, zero});
    const ModelElement e22 = matrix_element(target, {zero, zero, zero, one});
    out.projection_residual = std::max(model_distance(apply(out.morphism, alg_scale(alg_add(v0, vp), 0.5)), e11),
                                       model_distance(apply(out.morphism, alg_scale(alg_sub(v0, vp), 0.5)), e22));
    (void)d;
    return out;
}

Periodicity extend_two_quaternion(const CliffordSpec& spec, const RingValue& a1, const RingValue& a2) {
    require_real(spec, "extend_two_quaternion");
    require_even(spec, "extend_two_quaternion");
    const int n = spec.size();
    const RingValue ts = clifford_tilde_full(spec);
    CliffordSpec ext = extend_spec(spec, {ring_neg(ring_mul(ring_mul(a1, a1), ts)), ring_neg(ring_mul(ring_mul(a2, a2), ts))});
    auto f = clifford_cocycle(spec);
    auto inner = model::twisted(f);
    auto target = model::quat_tensor(inner);
    const ModelElement zero = model_zero(inner);
    const ModelElement vs = twisted_elem(inner, generator(f, spec.base.full()));
    std::vector<ModelElement> x;
    for (int s = 0; s < n; ++s)
        x.push_back(quat_element(target, {twisted_elem(inner, generator(f, 1 << s)), zero, zero, zero}));
    x.push_back(quat_element(target, {zero, model_left(ring_mul(a1, ts), vs), zero, zero}));
    x.push_back(quat_element(target, {zero, zero, model_left(ring_mul(a2, ts), vs), zero}));
    Periodicity out{ext, nullptr, universal_map(ext, x, target)};
    out.source = out.morphism.source;
    out.morphism.name = "extend_two_quaternion";
    return out;
}

Periodicity complexify_odd(const CliffordSpec& spec) {
    require_real(spec, "complexify_odd");
    require_even(spec, "complexify_odd");
    const int n = spec.size();
    const RingValue ts = clifford_tilde_full(spec);
    CliffordSpec ext = extend_spec(spec, {ring_neg(ts)});
    auto f = clifford_cocycle(spec);
    auto inner = model::twisted(f);
    auto target = model::complexify(inner);
    const ModelElement zero = model_zero(inner);
    std::vector<ModelElement> x;
    for (int s = 0; s < n; ++s) x.push_back(complex_element(target, twisted_elem(inner, generator(f, 1 << s)), zero));
    x.push_back(complex_element(target, zero,
                                model_left(ring_neg(ts), twisted_elem(inner, generator(f, spec.base.full())))));
    Periodicity out{ext, nullptr, universal_map(ext, x, target)};
    out.source = out.morphism.source;
    out.morphism.name = "complexify_odd";
    return out;
}

SplitOdd split_odd(const CliffordSpec& spec) {
    require_even(spec, "split_odd");
    const int n = spec.size();
    const DescPtr& d = spec.desc;
    CliffordSpec ext = extend_spec(spec, {clifford_tilde_full(spec)});
    auto f = clifford_cocycle(spec);
    auto fp = clifford_cocycle(ext);
    const int small = 1 << n, big = 1 << (n + 1);
    const int full = small - 1, fullp = big - 1, odd = 1 << n;
    const AlgebraElement v0 = generator(fp, 0), vs = generator(fp, fullp);
    const AlgebraElement plus = alg_scale(alg_add(v0, vs), 0.5), minus = alg_scale(alg_sub(v0, vs), 0.5);
    const double r2 = 1.0 / std::sqrt(2.0);

    auto theta = [&](double sign) {
        EMatrix t = ematrix_zero(d, big, small);
        for (int A = 0; A < small; ++A) {
            t(A, A) = ring_central(d, r2);
            t(A | odd, full ^ A) = ring_scale((*f)(full ^ A, full), sign * r2);
        }
        return t;
    };
    EMatrix tp = theta(1.0), tm = theta(-1.0);

    auto inner = model::twisted(f);
    auto target = model::direct_sum({inner, inner});
    Morphism m{"split_odd", fp, target, {}, std::nullopt};
    SplitOdd out{ext, fp, plus, minus, tp, tm, m};
    const EMatrix id = identity_ematrix(d, small);
    const EMatrix tpa = ematrix_adjoint(tp), tma = ematrix_adjoint(tm);
    out.isometry_residual = std::max(ematrix_distance(ematrix_mul(tpa, tp), id), ematrix_distance(ematrix_mul(tma, tm), id));
    out.range_residual = std::max(ematrix_distance(ematrix_mul(tp, tpa), regular_matrix(plus)),
                                  ematrix_distance(ematrix_mul(tm, tma), regular_matrix(minus)));
    for (int A = 0; A < small; ++A) {
        const EMatrix va = regular_matrix(generator(f, A));
        const AlgebraElement vpa = generator(fp, A);
        out.intertwine_residual =
            std::max({out.intertwine_residual,
                      ematrix_distance(ematrix_mul(ematrix_mul(tp, va), tpa), regular_matrix(alg_mul(vpa, plus))),
                      ematrix_distance(ematrix_mul(ematrix_mul(tm, va), tma), regular_matrix(alg_mul(vpa, minus)))});
    }
    out.central_residual = std::max({alg_distance(alg_mul(vs, plus), plus),
                                     alg_distance(alg_mul(vs, minus), alg_scale(minus, -1.0)),
                                     alg_distance(alg_add(plus, minus), v0),
                                     alg_distance(alg_mul(plus, minus), alg_zero(fp))});

    auto compress = [&](const EMatrix& t, const EMatrix& ta, const EMatrix& L) {
        const EMatrix c = ematrix_mul(ematrix_mul(ta, L), t);
        std::vector<RingValue> coeffs;
        for (int s = 0; s < small; ++s) coeffs.push_back(c(s, 0));
        AlgebraElement x(f, std::move(coeffs));
        out.extraction_residual = std::max(out.extraction_residual, ematrix_distance(regular_matrix(x), c));
        return x;
    };
    for (int B = 0; B < big; ++B) {
        const EMatrix L = regular_matrix(generator(fp, B));
        const AlgebraElement xp = compress(tp, tpa, L), xm = compress(tm, tma, L);
        out.morphism.images.push_back(sum_element(target, {twisted_elem(inner, xp), twisted_elem(inner, xm)}));
    }
    return out;
}

EvenProjection extend_even_projection(const CliffordSpec& spec, const std::vector<RingValue>& alphas, double tol) {
    require_even(spec, "extend_even_projection");
    const int m = static_cast<int>(alphas.size());
    require(m >= 1, "extend_even_projection needs at least one extra generator");
    const int n = spec.size();
    const RingValue ts = clifford_tilde_full(spec);
    std::vector<RingValue> extra;
    for (const auto& a : alphas) extra.push_back(ring_mul(ring_mul(a, a), ts));
    CliffordSpec ext = extend_spec(spec, extra);
    auto fp = clifford_cocycle(ext);
    const int full = (1 << n) - 1;
    AlgebraElement p = alg_scale(generator(fp, 0), 0.5);
    const double c = 1.0 / (2.0 * std::sqrt(static_cast<double>(m)));
    for (int i = 0; i < m; ++i)
        p = alg_add(p, alg_scale(alg_left(ring_star(alphas[i]), generator(fp, full | (1 << (n + i)))), c));
    auto target = model::twisted(fp);
    Morphism mor{"extend_even_projection", clifford_cocycle(spec), target, {}, from_algebra(p)};
    for (int A = 0; A < (1 << n); ++A) mor.images.push_back(from_algebra(alg_mul(p, generator(fp, A))));
    EvenProjection out{ext, fp, p, mor};
    out.is_projection = is_projection(p, tol);
    for (int s = 0; s < n; ++s) {
        const AlgebraElement v = generator(fp, 1 << s);
        out.commute_residual = std::max(out.commute_residual, alg_distance(alg_mul(p, v), alg_mul(v, p)));
    }
    if (m == 2) {
        const int pair = (1 << n) | (1 << (n + 1));
        for (int t = 0; t < fp->order(); ++t) {
            const AlgebraElement y = alg_mul(alg_mul(p, generator(fp, t)), p);
            for (int B = 0; B < (1 << n); ++B) out.bc_residual = std::max(out.bc_residual, ring_size(y[B | pair]));
        }
    }
    return out;
}

}  // namespace twalg
