#include "twalg/cocycle.hpp"

#include <cmath>
#include <cstdio>

namespace twalg {

namespace {

constexpr size_t kMaxViolations = 10000;

RingValue product_of(const DescPtr& d, const std::vector<RingValue>& xs) {
    RingValue r = ring_unit(d);
    for (const auto& x : xs) r = ring_mul(r, x);
    return r;
}

void require_compatible(const SchurFunction& f, const SchurFunction& g, const char* op) {
    if (f.group() != g.group() && f.order() != g.order())
        throw DomainError(std::string(op) + ": cocycles live on different groups");
    if (!same_ring(f.desc(), g.desc()))
        throw DomainError(std::string(op) + ": cocycles have different coefficient rings");
}

cplx principal_root(cplx u, int n) { return std::polar(1.0, std::arg(u) / n); }

// Root of a real sign: +1 always, -1 only for odd n.
std::optional<double> real_sign_root(double u, int n, double tol) {
    if (std::abs(u - 1.0) <= tol) return 1.0;
    if (std::abs(u + 1.0) <= tol && n % 2 == 1) return -1.0;
    return std::nullopt;
}

}  // namespace

SchurFunction::SchurFunction(GroupPtr group, DescPtr desc, std::vector<RingValue> table)
    : group_(std::move(group)), desc_(std::move(desc)), table_(std::move(table)) {
    const size_t n = static_cast<size_t>(group_->order());
    if (table_.size() != n * n) throw DomainError("cocycle table has wrong size");
    for (const auto& v : table_)
        if (!same_ring(v.desc(), desc_)) throw DomainError("cocycle value has wrong ring: " + v.desc()->name());
}

void SchurFunction::set(int s, int t, RingValue v) {
    if (!same_ring(v.desc(), desc_)) throw DomainError("cocycle value has wrong ring");
    table_[static_cast<size_t>(s) * order() + t] = std::move(v);
}

ValidationReport validate(const SchurFunction& f, double tol, int grid) {
    ValidationReport rep;
    const GroupTable& g = f.G();
    const int n = g.order();
    const RingValue one = ring_unit(f.desc());
    auto add = [&](std::string kind, std::vector<int> els, double r) {
        if (rep.violations.size() < kMaxViolations) rep.violations.push_back({std::move(kind), std::move(els), r});
    };
    if (double r = ring_distance(f(0, 0), one); r > tol) add("unit", {0, 0}, r);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const RingValue& v = f(s, t);
            if (!is_unitary(v, tol, grid)) add("unitary", {s, t}, ring_norm(ring_mul(v, ring_star(v)) - one, grid));
            if (!is_central(v, tol)) add("central", {s, t}, 0.0);
        }
    for (int t = 0; t < n; ++t) {
        double r = std::max(ring_distance(f(t, 0), one), ring_distance(f(0, t), one));
        if (r > tol) add("normalized", {t}, r);
        r = ring_distance(f(t, g.inv(t)), f(g.inv(t), t));
        if (r > tol) add("inverse-symmetry", {t}, r);
    }
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            const int rs = g.mul(r, s);
            for (int t = 0; t < n; ++t) {
                const RingValue lhs = ring_mul(f(r, s), f(rs, t));
                const RingValue rhs = ring_mul(f(r, g.mul(s, t)), f(s, t));
                const double d = ring_distance(lhs, rhs);
                if (d > tol) add("cocycle", {r, s, t}, d);
            }
        }
    return rep;
}

std::string describe(const Violation& v, const GroupTable& g) {
    std::string s = v.kind + " at (";
    for (size_t i = 0; i < v.elements.size(); ++i) s += (i ? "," : "") + g.label(v.elements[i]);
    char buf[48];
    std::snprintf(buf, sizeof buf, ") residual %.3g", v.residual);
    return s + buf;
}

SchurFunction trivial_cocycle(GroupPtr g, DescPtr d) {
    const size_t n = static_cast<size_t>(g->order());
    std::vector<RingValue> table(n * n, ring_unit(d));
    return SchurFunction(std::move(g), std::move(d), std::move(table));
}

RingValue tilde(const SchurFunction& f, int t) { return ring_star(f(t, f.G().inv(t))); }

SchurFunction hat(const SchurFunction& f) {
    const GroupTable& g = f.G();
    const int n = g.order();
    std::vector<RingValue> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) table.push_back(f(g.inv(t), g.inv(s)));
    return SchurFunction(f.group(), f.desc(), std::move(table));
}

SchurFunction cocycle_mul(const SchurFunction& f, const SchurFunction& g) {
    require_compatible(f, g, "cocycle_mul");
    std::vector<RingValue> table;
    table.reserve(f.table().size());
    for (size_t i = 0; i < f.table().size(); ++i) table.push_back(ring_mul(f.table()[i], g.table()[i]));
    return SchurFunction(f.group(), f.desc(), std::move(table));
}

SchurFunction cocycle_inverse(const SchurFunction& f) {
    std::vector<RingValue> table;
    table.reserve(f.table().size());
    for (const auto& v : f.table()) table.push_back(ring_star(v));
    return SchurFunction(f.group(), f.desc(), std::move(table));
}

SchurFunction coboundary(const Lambda& lambda) {
    const GroupTable& g = *lambda.group;
    const int n = g.order();
    if (static_cast<int>(lambda.values.size()) != n) throw DomainError("lambda has wrong length");
    std::vector<RingValue> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            table.push_back(ring_mul(ring_mul(lambda.values[s], lambda.values[t]), ring_star(lambda.values[g.mul(s, t)])));
    return SchurFunction(lambda.group, lambda.desc, std::move(table));
}

Lambda lambda_mul(const Lambda& a, const Lambda& b) {
    Lambda out{a.group, a.desc, {}};
    for (size_t i = 0; i < a.values.size(); ++i) out.values.push_back(ring_mul(a.values[i], b.values[i]));
    return out;
}

Lambda lambda_hat(const Lambda& a) {
    Lambda out{a.group, a.desc, {}};
    for (int t = 0; t < a.group->order(); ++t) out.values.push_back(a.values[a.group->inv(t)]);
    return out;
}

bool cocycles_equal(const SchurFunction& f, const SchurFunction& g, double tol) {
    if (f.order() != g.order() || !same_ring(f.desc(), g.desc())) return false;
    for (size_t i = 0; i < f.table().size(); ++i)
        if (ring_distance(f.table()[i], g.table()[i]) > tol) return false;
    return true;
}

RingValue cyclic_power_value(const SchurFunction& f, int t, long long m, long long n, double tol) {
    const GroupTable& g = f.G();
    if (m < 0) {
        const long long ord = g.element_order(t);
        m = ((m % ord) + ord) % ord;
    }
    RingValue first = ring_unit(f.desc());
    for (long long j = 0; j < m; ++j) first = ring_mul(first, f(g.power(t, n + j), t));
    RingValue second = ring_unit(f.desc());
    for (long long k = 1; k < m; ++k) second = ring_mul(second, ring_star(f(g.power(t, k), t)));
    RingValue v = ring_mul(first, second);
    const RingValue& table = f(g.power(t, m), g.power(t, n));
    if (ring_distance(v, table) > tol)
        throw DomainError("cyclic power formula disagrees with the table: invalid cocycle");
    return v;
}

ZWindow z_window_from(int N, const DescPtr& d, const std::function<RingValue(int, int)>& f) {
    ZWindow w{N, d, {}};
    w.values.reserve(static_cast<size_t>(2 * N + 1) * (2 * N + 1));
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n)
            w.values.push_back(std::abs(m + n) <= N ? f(m, n) : ring_unit(d));
    return w;
}

ZWindow z_coboundary_window(const ZLambda& lambda, const DescPtr& d) {
    return z_window_from(lambda.N, d, [&](int m, int n) {
        return ring_mul(ring_mul(lambda.at(m), lambda.at(n)), ring_star(lambda.at(m + n)));
    });
}

ZLambda z_coboundary_witness(const ZWindow& f) {
    if (f.N < 2) throw DomainError("window too small: need N >= 2");
    const int N = f.N;
    ZLambda lam{N, std::vector<RingValue>(2 * N + 1, ring_unit(f.desc))};
    for (int n = 2; n <= N; ++n) lam.values[n + N] = ring_mul(lam.at(n - 1), ring_star(f.at(n - 1, 1)));
    for (int n = -1; n >= -N; --n) lam.values[n + N] = ring_mul(lam.at(n + 1), f.at(n, 1));
    return lam;
}

double z_window_residual(const ZWindow& f, const ZLambda& lambda) {
    double worst = 0.0;
    for (int m = -f.N; m <= f.N; ++m)
        for (int n = -f.N; n <= f.N; ++n) {
            if (std::abs(m + n) > f.N) continue;
            const RingValue d = ring_mul(ring_mul(lambda.at(m), lambda.at(n)), ring_star(lambda.at(m + n)));
            worst = std::max(worst, ring_distance(d, f.at(m, n)));
        }
    return worst;
}

SchurFunction make_f_alpha(int n, const std::vector<RingValue>& alpha, const DescPtr& d, double tol) {
    if (n < 1) throw DomainError("f_alpha needs n >= 1");
    if (static_cast<int>(alpha.size()) != n - 1)
        throw DomainError("f_alpha needs n-1 parameters, got " + std::to_string(alpha.size()));
    for (const auto& a : alpha) {
        if (!same_ring(a.desc(), d)) throw DomainError("f_alpha parameter has wrong ring");
        if (!is_unitary(a, tol)) throw DomainError("f_alpha parameter is not unitary: " + format_value(a));
        if (!is_central(a, tol)) throw DomainError("f_alpha parameter is not central: " + format_value(a));
    }
    // alpha_j for j in 1..n, alpha_n = 1, indices taken mod n.
    auto al = [&](int j) -> RingValue {
        const int r = ((j - 1) % n + n) % n + 1;
        return r == n ? ring_unit(d) : alpha[r - 1];
    };
    auto G = make_cyclic(n);
    std::vector<RingValue> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int p0 = 0; p0 < n; ++p0)
        for (int q0 = 0; q0 < n; ++q0) {
            const int p = p0 == 0 ? n : p0, q = q0 == 0 ? n : q0;
            RingValue v = ring_unit(d);
            for (int j = p; j <= p + q - 1; ++j) v = ring_mul(v, al(j));
            for (int k = 1; k <= q - 1; ++k) v = ring_mul(v, ring_star(al(k)));
            table.push_back(std::move(v));
        }
    return SchurFunction(G, d, std::move(table));
}

bool is_unimodular_monomial(const RingValue& u, double tol) {
    if (u.kind() != RingKind::Laurent) return false;
    if (u.terms().size() != 1) return false;
    return std::abs(std::abs(u.terms().begin()->second) - 1.0) <= tol;
}

int winding(const RingValue& u, int var) {
    if (!is_unimodular_monomial(u)) throw DomainError("winding needs a unimodular Laurent monomial, got " + format_value(u));
    const Exponent& e = u.terms().begin()->first;
    if (var < 0 || var >= static_cast<int>(e.size())) throw DomainError("winding variable out of range");
    return e[var];
}

std::optional<RingValue> nth_root(const RingValue& u, int n, double tol) {
    if (n < 1) throw DomainError("root order must be positive");
    const DescPtr& d = u.desc();
    switch (u.kind()) {
        case RingKind::ComplexScalar: return complex_value(principal_root(u.scalar(), n));
        case RingKind::RealScalar: {
            auto r = real_sign_root(u.scalar().real(), n, tol);
            if (!r) return std::nullopt;
            return real_value(*r);
        }
        case RingKind::Laurent: {
            if (!is_unimodular_monomial(u, tol))
                throw DomainError("Laurent unitary is not a unimodular monomial: " + format_value(u));
            const auto& [e, c] = *u.terms().begin();
            Exponent half(e.size());
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] % n != 0) return std::nullopt;
                half[i] = e[i] / n;
            }
            if (d->is_real()) {
                auto r = real_sign_root(c.real(), n, tol);
                if (!r) return std::nullopt;
                return laurent_monomial(d, half, *r);
            }
            return laurent_monomial(d, half, principal_root(c, n));
        }
        case RingKind::Matrix:
        case RingKind::Quaternion: {
            const cplx c = central_scalar(u, tol);
            if (d->is_real()) {
                auto r = real_sign_root(c.real(), n, tol);
                if (!r) return std::nullopt;
                return ring_central(d, *r);
            }
            return ring_central(d, principal_root(c, n));
        }
        case RingKind::Product: {
            std::vector<RingValue> parts;
            for (const auto& p : u.parts()) {
                auto r = nth_root(p, n, tol);
                if (!r) return std::nullopt;
                parts.push_back(*r);
            }
            return product_value(d, std::move(parts));
        }
    }
    return std::nullopt;
}

std::optional<Lambda> equivalent_cyclic(const std::vector<RingValue>& alpha, const std::vector<RingValue>& beta,
                                        const DescPtr& d, double tol) {
    if (alpha.size() != beta.size()) throw DomainError("parameter vectors differ in length");
    const int n = static_cast<int>(alpha.size()) + 1;
    std::vector<RingValue> ratio;
    for (size_t j = 0; j < alpha.size(); ++j) ratio.push_back(ring_mul(alpha[j], ring_star(beta[j])));
    auto gamma = nth_root(product_of(d, ratio), n, tol);
    if (!gamma) return std::nullopt;
    Lambda lam{make_cyclic(n), d, std::vector<RingValue>(n, ring_unit(d))};
    RingValue power = ring_unit(d), corr = ring_unit(d);
    for (int p = 1; p < n; ++p) {
        power = ring_mul(power, *gamma);
        if (p >= 2) corr = ring_mul(corr, ring_star(ratio[p - 2]));
        lam.values[p] = ring_mul(power, corr);
    }
    return lam;
}

SchurFunction tensor_cocycle(const SchurFunction& f, const SchurFunction& g) {
    const DescPtr d = tensor_descriptor(f.desc(), g.desc());
    auto G = direct_product(f.G(), g.G());
    const int m = g.order(), n = G->order();
    std::vector<RingValue> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table.push_back(ring_tensor(f(x / m, y / m), g(x % m, y % m), d));
    return SchurFunction(G, d, std::move(table));
}

SchurFunction amplify(const SchurFunction& f, int k) {
    const DescPtr mk = desc::matrix(k, f.desc()->is_real() ? Field::Real : Field::Complex);
    const DescPtr d = tensor_descriptor(f.desc(), mk);
    const RingValue I = ring_unit(mk);
    std::vector<RingValue> table;
    table.reserve(f.table().size());
    for (const auto& v : f.table()) table.push_back(ring_tensor(v, I, d));
    return SchurFunction(f.group(), d, std::move(table));
}

SchurFunction klein_table(const RingValue& al, const RingValue& be, const RingValue& ga, const RingValue& ep) {
    const DescPtr& d = al.desc();
    for (const RingValue* v : {&be, &ga, &ep})
        if (!same_ring(v->desc(), d)) throw DomainError("Klein parameters must share one ring");
    if (!ring_approx_equal(ring_mul(ep, ep), ring_unit(d), kExactTol))
        throw DomainError("Klein parameter eps must satisfy eps^2 = 1");
    auto Z2 = make_cyclic(2);
    auto G = direct_product(*Z2, *Z2);
    SchurFunction f = trivial_cocycle(G, d);
    using K = KleinLabels;
    f.set(K::a, K::a, be * ga);
    f.set(K::a, K::b, ga);
    f.set(K::a, K::c, be);
    f.set(K::b, K::a, ep * ga);
    f.set(K::b, K::b, ep * al * ga);
    f.set(K::b, K::c, al);
    f.set(K::c, K::a, ep * be);
    f.set(K::c, K::b, ep * al);
    f.set(K::c, K::c, al * be);
    return f;
}

}  // namespace twalg
