#include "twalg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace twalg {

namespace {

bool exactly_zero(const RingValue& a) {
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return a.scalar() == cplx(0.0, 0.0);
        case RingKind::Laurent: return a.terms().empty();
        case RingKind::Matrix: return a.matrix().isZero(0.0);
        case RingKind::Quaternion: {
            const Quat& q = a.quat();
            return q[0] == 0.0 && q[1] == 0.0 && q[2] == 0.0 && q[3] == 0.0;
        }
        case RingKind::Product:
            return std::all_of(a.parts().begin(), a.parts().end(), [](const RingValue& p) { return exactly_zero(p); });
    }
    return false;
}

void require_same_algebra(const AlgebraElement& x, const AlgebraElement& y, const char* op) {
    if (x.cocycle() != y.cocycle())
        throw DomainError(std::string(op) + ": elements belong to different twisted algebras");
}

double spectral_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

}  // namespace

AlgebraElement::AlgebraElement(CocyclePtr f, std::vector<RingValue> coeffs) : f_(std::move(f)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != f_->order()) throw DomainError("coefficient family has wrong length");
    for (const auto& c : coeffs_)
        if (!same_ring(c.desc(), f_->desc())) throw DomainError("coefficient has wrong ring: " + c.desc()->name());
}

EMatrix ematrix_zero(const DescPtr& d, int rows, int cols) {
    return EMatrix{rows, cols, std::vector<RingValue>(static_cast<size_t>(rows) * cols, ring_zero(d))};
}

EMatrix ematrix_mul(const EMatrix& a, const EMatrix& b) {
    if (a.cols != b.rows) throw DomainError("matrix shapes do not match");
    const DescPtr& d = a.data.front().desc();
    EMatrix c = ematrix_zero(d, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (exactly_zero(a(i, k))) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (exactly_zero(b(k, j))) continue;
                c(i, j) = ring_add(c(i, j), ring_mul(a(i, k), b(k, j)));
            }
        }
    return c;
}

EMatrix ematrix_adjoint(const EMatrix& a) {
    EMatrix c{a.cols, a.rows, {}};
    c.data.reserve(a.data.size());
    for (int i = 0; i < a.cols; ++i)
        for (int j = 0; j < a.rows; ++j) c.data.push_back(ring_star(a(j, i)));
    return c;
}

double ematrix_distance(const EMatrix& a, const EMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw DomainError("matrix shapes do not match");
    double m = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) m = std::max(m, ring_distance(a.data[i], b.data[i]));
    return m;
}

Eigen::MatrixXcd ematrix_flatten(const EMatrix& a, const std::vector<cplx>* point) {
    const int b = complex_block_size(a.data.front().desc());
    Eigen::MatrixXcd m(a.rows * b, a.cols * b);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) m.block(i * b, j * b, b, b) = to_complex_matrix(a(i, j), point);
    return m;
}

AlgebraElement alg_zero(const CocyclePtr& f) {
    return AlgebraElement(f, std::vector<RingValue>(f->order(), ring_zero(f->desc())));
}

AlgebraElement generator(const CocyclePtr& f, int t) {
    if (t < 0 || t >= f->order()) throw DomainError("generator index out of range");
    std::vector<RingValue> c(f->order(), ring_zero(f->desc()));
    c[t] = ring_unit(f->desc());
    return AlgebraElement(f, std::move(c));
}

AlgebraElement embed_scalar(const CocyclePtr& f, const RingValue& x, bool require_central) {
    if (!same_ring(x.desc(), f->desc())) throw DomainError("embedded scalar has wrong ring");
    if (require_central && !is_central(x, kExactTol))
        throw DomainError("embedded scalar is not central: " + format_value(x));
    std::vector<RingValue> c(f->order(), ring_zero(f->desc()));
    c[0] = x;
    return AlgebraElement(f, std::move(c));
}

AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_algebra(x, y, "add");
    std::vector<RingValue> c;
    c.reserve(x.size());
    for (int t = 0; t < x.size(); ++t) c.push_back(ring_add(x[t], y[t]));
    return AlgebraElement(x.cocycle(), std::move(c));
}

AlgebraElement alg_sub(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_algebra(x, y, "sub");
    std::vector<RingValue> c;
    c.reserve(x.size());
    for (int t = 0; t < x.size(); ++t) c.push_back(ring_sub(x[t], y[t]));
    return AlgebraElement(x.cocycle(), std::move(c));
}

AlgebraElement alg_scale(const AlgebraElement& x, cplx s) {
    std::vector<RingValue> c;
    c.reserve(x.size());
    for (const auto& v : x.coeffs()) c.push_back(ring_scale(v, s));
    return AlgebraElement(x.cocycle(), std::move(c));
}

AlgebraElement alg_left(const RingValue& a, const AlgebraElement& x) {
    std::vector<RingValue> c;
    c.reserve(x.size());
    for (const auto& v : x.coeffs()) c.push_back(ring_mul(a, v));
    return AlgebraElement(x.cocycle(), std::move(c));
}

AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_algebra(x, y, "mul");
    const SchurFunction& f = x.f();
    const GroupTable& g = f.G();
    const int n = g.order();
    std::vector<RingValue> out(n, ring_zero(f.desc()));
    std::vector<int> ysupp;
    for (int u = 0; u < n; ++u)
        if (!exactly_zero(y[u])) ysupp.push_back(u);
    for (int s = 0; s < n; ++s) {
        if (exactly_zero(x[s])) continue;
        for (int u : ysupp) {
            const int t = g.mul(s, u);
            out[t] = ring_add(out[t], ring_mul(f(s, u), ring_mul(x[s], y[u])));
        }
    }
    return AlgebraElement(x.cocycle(), std::move(out));
}

AlgebraElement alg_star(const AlgebraElement& x) {
    const SchurFunction& f = x.f();
    std::vector<RingValue> c;
    c.reserve(x.size());
    for (int t = 0; t < x.size(); ++t) c.push_back(ring_mul(tilde(f, t), ring_star(x[f.G().inv(t)])));
    return AlgebraElement(x.cocycle(), std::move(c));
}

double alg_distance(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_algebra(x, y, "distance");
    double m = 0.0;
    for (int t = 0; t < x.size(); ++t) m = std::max(m, ring_distance(x[t], y[t]));
    return m;
}

RingValue coefficient(const AlgebraElement& x, int s, int t) {
    const GroupTable& g = x.f().G();
    const int r = g.mul(s, g.inv(t));
    return ring_mul(x.f()(r, t), x[r]);
}

EMatrix regular_matrix(const AlgebraElement& x) {
    const int n = x.size();
    EMatrix m{n, n, {}};
    m.data.reserve(static_cast<size_t>(n) * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) m.data.push_back(coefficient(x, s, t));
    return m;
}

Eigen::MatrixXcd regular_matrix_flat(const AlgebraElement& x, const std::vector<cplx>* point) {
    return ematrix_flatten(regular_matrix(x), point);
}

std::string regular_matrix_csv(const AlgebraElement& x, const std::vector<cplx>* point) {
    const Eigen::MatrixXcd m = regular_matrix_flat(x, point);
    std::string s;
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", j ? "," : "", m(i, j).real(), m(i, j).imag());
            s += buf;
        }
        s += '\n';
    }
    return s;
}

double alg_norm(const AlgebraElement& x, int grid) {
    const DescPtr& d = x.f().desc();
    if (d->kind == RingKind::Laurent) {
        const EMatrix m = regular_matrix(x);
        double best = 0.0;
        for (const auto& p : torus_grid(d->m, grid)) best = std::max(best, spectral_norm(ematrix_flatten(m, &p)));
        return best;
    }
    if (!finite_dimensional(d)) throw DomainError("norm is not available for " + d->name());
    return spectral_norm(regular_matrix_flat(x));
}

double coefficient_norm(const AlgebraElement& x, int grid) {
    RingValue s = ring_zero(x.f().desc());
    for (const auto& v : x.coeffs()) s = ring_add(s, ring_mul(ring_star(v), v));
    return std::sqrt(ring_norm(s, grid));
}

RingValue coefficient_positivity(const AlgebraElement& x, double tol) {
    const AlgebraElement p = alg_mul(alg_star(x), x);
    RingValue s = ring_zero(x.f().desc());
    for (const auto& v : x.coeffs()) s = ring_add(s, ring_mul(ring_star(v), v));
    if (ring_distance(p[0], s) > tol * std::max(1.0, ring_size(s)))
        throw std::logic_error("(X*X)_1 differs from sum of X_t* X_t");
    return p[0];
}

bool is_projection(const AlgebraElement& x, double tol) {
    return alg_distance(alg_star(x), x) <= tol && alg_distance(alg_mul(x, x), x) <= tol;
}

ProjectionPair projection_pair(const CocyclePtr& f, int t, const RingValue& alpha, double tol) {
    const GroupTable& g = f->G();
    if (g.mul(t, t) != g.identity()) throw DomainError("projection pair needs t^2 = 1");
    if (!is_unitary(alpha, tol) || !is_central(alpha, tol)) throw DomainError("alpha must be a central unitary");
    const AlgebraElement one = generator(f, 0);
    const AlgebraElement av = alg_left(alpha, generator(f, t));
    ProjectionPair pp{alg_scale(alg_add(one, av), 0.5), alg_scale(alg_sub(one, av), 0.5)};
    pp.constraint_residual = ring_distance(ring_mul(alpha, alpha), tilde(*f, t));
    pp.constraint_holds = pp.constraint_residual <= tol;
    pp.plus_is_projection = is_projection(pp.plus, tol);
    pp.minus_is_projection = is_projection(pp.minus, tol);
    return pp;
}

CenterReport center_check(const AlgebraElement& x, double tol) {
    const SchurFunction& f = x.f();
    const GroupTable& g = f.G();
    const int n = g.order();
    CenterReport r;
    r.criterion = std::all_of(x.coeffs().begin(), x.coeffs().end(), [tol](const RingValue& v) { return is_central(v, tol); });
    for (int s = 0; s < n && r.criterion; ++s)
        for (int t = 0; t < n; ++t) {
            const int c = g.mul(g.mul(g.inv(s), t), s);
            const RingValue rhs = ring_mul(ring_mul(ring_star(f(s, c)), f(t, s)), x[t]);
            if (ring_distance(x[c], rhs) > tol) {
                r.criterion = false;
                break;
            }
        }
    r.commutation = true;
    for (int s = 0; s < n && r.commutation; ++s) {
        const AlgebraElement v = generator(x.cocycle(), s);
        if (alg_distance(alg_mul(x, v), alg_mul(v, x)) > tol) r.commutation = false;
    }
    const int window = f.desc()->kind == RingKind::Laurent ? 1 : 0;
    for (const auto& y : real_basis(f.desc(), window)) {
        if (!r.commutation) break;
        const AlgebraElement e = embed_scalar(x.cocycle(), y, false);
        if (alg_distance(alg_mul(x, e), alg_mul(e, x)) > tol) r.commutation = false;
    }
    return r;
}

RingValue trace_functional(const AlgebraElement& x) { return x[0]; }

AlgebraElement restrict_to_subgroup(const AlgebraElement& x, const std::vector<int>& subgroup, std::vector<int>* index,
                                    double tol) {
    const SchurFunction& f = x.f();
    std::vector<int> idx;
    auto H = make_subgroup(f.G(), subgroup, idx);
    std::vector<bool> inside(f.order(), false);
    for (int e : idx) inside[e] = true;
    for (int t = 0; t < f.order(); ++t)
        if (!inside[t] && !ring_is_zero(x[t], tol))
            throw DomainError("element has a nonzero coefficient outside the subgroup at " + f.G().label(t));
    const int m = H->order();
    std::vector<RingValue> table;
    table.reserve(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table.push_back(f(idx[i], idx[j]));
    auto g = std::make_shared<SchurFunction>(H, f.desc(), std::move(table));
    std::vector<RingValue> c;
    for (int i = 0; i < m; ++i) c.push_back(x[idx[i]]);
    if (index) *index = idx;
    return AlgebraElement(g, std::move(c));
}

AlgebraElement extend_from_subgroup(const AlgebraElement& y, const CocyclePtr& ambient, const std::vector<int>& index) {
    std::vector<RingValue> c(ambient->order(), ring_zero(ambient->desc()));
    for (int i = 0; i < y.size(); ++i) c[index[i]] = y[i];
    return AlgebraElement(ambient, std::move(c));
}

}  // namespace twalg
