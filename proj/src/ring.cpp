#include "twalg/ring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace twalg {

namespace {

constexpr double kRealSlack = 1e-12;

[[noreturn]] void mismatch(const RingValue& a, const RingValue& b, const char* op) {
    throw DomainError(std::string("descriptor mismatch in ") + op + ": " + a.desc()->name() +
                      " vs " + b.desc()->name());
}

void require_same(const RingValue& a, const RingValue& b, const char* op) {
    if (!same_ring(a.desc(), b.desc())) mismatch(a, b, op);
}

cplx field_scalar(const DescPtr& d, cplx c) {
    if (d->is_real()) {
        if (std::abs(c.imag()) > kRealSlack)
            throw DomainError("non-real scalar for real ring " + d->name());
        return {c.real(), 0.0};
    }
    return c;
}

void prune(LaurentTerms& t) {
    for (auto it = t.begin(); it != t.end();)
        it = (it->second == cplx(0.0, 0.0)) ? t.erase(it) : std::next(it);
}

Quat quat_mul(const Quat& x, const Quat& y) {
    return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
            x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
            x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

double quat_abs(const Quat& q) {
    return std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
}

double spectral_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

template <class F>
std::vector<RingValue> map_parts(const RingValue& a, F&& f) {
    std::vector<RingValue> out;
    out.reserve(a.parts().size());
    for (const auto& p : a.parts()) out.push_back(f(p));
    return out;
}

template <class F>
std::vector<RingValue> zip_parts(const RingValue& a, const RingValue& b, F&& f) {
    std::vector<RingValue> out;
    out.reserve(a.parts().size());
    for (size_t i = 0; i < a.parts().size(); ++i) out.push_back(f(a.parts()[i], b.parts()[i]));
    return out;
}

DescPtr make_desc(RingKind kind, int m, int k, Field field, std::vector<DescPtr> parts = {}) {
    auto d = std::make_shared<RingDescriptor>();
    d->kind = kind;
    d->m = m;
    d->k = k;
    d->field = field;
    d->parts = std::move(parts);
    return d;
}

}  // namespace

bool RingDescriptor::is_real() const {
    switch (kind) {
        case RingKind::ComplexScalar: return false;
        case RingKind::RealScalar:
        case RingKind::Quaternion: return true;
        case RingKind::Laurent:
        case RingKind::Matrix: return field == Field::Real;
        case RingKind::Product:
            return std::all_of(parts.begin(), parts.end(), [](const DescPtr& p) { return p->is_real(); });
    }
    return false;
}

std::string RingDescriptor::name() const {
    const char* f = field == Field::Real ? "real" : "complex";
    switch (kind) {
        case RingKind::ComplexScalar: return "complex";
        case RingKind::RealScalar: return "real";
        case RingKind::Laurent: return "laurent(m=" + std::to_string(m) + "," + f + ")";
        case RingKind::Matrix: return "matrix(k=" + std::to_string(k) + "," + f + ")";
        case RingKind::Quaternion: return "quaternion";
        case RingKind::Product: {
            std::string s = "product[";
            for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i]->name();
            return s + "]";
        }
    }
    return "?";
}

bool same_ring(const DescPtr& a, const DescPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar:
        case RingKind::Quaternion: return true;
        case RingKind::Laurent: return a->m == b->m && a->field == b->field;
        case RingKind::Matrix: return a->k == b->k && a->field == b->field;
        case RingKind::Product:
            if (a->parts.size() != b->parts.size()) return false;
            for (size_t i = 0; i < a->parts.size(); ++i)
                if (!same_ring(a->parts[i], b->parts[i])) return false;
            return true;
    }
    return false;
}

namespace desc {
DescPtr complex_scalar() {
    static const DescPtr d = make_desc(RingKind::ComplexScalar, 0, 0, Field::Complex);
    return d;
}
DescPtr real_scalar() {
    static const DescPtr d = make_desc(RingKind::RealScalar, 0, 0, Field::Real);
    return d;
}
DescPtr laurent(int m, Field field) {
    if (m < 1) throw DomainError("Laurent ring needs m >= 1");
    return make_desc(RingKind::Laurent, m, 0, field);
}
DescPtr matrix(int k, Field field) {
    if (k < 1) throw DomainError("matrix ring needs k >= 1");
    return make_desc(RingKind::Matrix, 0, k, field);
}
DescPtr quaternion() {
    static const DescPtr d = make_desc(RingKind::Quaternion, 0, 0, Field::Real);
    return d;
}
DescPtr product(std::vector<DescPtr> parts) {
    if (parts.empty()) throw DomainError("product ring needs at least one factor");
    return make_desc(RingKind::Product, 0, 0, Field::Complex, std::move(parts));
}
}  // namespace desc

RingValue::RingValue(DescPtr d, Payload p) : desc_(std::move(d)), data_(std::move(p)) {}

RingValue ring_central(const DescPtr& d, cplx c) {
    c = field_scalar(d, c);
    switch (d->kind) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return RingValue(d, c);
        case RingKind::Laurent: {
            LaurentTerms t;
            if (c != cplx(0.0, 0.0)) t[Exponent(d->m, 0)] = c;
            return RingValue(d, std::move(t));
        }
        case RingKind::Matrix: {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d->k, d->k) * c;
            return RingValue(d, std::move(m));
        }
        case RingKind::Quaternion: return RingValue(d, Quat{c.real(), 0.0, 0.0, 0.0});
        case RingKind::Product: {
            std::vector<RingValue> parts;
            for (const auto& p : d->parts) parts.push_back(ring_central(p, c));
            return RingValue(d, std::move(parts));
        }
    }
    throw DomainError("unknown ring kind");
}

RingValue ring_zero(const DescPtr& d) { return ring_central(d, 0.0); }
RingValue ring_unit(const DescPtr& d) { return ring_central(d, 1.0); }
RingValue complex_value(cplx c) { return RingValue(desc::complex_scalar(), c); }
RingValue real_value(double x) { return RingValue(desc::real_scalar(), cplx(x, 0.0)); }

RingValue laurent_value(const DescPtr& d, LaurentTerms terms) {
    if (d->kind != RingKind::Laurent) throw DomainError("laurent_value needs a Laurent descriptor");
    for (auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != d->m) throw DomainError("Laurent exponent has wrong length");
        c = field_scalar(d, c);
    }
    prune(terms);
    return RingValue(d, std::move(terms));
}

RingValue laurent_monomial(const DescPtr& d, const Exponent& e, cplx c) {
    LaurentTerms t;
    t[e] = c;
    return laurent_value(d, std::move(t));
}

RingValue matrix_value(const DescPtr& d, Eigen::MatrixXcd m) {
    if (d->kind != RingKind::Matrix || m.rows() != d->k || m.cols() != d->k)
        throw DomainError("matrix value does not match descriptor " + d->name());
    if (d->field == Field::Real) {
        if (m.imag().cwiseAbs().maxCoeff() > kRealSlack)
            throw DomainError("non-real entry in real matrix");
        m = m.real().cast<cplx>();
    }
    return RingValue(d, std::move(m));
}

RingValue quaternion_value(double a, double b, double c, double d) {
    return RingValue(desc::quaternion(), Quat{a, b, c, d});
}

RingValue product_value(const DescPtr& d, std::vector<RingValue> parts) {
    if (d->kind != RingKind::Product || parts.size() != d->parts.size())
        throw DomainError("product value does not match descriptor");
    for (size_t i = 0; i < parts.size(); ++i)
        if (!same_ring(parts[i].desc(), d->parts[i])) throw DomainError("product component mismatch");
    return RingValue(d, std::move(parts));
}

RingValue ring_add(const RingValue& a, const RingValue& b) {
    require_same(a, b, "add");
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return RingValue(a.desc(), a.scalar() + b.scalar());
        case RingKind::Laurent: {
            LaurentTerms t = a.terms();
            for (const auto& [e, c] : b.terms()) t[e] += c;
            prune(t);
            return RingValue(a.desc(), std::move(t));
        }
        case RingKind::Matrix: return RingValue(a.desc(), Eigen::MatrixXcd(a.matrix() + b.matrix()));
        case RingKind::Quaternion: {
            Quat q;
            for (int i = 0; i < 4; ++i) q[i] = a.quat()[i] + b.quat()[i];
            return RingValue(a.desc(), q);
        }
        case RingKind::Product: return RingValue(a.desc(), zip_parts(a, b, ring_add));
    }
    throw DomainError("unknown ring kind");
}

RingValue ring_neg(const RingValue& a) { return ring_scale(a, -1.0); }

RingValue ring_sub(const RingValue& a, const RingValue& b) { return ring_add(a, ring_neg(b)); }

RingValue ring_mul(const RingValue& a, const RingValue& b) {
    require_same(a, b, "mul");
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return RingValue(a.desc(), a.scalar() * b.scalar());
        case RingKind::Laurent: {
            LaurentTerms t;
            Exponent e(a.desc()->m);
            for (const auto& [ea, ca] : a.terms())
                for (const auto& [eb, cb] : b.terms()) {
                    for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                    t[e] += ca * cb;
                }
            prune(t);
            return RingValue(a.desc(), std::move(t));
        }
        case RingKind::Matrix: return RingValue(a.desc(), Eigen::MatrixXcd(a.matrix() * b.matrix()));
        case RingKind::Quaternion: return RingValue(a.desc(), quat_mul(a.quat(), b.quat()));
        case RingKind::Product: return RingValue(a.desc(), zip_parts(a, b, ring_mul));
    }
    throw DomainError("unknown ring kind");
}

RingValue ring_star(const RingValue& a) {
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return RingValue(a.desc(), std::conj(a.scalar()));
        case RingKind::Laurent: {
            LaurentTerms t;
            for (const auto& [e, c] : a.terms()) {
                Exponent ne(e.size());
                for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
                t[ne] = std::conj(c);
            }
            return RingValue(a.desc(), std::move(t));
        }
        case RingKind::Matrix: return RingValue(a.desc(), Eigen::MatrixXcd(a.matrix().adjoint()));
        case RingKind::Quaternion: {
            const Quat& q = a.quat();
            return RingValue(a.desc(), Quat{q[0], -q[1], -q[2], -q[3]});
        }
        case RingKind::Product: return RingValue(a.desc(), map_parts(a, ring_star));
    }
    throw DomainError("unknown ring kind");
}

RingValue ring_scale(const RingValue& a, cplx c) {
    c = field_scalar(a.desc(), c);
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return RingValue(a.desc(), a.scalar() * c);
        case RingKind::Laurent: {
            LaurentTerms t = a.terms();
            for (auto& kv : t) kv.second *= c;
            prune(t);
            return RingValue(a.desc(), std::move(t));
        }
        case RingKind::Matrix: return RingValue(a.desc(), Eigen::MatrixXcd(a.matrix() * c));
        case RingKind::Quaternion: {
            Quat q = a.quat();
            for (auto& x : q) x *= c.real();
            return RingValue(a.desc(), q);
        }
        case RingKind::Product:
            return RingValue(a.desc(), map_parts(a, [c](const RingValue& p) { return ring_scale(p, c); }));
    }
    throw DomainError("unknown ring kind");
}

double ring_distance(const RingValue& a, const RingValue& b) {
    require_same(a, b, "distance");
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return std::abs(a.scalar() - b.scalar());
        case RingKind::Laurent: {
            double s = 0.0;
            auto ia = a.terms().begin(), ib = b.terms().begin();
            const auto ea = a.terms().end(), eb = b.terms().end();
            while (ia != ea || ib != eb) {
                if (ib == eb || (ia != ea && ia->first < ib->first)) {
                    s += std::abs(ia->second);
                    ++ia;
                } else if (ia == ea || ib->first < ia->first) {
                    s += std::abs(ib->second);
                    ++ib;
                } else {
                    s += std::abs(ia->second - ib->second);
                    ++ia;
                    ++ib;
                }
            }
            return s;
        }
        case RingKind::Matrix: return (a.matrix() - b.matrix()).norm();
        case RingKind::Quaternion: {
            Quat d;
            for (int i = 0; i < 4; ++i) d[i] = a.quat()[i] - b.quat()[i];
            return quat_abs(d);
        }
        case RingKind::Product: {
            double m = 0.0;
            for (size_t i = 0; i < a.parts().size(); ++i)
                m = std::max(m, ring_distance(a.parts()[i], b.parts()[i]));
            return m;
        }
    }
    return 0.0;
}

double ring_size(const RingValue& a) { return ring_distance(a, ring_zero(a.desc())); }

bool ring_approx_equal(const RingValue& a, const RingValue& b, double tol) {
    return ring_distance(a, b) <= tol;
}

bool ring_is_zero(const RingValue& a, double tol) { return ring_size(a) <= tol; }

std::vector<std::vector<cplx>> torus_grid(int m, int grid) {
    if (grid < 1) throw DomainError("grid must be positive");
    std::vector<cplx> roots(grid);
    for (int j = 0; j < grid; ++j) roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / grid);
    std::vector<std::vector<cplx>> pts;
    std::vector<int> idx(m, 0);
    while (true) {
        std::vector<cplx> p(m);
        for (int i = 0; i < m; ++i) p[i] = roots[idx[i]];
        pts.push_back(std::move(p));
        int i = 0;
        while (i < m && ++idx[i] == grid) idx[i++] = 0;
        if (i == m) break;
    }
    return pts;
}

cplx evaluate_laurent(const RingValue& a, const std::vector<cplx>& point) {
    if (a.kind() != RingKind::Laurent) throw DomainError("evaluate_laurent needs a Laurent value");
    if (static_cast<int>(point.size()) != a.desc()->m) throw DomainError("torus point has wrong dimension");
    cplx s = 0.0;
    for (const auto& [e, c] : a.terms()) {
        cplx v = c;
        for (size_t i = 0; i < e.size(); ++i) v *= std::pow(point[i], e[i]);
        s += v;
    }
    return s;
}

double ring_norm(const RingValue& a, int grid) {
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return std::abs(a.scalar());
        case RingKind::Laurent: {
            double m = 0.0;
            for (const auto& p : torus_grid(a.desc()->m, grid)) m = std::max(m, std::abs(evaluate_laurent(a, p)));
            return m;
        }
        case RingKind::Matrix: return spectral_norm(a.matrix());
        case RingKind::Quaternion: return quat_abs(a.quat());
        case RingKind::Product: {
            double m = 0.0;
            for (const auto& p : a.parts()) m = std::max(m, ring_norm(p, grid));
            return m;
        }
    }
    return 0.0;
}

bool is_unitary(const RingValue& a, double tol, int grid) {
    const RingValue one = ring_unit(a.desc());
    const RingValue as = ring_star(a);
    return ring_norm(ring_mul(a, as) - one, grid) <= tol && ring_norm(ring_mul(as, a) - one, grid) <= tol;
}

bool is_central(const RingValue& a, double tol) {
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar:
        case RingKind::Laurent: return true;
        case RingKind::Matrix: {
            const auto& m = a.matrix();
            const cplx c = m.trace() / static_cast<double>(m.rows());
            return (m - Eigen::MatrixXcd::Identity(m.rows(), m.cols()) * c).norm() <= tol;
        }
        case RingKind::Quaternion: {
            const Quat& q = a.quat();
            return std::sqrt(q[1] * q[1] + q[2] * q[2] + q[3] * q[3]) <= tol;
        }
        case RingKind::Product:
            return std::all_of(a.parts().begin(), a.parts().end(),
                               [tol](const RingValue& p) { return is_central(p, tol); });
    }
    return false;
}

cplx central_scalar(const RingValue& a, double tol) {
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return a.scalar();
        case RingKind::Laurent: {
            cplx c = 0.0;
            for (const auto& [e, v] : a.terms()) {
                if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; }))
                    throw DomainError("Laurent value is not a constant");
                c = v;
            }
            return c;
        }
        case RingKind::Matrix:
            if (!is_central(a, tol)) throw DomainError("matrix is not a scalar multiple of the identity");
            return a.matrix().trace() / static_cast<double>(a.matrix().rows());
        case RingKind::Quaternion:
            if (!is_central(a, tol)) throw DomainError("quaternion is not real");
            return a.quat()[0];
        case RingKind::Product: {
            const cplx c = central_scalar(a.parts().front(), tol);
            for (const auto& p : a.parts())
                if (std::abs(central_scalar(p, tol) - c) > tol)
                    throw DomainError("product value is not a common scalar");
            return c;
        }
    }
    return 0.0;
}

int complex_block_size(const DescPtr& d) {
    switch (d->kind) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar:
        case RingKind::Laurent: return 1;
        case RingKind::Matrix: return d->k;
        case RingKind::Quaternion: return 2;
        case RingKind::Product: {
            int s = 0;
            for (const auto& p : d->parts) s += complex_block_size(p);
            return s;
        }
    }
    return 0;
}

Eigen::MatrixXcd to_complex_matrix(const RingValue& a, const std::vector<cplx>* point) {
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return Eigen::MatrixXcd::Constant(1, 1, a.scalar());
        case RingKind::Laurent:
            if (!point) throw DomainError("Laurent value needs a torus point to flatten");
            return Eigen::MatrixXcd::Constant(1, 1, evaluate_laurent(a, *point));
        case RingKind::Matrix: return a.matrix();
        case RingKind::Quaternion: {
            const Quat& q = a.quat();
            Eigen::MatrixXcd m(2, 2);
            m << cplx(q[0], q[1]), cplx(q[2], q[3]), cplx(-q[2], q[3]), cplx(q[0], -q[1]);
            return m;
        }
        case RingKind::Product: {
            const int n = complex_block_size(a.desc());
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
            int off = 0;
            for (const auto& p : a.parts()) {
                Eigen::MatrixXcd b = to_complex_matrix(p, point);
                m.block(off, off, b.rows(), b.cols()) = b;
                off += static_cast<int>(b.rows());
            }
            return m;
        }
    }
    return {};
}

bool finite_dimensional(const DescPtr& d) {
    if (d->kind == RingKind::Laurent) return false;
    if (d->kind == RingKind::Product)
        return std::all_of(d->parts.begin(), d->parts.end(), [](const DescPtr& p) { return finite_dimensional(p); });
    return true;
}

int real_dim(const DescPtr& d) {
    switch (d->kind) {
        case RingKind::ComplexScalar: return 2;
        case RingKind::RealScalar: return 1;
        case RingKind::Laurent: throw DomainError("Laurent ring is infinite-dimensional");
        case RingKind::Matrix: return d->k * d->k * (d->field == Field::Real ? 1 : 2);
        case RingKind::Quaternion: return 4;
        case RingKind::Product: {
            int s = 0;
            for (const auto& p : d->parts) s += real_dim(p);
            return s;
        }
    }
    return 0;
}

std::vector<RingValue> real_basis(const DescPtr& d, int window) {
    std::vector<RingValue> out;
    const bool cx = !d->is_real();
    switch (d->kind) {
        case RingKind::ComplexScalar:
            out = {complex_value(1.0), complex_value(cplx(0.0, 1.0))};
            break;
        case RingKind::RealScalar: out = {real_value(1.0)}; break;
        case RingKind::Laurent: {
            std::vector<int> e(d->m, -window);
            while (true) {
                out.push_back(laurent_monomial(d, e, 1.0));
                if (cx) out.push_back(laurent_monomial(d, e, cplx(0.0, 1.0)));
                int i = 0;
                while (i < d->m && ++e[i] > window) e[i++] = -window;
                if (i == d->m) break;
            }
            break;
        }
        case RingKind::Matrix:
            for (int i = 0; i < d->k; ++i)
                for (int j = 0; j < d->k; ++j) {
                    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d->k, d->k);
                    m(i, j) = 1.0;
                    out.push_back(matrix_value(d, m));
                    if (cx) {
                        m(i, j) = cplx(0.0, 1.0);
                        out.push_back(matrix_value(d, m));
                    }
                }
            break;
        case RingKind::Quaternion:
            for (int i = 0; i < 4; ++i) {
                Quat q{0, 0, 0, 0};
                q[i] = 1.0;
                out.push_back(RingValue(d, q));
            }
            break;
        case RingKind::Product:
            for (size_t p = 0; p < d->parts.size(); ++p)
                for (auto& b : real_basis(d->parts[p], window)) {
                    std::vector<RingValue> parts;
                    for (size_t q = 0; q < d->parts.size(); ++q)
                        parts.push_back(q == p ? b : ring_zero(d->parts[q]));
                    out.push_back(RingValue(d, std::move(parts)));
                }
            break;
    }
    return out;
}

void flatten_into(const RingValue& a, FlatKey& prefix, std::vector<std::pair<FlatKey, double>>& out) {
    const bool cx = !a.desc()->is_real();
    auto emit = [&](std::initializer_list<int> tail, double v) {
        if (v == 0.0) return;
        FlatKey k = prefix;
        k.insert(k.end(), tail);
        out.emplace_back(std::move(k), v);
    };
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar:
            emit({0}, a.scalar().real());
            if (cx) emit({1}, a.scalar().imag());
            break;
        case RingKind::Laurent:
            for (const auto& [e, c] : a.terms()) {
                for (int part = 0; part < (cx ? 2 : 1); ++part) {
                    const double v = part == 0 ? c.real() : c.imag();
                    if (v == 0.0) continue;
                    FlatKey k = prefix;
                    k.push_back(part);
                    k.insert(k.end(), e.begin(), e.end());
                    out.emplace_back(std::move(k), v);
                }
            }
            break;
        case RingKind::Matrix: {
            const auto& m = a.matrix();
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) {
                    const int idx = i * static_cast<int>(m.cols()) + j;
                    emit({idx, 0}, m(i, j).real());
                    if (cx) emit({idx, 1}, m(i, j).imag());
                }
            break;
        }
        case RingKind::Quaternion:
            for (int i = 0; i < 4; ++i) emit({i}, a.quat()[i]);
            break;
        case RingKind::Product:
            for (size_t p = 0; p < a.parts().size(); ++p) {
                prefix.push_back(static_cast<int>(p));
                flatten_into(a.parts()[p], prefix, out);
                prefix.pop_back();
            }
            break;
    }
}

RingValue promote_to_complex(const RingValue& a) {
    switch (a.kind()) {
        case RingKind::RealScalar: return complex_value(a.scalar());
        case RingKind::ComplexScalar: return a;
        case RingKind::Laurent: return RingValue(desc::laurent(a.desc()->m, Field::Complex), a.terms());
        case RingKind::Matrix: return RingValue(desc::matrix(a.desc()->k, Field::Complex), a.matrix());
        default: throw DomainError("cannot promote " + a.desc()->name() + " to a complex kind");
    }
}

RingValue scalar_to_matrix(const RingValue& a, int k) {
    if (a.kind() != RingKind::ComplexScalar && a.kind() != RingKind::RealScalar)
        throw DomainError("scalar_to_matrix needs a scalar");
    const DescPtr d = desc::matrix(k, a.desc()->is_real() ? Field::Real : Field::Complex);
    return ring_central(d, a.scalar());
}

namespace {
bool is_scalar_kind(const DescPtr& d) {
    return d->kind == RingKind::ComplexScalar || d->kind == RingKind::RealScalar;
}

DescPtr with_field(const DescPtr& d, bool complex) {
    if (!complex || !d->is_real()) return d;
    switch (d->kind) {
        case RingKind::RealScalar: return desc::complex_scalar();
        case RingKind::Laurent: return desc::laurent(d->m, Field::Complex);
        case RingKind::Matrix: return desc::matrix(d->k, Field::Complex);
        default: throw DomainError("no complex form of " + d->name());
    }
}

RingValue retag(const RingValue& a, const DescPtr& d) {
    if (same_ring(a.desc(), d)) return a;
    return RingValue(d, a.payload());
}
}  // namespace

DescPtr tensor_descriptor(const DescPtr& a, const DescPtr& b) {
    const bool cx = !a->is_real() || !b->is_real();
    if (is_scalar_kind(a) && is_scalar_kind(b)) return cx ? desc::complex_scalar() : desc::real_scalar();
    if (is_scalar_kind(a)) return with_field(b, a->kind == RingKind::ComplexScalar);
    if (is_scalar_kind(b)) return with_field(a, b->kind == RingKind::ComplexScalar);
    if (a->kind == RingKind::Matrix && b->kind == RingKind::Matrix)
        return desc::matrix(a->k * b->k, cx ? Field::Complex : Field::Real);
    throw DomainError("unsupported tensor combination " + a->name() + " x " + b->name());
}

RingValue ring_tensor(const RingValue& a, const RingValue& b, const DescPtr& target) {
    if (is_scalar_kind(a.desc()) && is_scalar_kind(b.desc())) return RingValue(target, a.scalar() * b.scalar());
    if (is_scalar_kind(a.desc())) return ring_scale(retag(b, target), a.scalar());
    if (is_scalar_kind(b.desc())) return ring_scale(retag(a, target), b.scalar());
    if (a.kind() == RingKind::Matrix && b.kind() == RingKind::Matrix) {
        const auto& x = a.matrix();
        const auto& y = b.matrix();
        Eigen::MatrixXcd k(x.rows() * y.rows(), x.cols() * y.cols());
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) k.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        return RingValue(target, std::move(k));
    }
    throw DomainError("unsupported tensor combination");
}

std::string format_scalar(cplx c) {
    auto fmt = [](double x) {
        if (x == 0.0) x = 0.0;  // drop negative zero
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return std::string(buf);
    };
    const double re = c.real() == 0.0 ? 0.0 : c.real();
    const double im = c.imag() == 0.0 ? 0.0 : c.imag();
    if (im == 0.0) return fmt(re);
    std::string ims = (im == 1.0) ? "i" : (im == -1.0) ? "-i" : fmt(im) + "i";
    if (re == 0.0) return ims;
    if (ims[0] != '-') ims = "+" + ims;
    return fmt(re) + ims;
}

std::string format_value(const RingValue& a) {
    switch (a.kind()) {
        case RingKind::ComplexScalar:
        case RingKind::RealScalar: return format_scalar(a.scalar());
        case RingKind::Laurent: {
            if (a.terms().empty()) return "0";
            std::string s;
            for (const auto& [e, c] : a.terms()) {
                if (!s.empty()) s += " + ";
                s += "(" + format_scalar(c) + ")z^(";
                for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
                s += ")";
            }
            return s;
        }
        case RingKind::Matrix: {
            std::string s = "[";
            const auto& m = a.matrix();
            for (int i = 0; i < m.rows(); ++i) {
                s += i ? ",[" : "[";
                for (int j = 0; j < m.cols(); ++j) s += (j ? "," : "") + format_scalar(m(i, j));
                s += "]";
            }
            return s + "]";
        }
        case RingKind::Quaternion: {
            const Quat& q = a.quat();
            return "(" + format_scalar(q[0]) + "," + format_scalar(q[1]) + "," + format_scalar(q[2]) + "," +
                   format_scalar(q[3]) + ")";
        }
        case RingKind::Product: {
            std::string s = "<";
            for (size_t i = 0; i < a.parts().size(); ++i) s += (i ? "|" : "") + format_value(a.parts()[i]);
            return s + ">";
        }
    }
    return "?";
}

}  // namespace twalg
