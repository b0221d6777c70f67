#include "twalg/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace twalg {

int AlgebraModel::slots() const {
    switch (kind) {
        case ModelKind::Twisted: return f->order();
        case ModelKind::Ring: return 1;
        case ModelKind::Matrix: return k * k * inner->slots();
        case ModelKind::DirectSum: {
            int s = 0;
            for (const auto& p : parts) s += p->slots();
            return s;
        }
        case ModelKind::Complexify: return 2 * inner->slots();
        case ModelKind::QuatTensor: return 4 * inner->slots();
    }
    return 0;
}

std::string AlgebraModel::name() const {
    switch (kind) {
        case ModelKind::Twisted: return "S(f) over " + desc->name() + " on |T|=" + std::to_string(f->order());
        case ModelKind::Ring: return desc->name();
        case ModelKind::Matrix: return "M" + std::to_string(k) + "(" + inner->name() + ")";
        case ModelKind::DirectSum: {
            std::string s;
            for (const auto& p : parts) s += (s.empty() ? "" : " + ") + p->name();
            return "(" + s + ")";
        }
        case ModelKind::Complexify: return "complexification(" + inner->name() + ")";
        case ModelKind::QuatTensor: return "H x (" + inner->name() + ")";
    }
    return "?";
}

namespace model {

ModelPtr twisted(CocyclePtr f) {
    auto m = std::make_shared<AlgebraModel>();
    m->kind = ModelKind::Twisted;
    m->desc = f->desc();
    m->f = std::move(f);
    return m;
}

ModelPtr ring(DescPtr d) {
    auto m = std::make_shared<AlgebraModel>();
    m->kind = ModelKind::Ring;
    m->desc = std::move(d);
    return m;
}

ModelPtr matrix(int k, ModelPtr inner) {
    if (k < 1) throw DomainError("matrix model needs k >= 1");
    auto m = std::make_shared<AlgebraModel>();
    m->kind = ModelKind::Matrix;
    m->desc = inner->desc;
    m->k = k;
    m->inner = std::move(inner);
    return m;
}

ModelPtr direct_sum(std::vector<ModelPtr> parts) {
    if (parts.empty()) throw DomainError("direct sum needs at least one part");
    for (const auto& p : parts)
        if (!same_ring(p->desc, parts.front()->desc)) throw DomainError("direct sum parts over different rings");
    auto m = std::make_shared<AlgebraModel>();
    m->kind = ModelKind::DirectSum;
    m->desc = parts.front()->desc;
    m->parts = std::move(parts);
    return m;
}

ModelPtr complexify(ModelPtr inner) {
    if (!inner->desc->is_real()) throw DomainError("complexification needs a real coefficient ring");
    auto m = std::make_shared<AlgebraModel>();
    m->kind = ModelKind::Complexify;
    m->desc = inner->desc;
    m->inner = std::move(inner);
    return m;
}

ModelPtr quat_tensor(ModelPtr inner) {
    if (!inner->desc->is_real()) throw DomainError("quaternion tensor needs a real coefficient ring");
    auto m = std::make_shared<AlgebraModel>();
    m->kind = ModelKind::QuatTensor;
    m->desc = inner->desc;
    m->inner = std::move(inner);
    return m;
}

}  // namespace model

namespace {

// Quaternion units 1,i,j,k: e_r e_q = sign * e_idx.
constexpr int kQIdx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr int kQSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

void zero_span(const AlgebraModel& m, RingValue* out) {
    const RingValue z = ring_zero(m.desc);
    std::fill(out, out + m.slots(), z);
}

void unit_span(const AlgebraModel& m, RingValue* out) {
    zero_span(m, out);
    switch (m.kind) {
        case ModelKind::Twisted:
        case ModelKind::Ring: out[0] = ring_unit(m.desc); break;
        case ModelKind::Matrix: {
            const int s = m.inner->slots();
            for (int i = 0; i < m.k; ++i) unit_span(*m.inner, out + (i * m.k + i) * s);
            break;
        }
        case ModelKind::DirectSum: {
            int off = 0;
            for (const auto& p : m.parts) {
                unit_span(*p, out + off);
                off += p->slots();
            }
            break;
        }
        case ModelKind::Complexify:
        case ModelKind::QuatTensor: unit_span(*m.inner, out); break;
    }
}

void add_span(int n, const RingValue* a, RingValue* out, cplx sign = 1.0) {
    for (int i = 0; i < n; ++i) out[i] = ring_add(out[i], sign == cplx(1.0) ? a[i] : ring_scale(a[i], sign));
}

void mul_span(const AlgebraModel& m, const RingValue* a, const RingValue* b, RingValue* out) {
    switch (m.kind) {
        case ModelKind::Ring: out[0] = ring_mul(a[0], b[0]); return;
        case ModelKind::Twisted: {
            const int n = m.f->order();
            AlgebraElement x(m.f, std::vector<RingValue>(a, a + n));
            AlgebraElement y(m.f, std::vector<RingValue>(b, b + n));
            const AlgebraElement p = alg_mul(x, y);
            std::copy(p.coeffs().begin(), p.coeffs().end(), out);
            return;
        }
        case ModelKind::Matrix: {
            const int s = m.inner->slots(), k = m.k;
            std::vector<RingValue> tmp(s);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    RingValue* o = out + (i * k + j) * s;
                    zero_span(*m.inner, o);
                    for (int l = 0; l < k; ++l) {
                        mul_span(*m.inner, a + (i * k + l) * s, b + (l * k + j) * s, tmp.data());
                        add_span(s, tmp.data(), o);
                    }
                }
            return;
        }
        case ModelKind::DirectSum: {
            int off = 0;
            for (const auto& p : m.parts) {
                mul_span(*p, a + off, b + off, out + off);
                off += p->slots();
            }
            return;
        }
        case ModelKind::Complexify: {
            const int s = m.inner->slots();
            std::vector<RingValue> tmp(s);
            RingValue* re = out;
            RingValue* im = out + s;
            mul_span(*m.inner, a, b, re);
            mul_span(*m.inner, a + s, b + s, tmp.data());
            add_span(s, tmp.data(), re, -1.0);
            mul_span(*m.inner, a, b + s, im);
            mul_span(*m.inner, a + s, b, tmp.data());
            add_span(s, tmp.data(), im);
            return;
        }
        case ModelKind::QuatTensor: {
            const int s = m.inner->slots();
            std::vector<RingValue> tmp(s);
            zero_span(m, out);
            for (int r = 0; r < 4; ++r)
                for (int q = 0; q < 4; ++q) {
                    mul_span(*m.inner, a + r * s, b + q * s, tmp.data());
                    add_span(s, tmp.data(), out + kQIdx[r][q] * s, static_cast<double>(kQSign[r][q]));
                }
            return;
        }
    }
}

void star_span(const AlgebraModel& m, const RingValue* a, RingValue* out) {
    switch (m.kind) {
        case ModelKind::Ring: out[0] = ring_star(a[0]); return;
        case ModelKind::Twisted: {
            const int n = m.f->order();
            const AlgebraElement p = alg_star(AlgebraElement(m.f, std::vector<RingValue>(a, a + n)));
            std::copy(p.coeffs().begin(), p.coeffs().end(), out);
            return;
        }
        case ModelKind::Matrix: {
            const int s = m.inner->slots(), k = m.k;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) star_span(*m.inner, a + (j * k + i) * s, out + (i * k + j) * s);
            return;
        }
        case ModelKind::DirectSum: {
            int off = 0;
            for (const auto& p : m.parts) {
                star_span(*p, a + off, out + off);
                off += p->slots();
            }
            return;
        }
        case ModelKind::Complexify:
        case ModelKind::QuatTensor: {
            const int s = m.inner->slots();
            const int comps = m.kind == ModelKind::Complexify ? 2 : 4;
            for (int r = 0; r < comps; ++r) {
                star_span(*m.inner, a + r * s, out + r * s);
                if (r > 0)
                    for (int i = 0; i < s; ++i) out[r * s + i] = ring_neg(out[r * s + i]);
            }
            return;
        }
    }
}

void require_same_model(const ModelElement& a, const ModelElement& b) {
    if (a.model != b.model && a.model->name() != b.model->name())
        throw DomainError("elements of different models: " + a.model->name() + " vs " + b.model->name());
}

}  // namespace

ModelElement model_zero(const ModelPtr& m) {
    return ModelElement{m, std::vector<RingValue>(m->slots(), ring_zero(m->desc))};
}

ModelElement model_unit(const ModelPtr& m) {
    ModelElement e{m, std::vector<RingValue>(m->slots())};
    unit_span(*m, e.slots.data());
    return e;
}

ModelElement model_left(const RingValue& y, const ModelElement& a) {
    ModelElement e{a.model, {}};
    e.slots.reserve(a.slots.size());
    for (const auto& v : a.slots) e.slots.push_back(ring_mul(y, v));
    return e;
}

ModelElement model_embed(const ModelPtr& m, const RingValue& y) { return model_left(y, model_unit(m)); }

ModelElement model_add(const ModelElement& a, const ModelElement& b) {
    require_same_model(a, b);
    ModelElement e{a.model, a.slots};
    for (size_t i = 0; i < e.slots.size(); ++i) e.slots[i] = ring_add(e.slots[i], b.slots[i]);
    return e;
}

ModelElement model_sub(const ModelElement& a, const ModelElement& b) {
    require_same_model(a, b);
    ModelElement e{a.model, a.slots};
    for (size_t i = 0; i < e.slots.size(); ++i) e.slots[i] = ring_sub(e.slots[i], b.slots[i]);
    return e;
}

ModelElement model_scale(const ModelElement& a, cplx c) {
    ModelElement e{a.model, a.slots};
    for (auto& v : e.slots) v = ring_scale(v, c);
    return e;
}

ModelElement model_mul(const ModelElement& a, const ModelElement& b) {
    require_same_model(a, b);
    ModelElement e{a.model, std::vector<RingValue>(a.slots.size())};
    mul_span(*a.model, a.slots.data(), b.slots.data(), e.slots.data());
    return e;
}

ModelElement model_star(const ModelElement& a) {
    ModelElement e{a.model, std::vector<RingValue>(a.slots.size())};
    star_span(*a.model, a.slots.data(), e.slots.data());
    return e;
}

double model_distance(const ModelElement& a, const ModelElement& b) {
    require_same_model(a, b);
    double m = 0.0;
    for (size_t i = 0; i < a.slots.size(); ++i) m = std::max(m, ring_distance(a.slots[i], b.slots[i]));
    return m;
}

ModelElement from_algebra(const AlgebraElement& x) { return ModelElement{model::twisted(x.cocycle()), x.coeffs()}; }

AlgebraElement to_algebra(const ModelElement& a) {
    if (a.model->kind != ModelKind::Twisted) throw DomainError("element is not in a twisted algebra model");
    return AlgebraElement(a.model->f, a.slots);
}

ModelElement matrix_element(const ModelPtr& m, const std::vector<ModelElement>& entries) {
    if (m->kind != ModelKind::Matrix || static_cast<int>(entries.size()) != m->k * m->k)
        throw DomainError("matrix element needs k*k entries");
    ModelElement e{m, {}};
    for (const auto& x : entries) e.slots.insert(e.slots.end(), x.slots.begin(), x.slots.end());
    return e;
}

ModelElement sum_element(const ModelPtr& m, const std::vector<ModelElement>& parts) {
    if (m->kind != ModelKind::DirectSum || parts.size() != m->parts.size())
        throw DomainError("direct sum element needs one entry per part");
    ModelElement e{m, {}};
    for (const auto& x : parts) e.slots.insert(e.slots.end(), x.slots.begin(), x.slots.end());
    return e;
}

ModelElement complex_element(const ModelPtr& m, const ModelElement& re, const ModelElement& im) {
    if (m->kind != ModelKind::Complexify) throw DomainError("not a complexification model");
    ModelElement e{m, re.slots};
    e.slots.insert(e.slots.end(), im.slots.begin(), im.slots.end());
    return e;
}

ModelElement quat_element(const ModelPtr& m, const std::vector<ModelElement>& comps) {
    if (m->kind != ModelKind::QuatTensor || comps.size() != 4) throw DomainError("quaternion element needs 4 components");
    ModelElement e{m, {}};
    for (const auto& x : comps) e.slots.insert(e.slots.end(), x.slots.begin(), x.slots.end());
    return e;
}

ModelElement sub_element(const ModelElement& a, int part) {
    const AlgebraModel& m = *a.model;
    ModelPtr sub;
    int off = 0;
    switch (m.kind) {
        case ModelKind::DirectSum:
            for (int p = 0; p < part; ++p) off += m.parts[p]->slots();
            sub = m.parts.at(part);
            break;
        case ModelKind::Matrix:
        case ModelKind::Complexify:
        case ModelKind::QuatTensor:
            sub = m.inner;
            off = part * sub->slots();
            break;
        default: throw DomainError("model has no sub-elements");
    }
    return ModelElement{sub, std::vector<RingValue>(a.slots.begin() + off, a.slots.begin() + off + sub->slots())};
}

ModelElement apply(const Morphism& m, const AlgebraElement& x) {
    if (x.size() != static_cast<int>(m.images.size())) throw DomainError("element does not match morphism source");
    ModelElement out = model_zero(m.target);
    for (int t = 0; t < x.size(); ++t) {
        if (ring_size(x[t]) == 0.0) continue;
        const ModelElement term = model_left(x[t], m.images[t]);
        for (size_t i = 0; i < out.slots.size(); ++i) out.slots[i] = ring_add(out.slots[i], term.slots[i]);
    }
    return out;
}

Morphism identity_morphism(const CocyclePtr& f) {
    Morphism m{"identity", f, model::twisted(f), {}, std::nullopt};
    for (int t = 0; t < f->order(); ++t) m.images.push_back(ModelElement{m.target, generator(f, t).coeffs()});
    return m;
}

Morphism compose(const Morphism& first, const Morphism& second) {
    if (first.target->kind != ModelKind::Twisted || first.target->f->order() != second.source->order())
        throw DomainError("compose: first morphism does not land in the source of the second");
    Morphism m{second.name + " o " + first.name, first.source, second.target, {}, std::nullopt};
    for (const auto& img : first.images) m.images.push_back(apply(second, AlgebraElement(second.source, img.slots)));
    return m;
}

Morphism compose_entrywise(const Morphism& outer, const Morphism& inner) {
    const AlgebraModel& ot = *outer.target;
    if (ot.kind != ModelKind::Matrix || ot.inner->kind != ModelKind::Twisted)
        throw DomainError("compose_entrywise: outer target must be matrices over a twisted algebra");
    const int k = ot.k;
    const bool merge = inner.target->kind == ModelKind::Matrix;
    const int k2 = merge ? inner.target->k : 1;
    ModelPtr base = merge ? inner.target->inner : inner.target;
    ModelPtr target = model::matrix(k * k2, base);
    Morphism m{inner.name + " (entrywise) o " + outer.name, outer.source, target, {}, std::nullopt};
    const int bs = base->slots();
    for (const auto& img : outer.images) {
        ModelElement out = model_zero(target);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const ModelElement entry = sub_element(img, i * k + j);
                const ModelElement e = apply(inner, AlgebraElement(inner.source, entry.slots));
                for (int a = 0; a < k2; ++a)
                    for (int b = 0; b < k2; ++b) {
                        const int src = merge ? (a * k2 + b) * bs : 0;
                        const int row = i * k2 + a, col = j * k2 + b;
                        const int dst = (row * k * k2 + col) * bs;
                        std::copy(e.slots.begin() + src, e.slots.begin() + src + bs, out.slots.begin() + dst);
                    }
            }
        m.images.push_back(std::move(out));
    }
    return m;
}

namespace {

using Column = std::vector<std::pair<FlatKey, double>>;

Column flatten(const ModelElement& a) {
    Column out;
    FlatKey prefix;
    for (size_t i = 0; i < a.slots.size(); ++i) {
        prefix.assign(1, static_cast<int>(i));
        flatten_into(a.slots[i], prefix, out);
    }
    return out;
}

int rank_of(const std::vector<Column>& cols, double rel_tol) {
    if (cols.empty()) return 0;
    std::map<FlatKey, int> rows;
    for (const auto& c : cols)
        for (const auto& [k, v] : c) rows.emplace(k, 0);
    int r = 0;
    for (auto& [k, idx] : rows) idx = r++;
    if (rows.empty()) return 0;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [k, v] : cols[j]) m(rows[k], static_cast<Eigen::Index>(j)) += v;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    const double cut = rel_tol * std::max(1.0, s(0));
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cut) ++rank;
    return rank;
}

// Determinant over a commutative coefficient ring by cofactor expansion.
RingValue det(const std::vector<std::vector<RingValue>>& a, const DescPtr& d) {
    const size_t n = a.size();
    if (n == 0) return ring_unit(d);
    if (n == 1) return a[0][0];
    RingValue acc = ring_zero(d);
    for (size_t j = 0; j < n; ++j) {
        if (ring_size(a[0][j]) == 0.0) continue;
        std::vector<std::vector<RingValue>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<RingValue> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(std::move(row));
        }
        RingValue term = ring_mul(a[0][j], det(minor, d));
        acc = (j % 2 == 0) ? ring_add(acc, term) : ring_sub(acc, term);
    }
    return acc;
}

}  // namespace

int real_rank(const std::vector<ModelElement>& elems, double rel_tol) {
    std::vector<Column> cols;
    cols.reserve(elems.size());
    for (const auto& e : elems) cols.push_back(flatten(e));
    return rank_of(cols, rel_tol);
}

double max_exponent(const ModelElement& a) {
    int d = 0;
    for (const auto& v : a.slots)
        if (v.kind() == RingKind::Laurent)
            for (const auto& [e, c] : v.terms())
                for (int x : e) d = std::max(d, std::abs(x));
    return d;
}

bool MorphismReport::homomorphism() const {
    return mult_residual <= tol && star_residual <= tol && unit_residual <= tol && ecomm_residual <= tol;
}

MorphismReport verify_morphism(const Morphism& m, double tol) {
    const SchurFunction& f = *m.source;
    const GroupTable& g = f.G();
    const int n = f.order();
    if (static_cast<int>(m.images.size()) != n) throw DomainError("morphism needs one image per group element");
    const DescPtr& d = f.desc();
    const bool laurent = d->kind == RingKind::Laurent;
    if (!finite_dimensional(d) && !laurent) throw DomainError("cannot flatten " + d->name());

    MorphismReport r;
    r.name = m.name;
    r.source = model::twisted(m.source)->name();
    r.target = m.target->name();
    r.tol = tol;

    const ModelElement unit = m.corner ? *m.corner : model_unit(m.target);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const ModelElement lhs = model_mul(m.images[s], m.images[t]);
            const ModelElement rhs = model_left(f(s, t), m.images[g.mul(s, t)]);
            r.mult_residual = std::max(r.mult_residual, model_distance(lhs, rhs));
        }
    for (int t = 0; t < n; ++t) {
        const ModelElement lhs = model_star(m.images[t]);
        const ModelElement rhs = model_left(tilde(f, t), m.images[g.inv(t)]);
        r.star_residual = std::max(r.star_residual, model_distance(lhs, rhs));
    }
    r.unit_residual = model_distance(m.images[0], unit);
    for (const auto& y : real_basis(d, laurent ? 1 : 0)) {
        const ModelElement ey = model_left(y, unit);
        for (int t = 0; t < n; ++t)
            r.ecomm_residual = std::max(r.ecomm_residual, model_distance(model_mul(m.images[t], ey), model_mul(ey, m.images[t])));
    }

    int window = 0;
    if (laurent) {
        double deg = 0;
        for (const auto& img : m.images) deg = std::max(deg, max_exponent(img));
        for (const auto& v : f.table())
            for (const auto& [e, c] : v.terms())
                for (int x : e) deg = std::max(deg, static_cast<double>(std::abs(x)));
        window = 2 * static_cast<int>(deg) + 2;
        r.window_only = true;
        r.window = window;
    }
    const std::vector<RingValue> basis = real_basis(d, window);
    std::vector<ModelElement> images;
    images.reserve(basis.size() * n);
    for (int t = 0; t < n; ++t)
        for (const auto& y : basis) images.push_back(model_left(y, m.images[t]));
    r.source_dim = static_cast<int>(images.size());
    r.image_rank = real_rank(images);
    r.injective = r.image_rank == r.source_dim;

    if (laurent) {
        // E commutative: the map is a square matrix over E; bijective iff its
        // determinant is a nonzero monomial.
        const int slots = m.target->slots();
        if (slots == n && !m.corner && n <= 8) {
            std::vector<std::vector<RingValue>> a(n);
            for (int t = 0; t < n; ++t) a[t] = m.images[t].slots;
            const RingValue dv = det(a, d);
            r.surjective = dv.terms().size() == 1 && std::abs(dv.terms().begin()->second) > tol;
            r.surjectivity_method = "determinant";
        } else {
            r.surjective = false;
            r.surjectivity_method = "none";
        }
    } else {
        if (m.corner) {
            std::vector<ModelElement> corner;
            const auto& tm = m.target;
            const std::vector<RingValue> tb = real_basis(d, 0);
            for (int i = 0; i < tm->slots(); ++i)
                for (const auto& y : tb) {
                    ModelElement e = model_zero(tm);
                    e.slots[i] = y;
                    corner.push_back(model_mul(model_mul(*m.corner, e), *m.corner));
                }
            r.target_dim = real_rank(corner);
            corner.insert(corner.end(), images.begin(), images.end());
            r.surjective = r.image_rank == r.target_dim && real_rank(corner) == r.target_dim;
        } else {
            r.target_dim = m.target->slots() * real_dim(d);
            r.surjective = r.image_rank == r.target_dim;
        }
        r.surjectivity_method = "rank";
    }
    return r;
}

}  // namespace twalg
