#include "twalg/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace twalg::io {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

double parse_double(const std::string& s, const std::string& context) {
    if (s.empty()) throw ParseError("empty number in '" + context + "'");
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(x)) throw ParseError("bad number '" + s + "' in '" + context + "'");
    return x;
}

int parse_int(const std::string& s, const std::string& context) {
    if (s.empty()) throw ParseError("empty exponent in '" + context + "'");
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size()) throw ParseError("bad integer '" + s + "' in '" + context + "'");
    return static_cast<int>(v);
}

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("key '") + key + "' must be an integer");
    return v.get<int>();
}

std::string need_string(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) throw ParseError(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

Field parse_field(const json& j) {
    if (!j.is_object() || !j.contains("field")) return Field::Complex;
    const std::string f = j.at("field").is_string() ? j.at("field").get<std::string>() : "";
    if (f == "complex") return Field::Complex;
    if (f == "real") return Field::Real;
    throw ParseError("field must be 'complex' or 'real'");
}

// Splits on '*' outside parentheses.
std::vector<std::string> split_factors(const std::string& s, const std::string& raw) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '*' && depth == 0) {
            if (cur.empty()) throw ParseError("empty factor in '" + raw + "'");
            out.push_back(cur);
            cur.clear();
            continue;
        }
        cur += c;
    }
    if (cur.empty()) throw ParseError("empty factor in '" + raw + "'");
    out.push_back(cur);
    return out;
}

// One Laurent term such as "(1+i)z^(1,0)", "-2*z1^3*z2", "i", "z^-1".
LaurentTerms parse_term(const std::string& raw, int m) {
    const std::string s = strip_spaces(raw);
    if (s.empty()) throw ParseError("empty Laurent term");
    cplx coef = 1.0;
    Exponent e(static_cast<size_t>(m), 0);
    size_t pos = 0;
    if (s[0] == '(') {
        const size_t close = s.find(')');
        if (close == std::string::npos) throw ParseError("unbalanced parenthesis in '" + raw + "'");
        coef = parse_scalar(s.substr(1, close - 1));
        pos = close + 1;
        if (pos < s.size() && s[pos] == '*') ++pos;
    } else if (s[0] == '-' || s[0] == '+') {
        if (s.size() > 1 && s[1] == 'z') {
            coef = s[0] == '-' ? -1.0 : 1.0;
            pos = 1;
        }
    }
    for (const std::string& factor : split_factors(s.substr(pos), raw)) {
        if (factor[0] != 'z') {
            coef *= parse_scalar(factor);
            continue;
        }
        size_t i = 1;
        int var = 0;
        if (i < factor.size() && std::isdigit(static_cast<unsigned char>(factor[i]))) {
            size_t k = i;
            while (k < factor.size() && std::isdigit(static_cast<unsigned char>(factor[k]))) ++k;
            var = parse_int(factor.substr(i, k - i), raw) - 1;
            i = k;
        } else if (m != 1 && factor.compare(i, 2, "^(") != 0) {
            throw ParseError("bare 'z' needs m = 1 in '" + raw + "'; use z1, z2, ...");
        }
        if (factor.compare(i, 2, "^(") == 0) {
            if (factor.back() != ')') throw ParseError("bad exponent vector in '" + raw + "'");
            const std::string inner = factor.substr(i + 2, factor.size() - i - 3);
            std::vector<int> vec;
            for (size_t a = 0;;) {
                const size_t b = inner.find(',', a);
                vec.push_back(parse_int(inner.substr(a, b == std::string::npos ? std::string::npos : b - a), raw));
                if (b == std::string::npos) break;
                a = b + 1;
            }
            if (static_cast<int>(vec.size()) != m)
                throw ParseError("exponent vector length does not match m = " + std::to_string(m) + " in '" + raw + "'");
            for (int v = 0; v < m; ++v) e[v] += vec[v];
            continue;
        }
        if (var < 0 || var >= m) throw ParseError("variable out of range in '" + raw + "'");
        int p = 1;
        if (i < factor.size()) {
            if (factor[i] != '^') throw ParseError("bad factor '" + factor + "'");
            p = parse_int(factor.substr(i + 1), raw);
        }
        e[var] += p;
    }
    LaurentTerms t;
    if (coef != cplx(0.0)) t[e] = coef;
    return t;
}

// Splits on " + " / " - " outside parentheses.
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && c == ' ' && i + 2 < s.size() && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
            out.push_back(cur);
            cur = s[i + 1] == '-' ? "-" : "";
            i += 2;
            continue;
        }
        cur += c;
    }
    out.push_back(cur);
    return out;
}

void add_terms(LaurentTerms& acc, const LaurentTerms& t) {
    for (const auto& [e, c] : t) {
        acc[e] += c;
        if (acc[e] == cplx(0.0)) acc.erase(e);
    }
}

LaurentTerms parse_laurent_string(const std::string& s, int m) {
    LaurentTerms acc;
    const std::string t = trim(s);
    if (t == "0") return acc;
    for (const auto& part : split_terms(t)) {
        std::string p = trim(part);
        // "-(c)z^..." from the splitter.
        if (p.size() > 1 && p[0] == '-' && p[1] == '(') {
            LaurentTerms neg = parse_term(p.substr(1), m);
            for (auto& [e, c] : neg) c = -c;
            add_terms(acc, neg);
        } else {
            add_terms(acc, parse_term(p, m));
        }
    }
    return acc;
}

Exponent parse_exponent(const json& j, int m) {
    Exponent e;
    if (j.is_number_integer()) e.push_back(j.get<int>());
    else if (j.is_array())
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw ParseError("exponent entries must be integers");
            e.push_back(x.get<int>());
        }
    else throw ParseError("exponent must be an integer or integer list");
    if (static_cast<int>(e.size()) != m) throw ParseError("exponent length does not match m");
    return e;
}

std::vector<RingValue> parse_values(const json& j, const DescPtr& d, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be a list");
    std::vector<RingValue> out;
    for (const auto& x : j) out.push_back(parse_value(x, d));
    return out;
}

RingValue scalar_or_unit(const json& j, const char* key, const DescPtr& d) {
    if (!j.contains(key)) return ring_unit(d);
    return parse_value(j.at(key), d);
}

}  // namespace

cplx parse_scalar(const std::string& raw) {
    const std::string s = strip_spaces(raw);
    if (s.empty()) throw ParseError("empty scalar");
    if (s.back() != 'i') return parse_double(s, raw);
    const std::string body = s.substr(0, s.size() - 1);
    // Split point: last sign that is not leading and not part of an exponent.
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    const std::string re_str = split == std::string::npos ? "" : body.substr(0, split);
    const std::string im_str = split == std::string::npos ? body : body.substr(split);
    double im;
    if (im_str.empty() || im_str == "+") im = 1.0;
    else if (im_str == "-") im = -1.0;
    else im = parse_double(im_str, raw);
    const double re = re_str.empty() ? 0.0 : parse_double(re_str, raw);
    return {re, im};
}

cplx parse_scalar(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    throw ParseError("scalar must be a number or string, got " + j.dump());
}

DescPtr parse_descriptor(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "complex") return desc::complex_scalar();
        if (s == "real") return desc::real_scalar();
        if (s == "quaternion") return desc::quaternion();
        throw ParseError("unknown ring '" + s + "'");
    }
    if (!j.is_object()) throw ParseError("ring must be a string or object");
    const std::string kind = need_string(j, "kind");
    if (kind == "complex") return desc::complex_scalar();
    if (kind == "real") return desc::real_scalar();
    if (kind == "quaternion") return desc::quaternion();
    if (kind == "laurent") {
        const int m = need_int(j, "m");
        if (m < 1) throw ParseError("laurent needs m >= 1");
        return desc::laurent(m, parse_field(j));
    }
    if (kind == "matrix") {
        const int k = need_int(j, "k");
        if (k < 1) throw ParseError("matrix needs k >= 1");
        return desc::matrix(k, parse_field(j));
    }
    if (kind == "product") {
        const json& p = need(j, "parts");
        if (!p.is_array() || p.empty()) throw ParseError("product needs a non-empty parts list");
        std::vector<DescPtr> parts;
        for (const auto& x : p) parts.push_back(parse_descriptor(x));
        return desc::product(std::move(parts));
    }
    throw ParseError("unknown ring kind '" + kind + "'");
}

RingValue parse_value(const json& j, const DescPtr& d) {
    switch (d->kind) {
        case RingKind::ComplexScalar: return complex_value(parse_scalar(j));
        case RingKind::RealScalar: {
            const cplx c = parse_scalar(j);
            if (c.imag() != 0.0) throw ParseError("real ring value has imaginary part: " + j.dump());
            return real_value(c.real());
        }
        case RingKind::Laurent: {
            LaurentTerms acc;
            if (j.is_number()) {
                add_terms(acc, {{Exponent(static_cast<size_t>(d->m), 0), j.get<double>()}});
            } else if (j.is_string()) {
                acc = parse_laurent_string(j.get<std::string>(), d->m);
            } else if (j.is_array()) {
                for (const auto& t : j) {
                    if (t.is_string()) {
                        add_terms(acc, parse_laurent_string(t.get<std::string>(), d->m));
                    } else if (t.is_array() && t.size() == 2) {
                        const cplx c = parse_scalar(t[1]);
                        if (c != cplx(0.0)) add_terms(acc, {{parse_exponent(t[0], d->m), c}});
                    } else {
                        throw ParseError("Laurent term must be a string or [exponent, coefficient]");
                    }
                }
            } else {
                throw ParseError("bad Laurent literal " + j.dump());
            }
            if (d->is_real())
                for (const auto& [e, c] : acc)
                    if (c.imag() != 0.0) throw ParseError("real Laurent value has a complex coefficient");
            return laurent_value(d, std::move(acc));
        }
        case RingKind::Matrix: {
            if (!j.is_array() || static_cast<int>(j.size()) != d->k) {
                // Scalar shorthand for c * identity.
                if (j.is_number() || j.is_string()) return ring_central(d, parse_scalar(j));
                throw ParseError("matrix literal needs " + std::to_string(d->k) + " rows");
            }
            Eigen::MatrixXcd m(d->k, d->k);
            for (int r = 0; r < d->k; ++r) {
                const json& row = j[r];
                if (!row.is_array() || static_cast<int>(row.size()) != d->k)
                    throw ParseError("matrix row " + std::to_string(r) + " has the wrong length");
                for (int c = 0; c < d->k; ++c) {
                    m(r, c) = parse_scalar(row[c]);
                    if (d->is_real() && m(r, c).imag() != 0.0) throw ParseError("real matrix has a complex entry");
                }
            }
            return matrix_value(d, std::move(m));
        }
        case RingKind::Quaternion: {
            if (j.is_number() || j.is_string()) {
                const cplx c = parse_scalar(j);
                if (c.imag() != 0.0) throw ParseError("quaternion scalar must be real");
                return quaternion_value(c.real(), 0, 0, 0);
            }
            if (!j.is_array() || j.size() != 4) throw ParseError("quaternion literal needs 4 numbers");
            double q[4];
            for (int i = 0; i < 4; ++i) {
                const cplx c = parse_scalar(j[i]);
                if (c.imag() != 0.0) throw ParseError("quaternion components must be real");
                q[i] = c.real();
            }
            return quaternion_value(q[0], q[1], q[2], q[3]);
        }
        case RingKind::Product: {
            if (j.is_number() || j.is_string()) return ring_central(d, parse_scalar(j));
            if (!j.is_array() || j.size() != d->parts.size()) throw ParseError("product literal has the wrong arity");
            std::vector<RingValue> parts;
            for (size_t i = 0; i < d->parts.size(); ++i) parts.push_back(parse_value(j[i], d->parts[i]));
            return product_value(d, std::move(parts));
        }
    }
    throw ParseError("unsupported ring");
}

GroupPtr parse_group(const json& j) {
    const std::string kind = need_string(j, "kind");
    if (kind == "cyclic") {
        const int n = need_int(j, "n");
        if (n < 1 || n > kMaxGroupOrder) throw ParseError("cyclic order out of range");
        return make_cyclic(n);
    }
    if (kind == "product") {
        const json& fs = need(j, "factors");
        if (!fs.is_array() || fs.empty()) throw ParseError("product needs factors");
        GroupPtr g = parse_group(fs[0]);
        for (size_t i = 1; i < fs.size(); ++i) g = direct_product(*g, *parse_group(fs[i]));
        return g;
    }
    if (kind == "subsets") {
        const json& ls = need(j, "labels");
        if (!ls.is_array()) throw ParseError("subsets needs a label list");
        std::vector<std::string> labels;
        for (const auto& x : ls) labels.push_back(x.is_string() ? x.get<std::string>() : x.dump());
        if (labels.size() > 12) throw ParseError("too many subset labels");
        return make_subset_group(std::move(labels)).group();
    }
    throw ParseError("unknown group kind '" + kind + "'");
}

KleinParams parse_klein_params(const json& j, const DescPtr& d) {
    return {scalar_or_unit(j, "alpha", d), scalar_or_unit(j, "beta", d), scalar_or_unit(j, "gamma", d),
            scalar_or_unit(j, "eps", d)};
}

CliffordSpec parse_clifford(const json& j, const DescPtr& d, double tol) {
    std::vector<std::string> labels;
    std::vector<RingValue> rho;
    if (j.contains("labels")) {
        for (const auto& x : j.at("labels")) labels.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    }
    if (j.contains("rho")) rho = parse_values(j.at("rho"), d, "rho");
    if (labels.empty() && !rho.empty())
        for (size_t i = 0; i < rho.size(); ++i) labels.push_back(std::to_string(i + 1));
    if (labels.size() != rho.size()) throw ParseError("clifford needs one rho value per label");
    if (static_cast<int>(labels.size()) > kMaxCliffordLabels) throw ParseError("too many clifford labels");
    return make_clifford_spec(std::move(labels), std::move(rho), d, tol);
}

CocyclePtr parse_cocycle(const json& j, const GroupPtr& g, const DescPtr& d, double tol) {
    const std::string kind = j.is_string() ? j.get<std::string>() : need_string(j, "kind");
    auto need_group = [&]() -> const GroupPtr& {
        if (!g) throw ParseError("cocycle kind '" + kind + "' needs a group section");
        return g;
    };
    if (kind == "trivial") return std::make_shared<SchurFunction>(trivial_cocycle(need_group(), d));
    if (kind == "table") {
        const GroupPtr& G = need_group();
        const json& rows = need(j, "rows");
        const int n = G->order();
        if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError("table needs one row per element");
        std::vector<RingValue> table;
        for (const auto& row : rows) {
            if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("table row has the wrong length");
            for (const auto& x : row) table.push_back(parse_value(x, d));
        }
        return std::make_shared<SchurFunction>(G, d, std::move(table));
    }
    if (kind == "f_alpha") {
        const auto alpha = parse_values(need(j, "alpha"), d, "alpha");
        const int n = j.contains("n") ? need_int(j, "n") : static_cast<int>(alpha.size()) + 1;
        return std::make_shared<SchurFunction>(make_f_alpha(n, alpha, d, tol));
    }
    if (kind == "klein") return klein_cocycle(parse_klein_params(j, d));
    if (kind == "clifford") return clifford_cocycle(parse_clifford(j, d, tol));
    if (kind == "z2z4")
        return z2z4_cocycle(scalar_or_unit(j, "alpha", d), scalar_or_unit(j, "beta", d), scalar_or_unit(j, "gamma", d),
                            scalar_or_unit(j, "delta", d));
    if (kind == "torus") return torus_cocycle(need_int(j, "n"));
    throw ParseError("unknown cocycle kind '" + kind + "'");
}

AlgebraElement parse_element(const json& j, const CocyclePtr& f) {
    if (!j.is_object()) throw ParseError("element must be an object {label: value}");
    const GroupTable& G = f->G();
    std::vector<RingValue> coeffs(static_cast<size_t>(G.order()), ring_zero(f->desc()));
    for (const auto& [label, v] : j.items()) {
        const int t = G.find_label(label);
        if (t < 0) throw DomainError("unknown group label '" + label + "'");
        coeffs[t] = parse_value(v, f->desc());
    }
    return AlgebraElement(f, std::move(coeffs));
}

json value_json(const RingValue& v) { return format_value(v); }

json element_json(const AlgebraElement& x) {
    json out = json::object();
    for (int t = 0; t < x.size(); ++t) out[x.f().G().label(t)] = format_value(x[t]);
    return out;
}

std::string format_real(double x) {
    if (x == 0.0) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s = buf;
    if (s.find_first_of(".eni") == std::string::npos) s += ".0";
    return s;
}

json report_json(const MorphismReport& r) {
    json o;
    o["name"] = r.name;
    o["source"] = r.source;
    o["target"] = r.target;
    o["residuals"] = {{"mult", format_real(r.mult_residual)},
                      {"star", format_real(r.star_residual)},
                      {"unit", format_real(r.unit_residual)},
                      {"ecomm", format_real(r.ecomm_residual)}};
    o["source_dim"] = r.source_dim;
    o["image_rank"] = r.image_rank;
    o["target_dim"] = r.target_dim;
    o["injective"] = r.injective;
    o["surjective"] = r.surjective;
    o["surjectivity_method"] = r.surjectivity_method;
    if (r.window_only) o["window"] = r.window;
    o["homomorphism"] = r.homomorphism();
    o["verified"] = r.verified();
    o["tol"] = format_real(r.tol);
    return o;
}

json violation_json(const Violation& v, const GroupTable& g) {
    json o;
    o["kind"] = v.kind;
    json els = json::array();
    for (int e : v.elements) els.push_back(g.label(e));
    o["elements"] = els;
    o["residual"] = format_real(v.residual);
    o["message"] = describe(v, g);
    return o;
}

}  // namespace twalg::io
