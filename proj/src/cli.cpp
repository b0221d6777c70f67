#include "twalg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "twalg/io.hpp"

namespace twalg {

namespace {

using io::json;

struct Options {
    std::string config;
    std::optional<double> tol;
    std::optional<int> grid;
    std::string format = "json";
    std::string out;
    std::string matrix_csv;
    std::vector<std::string> operands;
};

// Resolved config shared by all subcommands.
struct RunConfig {
    json raw;
    GroupPtr group;
    DescPtr desc;
    double tol = kExactTol;
    int grid = kDefaultGrid;

    CocyclePtr cocycle() const {
        const json spec = raw.contains("cocycle") ? raw.at("cocycle") : json("trivial");
        return io::parse_cocycle(spec, group, desc, tol);
    }
    const json& section(const char* key) const {
        if (!raw.contains(key)) throw ParseError(std::string("config has no '") + key + "' section");
        return raw.at(key);
    }
};

bool has_laurent(const DescPtr& d) {
    if (d->kind == RingKind::Laurent) return true;
    for (const auto& p : d->parts)
        if (has_laurent(p)) return true;
    return false;
}

RunConfig load_config(const Options& o) {
    if (o.config.empty()) throw ParseError("--config is required");
    std::ifstream in(o.config);
    if (!in) throw ParseError("cannot open config '" + o.config + "'");
    RunConfig c;
    try {
        c.raw = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!c.raw.is_object()) throw ParseError("config must be a JSON object");
    c.desc = io::parse_descriptor(c.raw.contains("ring") ? c.raw.at("ring") : json("complex"));
    if (c.raw.contains("group")) c.group = io::parse_group(c.raw.at("group"));
    c.tol = has_laurent(c.desc) ? kLaurentTol : kExactTol;
    if (c.raw.contains("tol")) {
        if (!c.raw.at("tol").is_number()) throw ParseError("tol must be a number");
        c.tol = c.raw.at("tol").get<double>();
    }
    if (c.raw.contains("grid")) {
        if (!c.raw.at("grid").is_number_integer()) throw ParseError("grid must be an integer");
        c.grid = c.raw.at("grid").get<int>();
    }
    if (o.tol) c.tol = *o.tol;
    if (o.grid) c.grid = *o.grid;
    if (!(c.tol > 0.0)) throw ParseError("tolerance must be positive");
    if (c.grid < 1) throw ParseError("grid must be positive");
    return c;
}

AlgebraElement resolve_operand(const std::string& name, const RunConfig& c, const CocyclePtr& f) {
    if (!name.empty() && name.front() == '{') {
        try {
            return io::parse_element(json::parse(name), f);
        } catch (const json::parse_error& e) {
            throw ParseError("bad element literal '" + name + "'");
        }
    }
    if (!c.raw.contains("elements") || !c.raw.at("elements").contains(name))
        throw ParseError("unknown element '" + name + "'");
    return io::parse_element(c.raw.at("elements").at(name), f);
}

std::vector<AlgebraElement> operands(const Options& o, const RunConfig& c, const CocyclePtr& f) {
    std::vector<std::string> names = o.operands;
    if (names.empty() && c.raw.contains("operands"))
        for (const auto& x : c.raw.at("operands")) {
            if (!x.is_string()) throw ParseError("operands must be element names");
            names.push_back(x.get<std::string>());
        }
    std::vector<AlgebraElement> out;
    for (const auto& n : names) out.push_back(resolve_operand(n, c, f));
    return out;
}

// ---- table rendering -------------------------------------------------------

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
    } else if (j.is_string()) {
        rows.emplace_back(path, j.get<std::string>());
    } else {
        rows.emplace_back(path, j.dump());
    }
}

std::string render(const json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.first.size());
    std::string s;
    for (const auto& [k, v] : rows) s += k + std::string(w - k.size() + 2, ' ') + v + "\n";
    return s;
}

// ---- commands --------------------------------------------------------------

int cmd_validate(const RunConfig& c, json& out) {
    CocyclePtr f = c.cocycle();
    ValidationReport rep = validate(*f, c.tol, c.grid);
    out["command"] = "validate";
    out["order"] = f->order();
    out["ring"] = f->desc()->name();
    out["valid"] = rep.ok();
    json vs = json::array();
    for (const auto& v : rep.violations) vs.push_back(io::violation_json(v, f->G()));
    out["violations"] = vs;
    return rep.ok() ? 0 : 1;
}

int cmd_mul(const Options& o, const RunConfig& c, json& out) {
    CocyclePtr f = c.cocycle();
    auto xs = operands(o, c, f);
    if (xs.size() < 2) throw ParseError("mul needs at least two operands");
    AlgebraElement acc = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) acc = alg_mul(acc, xs[i]);
    out["command"] = "mul";
    out["result"] = io::element_json(acc);
    return 0;
}

int cmd_star(const Options& o, const RunConfig& c, json& out) {
    CocyclePtr f = c.cocycle();
    auto xs = operands(o, c, f);
    if (xs.size() != 1) throw ParseError("star needs exactly one operand");
    out["command"] = "star";
    out["result"] = io::element_json(alg_star(xs[0]));
    return 0;
}

int cmd_norm(const Options& o, const RunConfig& c, json& out) {
    CocyclePtr f = c.cocycle();
    auto xs = operands(o, c, f);
    if (xs.size() != 1) throw ParseError("norm needs exactly one operand");
    out["command"] = "norm";
    out["norm"] = io::format_real(alg_norm(xs[0], c.grid));
    out["coefficient_norm"] = io::format_real(coefficient_norm(xs[0], c.grid));
    if (has_laurent(f->desc())) out["grid"] = c.grid;
    if (!o.matrix_csv.empty()) {
        if (has_laurent(f->desc())) throw DomainError("matrix export needs a finite-dimensional E");
        std::ofstream csv(o.matrix_csv);
        if (!csv) throw ParseError("cannot write '" + o.matrix_csv + "'");
        csv << regular_matrix_csv(xs[0]);
        out["matrix_csv"] = o.matrix_csv;
    }
    return 0;
}

int cmd_classify(const RunConfig& c, json& out) {
    const DescPtr& d = c.desc;
    const bool complex_scalar = d->kind == RingKind::ComplexScalar;
    const bool laurent1 = d->kind == RingKind::Laurent && d->m == 1 && !d->is_real();
    if (!complex_scalar && !laurent1)
        throw DomainError("classify supports the complex scalars and complex Laurent m = 1 only, got " + d->name());
    const json& sec = c.section("classify");
    const json& list = sec.is_array() ? sec : io::json(sec.contains("alphas") ? sec.at("alphas") : json());
    if (!list.is_array() || list.empty()) throw ParseError("classify needs a non-empty 'alphas' list");
    std::vector<std::vector<RingValue>> alphas;
    for (const auto& a : list) {
        if (!a.is_array()) throw ParseError("each alpha must be a list of n-1 values");
        std::vector<RingValue> v;
        for (const auto& x : a) v.push_back(io::parse_value(x, d));
        if (!alphas.empty() && v.size() != alphas.front().size()) throw ParseError("alpha vectors differ in length");
        alphas.push_back(std::move(v));
    }
    const int n = static_cast<int>(alphas.front().size()) + 1;
    for (const auto& a : alphas) make_f_alpha(n, a, d, c.tol);  // validates the parameters

    struct Member {
        int index;
        Lambda lambda;
    };
    std::vector<std::vector<Member>> classes;
    for (int i = 0; i < static_cast<int>(alphas.size()); ++i) {
        bool placed = false;
        for (auto& cls : classes) {
            auto lam = equivalent_cyclic(alphas[i], alphas[cls.front().index], d, c.tol);
            if (lam) {
                cls.push_back({i, *lam});
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({{i, Lambda{make_cyclic(n), d, std::vector<RingValue>(n, ring_unit(d))}}});
    }
    auto alpha_json = [&](int i) {
        json a = json::array();
        for (const auto& v : alphas[i]) a.push_back(format_value(v));
        return a;
    };
    json cls_json = json::array();
    for (const auto& cls : classes) {
        json members = json::array();
        for (const auto& m : cls) {
            json lam = json::array();
            for (const auto& v : m.lambda.values) lam.push_back(format_value(v));
            members.push_back({{"index", m.index}, {"alpha", alpha_json(m.index)}, {"lambda", lam}});
        }
        cls_json.push_back({{"representative", cls.front().index}, {"members", members}});
    }
    out["command"] = "classify";
    out["n"] = n;
    out["ring"] = d->name();
    out["class_count"] = static_cast<int>(classes.size());
    // Size of Un(E)/Un(E)^n: 1 over C, n over C(T) via the winding number.
    out["total_classes"] = complex_scalar ? 1 : n;
    out["classes"] = cls_json;
    return 0;
}

// Root of u of the given order or a DomainError naming the hypothesis.
RingValue root_or_fail(const RingValue& u, int order, const std::string& what, double tol) {
    auto r = nth_root(u, order, tol);
    if (!r)
        throw DomainError("precondition failed: no central unitary " + what + " with power " + std::to_string(order) +
                          " equal to " + format_value(u));
    return *r;
}

RingValue param(const json& sec, const char* key, const DescPtr& d, const std::function<RingValue()>& fallback) {
    if (sec.contains(key)) return io::parse_value(sec.at(key), d);
    return fallback();
}

struct IsoResult {
    Morphism morphism;
    json extras = json::object();
};

KleinParams klein_params(const RunConfig& c) {
    const json& coc = c.section("cocycle");
    if (!coc.is_object() || !coc.contains("kind") || coc.at("kind") != "klein")
        throw ParseError("Klein constructors need a cocycle section of kind 'klein'");
    return io::parse_klein_params(coc, c.desc);
}

IsoResult build_periodicity(const std::string& op, const json& sec, const CliffordSpec& spec, double tol) {
    const DescPtr& d = spec.desc;
    auto one = [&] { return ring_unit(d); };
    IsoResult r;
    if (op == "extend_two_matrix" || op == "extend_two_quaternion" || op == "complexify_odd") {
        Periodicity p = op == "extend_two_matrix"
                            ? extend_two_matrix(spec, param(sec, "a1", d, one), param(sec, "a2", d, one))
                        : op == "extend_two_quaternion"
                            ? extend_two_quaternion(spec, param(sec, "a1", d, one), param(sec, "a2", d, one))
                            : complexify_odd(spec);
        r.morphism = p.morphism;
        if (op == "extend_two_matrix") r.extras["projection_residual"] = io::format_real(p.projection_residual);
        return r;
    }
    if (op == "split_odd") {
        SplitOdd s = split_odd(spec);
        r.morphism = s.morphism;
        r.extras = {{"isometry_residual", io::format_real(s.isometry_residual)},
                    {"range_residual", io::format_real(s.range_residual)},
                    {"intertwine_residual", io::format_real(s.intertwine_residual)},
                    {"extraction_residual", io::format_real(s.extraction_residual)},
                    {"central_residual", io::format_real(s.central_residual)}};
        return r;
    }
    if (op == "extend_even_projection") {
        std::vector<RingValue> alphas;
        if (sec.contains("alphas"))
            for (const auto& x : sec.at("alphas")) alphas.push_back(io::parse_value(x, d));
        else
            alphas = {one(), one()};
        EvenProjection e = extend_even_projection(spec, alphas, tol);
        r.morphism = e.morphism;
        r.extras = {{"is_projection", e.is_projection},
                    {"commute_residual", io::format_real(e.commute_residual)},
                    {"bc_residual", io::format_real(e.bc_residual)}};
        return r;
    }
    throw ParseError("unknown periodicity operation '" + op + "'");
}

IsoResult build_iso(const RunConfig& c, const json& sec) {
    if (!sec.is_object()) throw ParseError("iso section must be an object");
    const std::string name = sec.contains("constructor") && sec.at("constructor").is_string()
                                 ? sec.at("constructor").get<std::string>()
                                 : throw ParseError("iso section needs a 'constructor'");
    const DescPtr& d = c.desc;
    const double tol = c.tol;
    auto one = [&] { return ring_unit(d); };
    if (name == "identity") return {identity_morphism(c.cocycle())};
    if (name == "lambda") {
        CocyclePtr f = c.cocycle();
        Lambda lam{f->group(), d, {}};
        for (const auto& x : c.section("iso").at("lambda")) lam.values.push_back(io::parse_value(x, d));
        if (static_cast<int>(lam.values.size()) != f->order()) throw ParseError("lambda needs one value per element");
        return {lambda_isomorphism(f, lam)};
    }
    if (name == "z2_split") {
        CocyclePtr f = c.cocycle();
        if (f->order() != 2) throw DomainError("z2_split needs a group of order 2");
        const RingValue x = param(sec, "x", d, [&] { return root_or_fail((*f)(1, 1), 2, "x", tol); });
        return {z2_split(f, x, tol)};
    }
    if (name == "z2_complexify") return {z2_complexify(c.cocycle(), tol)};
    if (name == "char_decompose") return {char_decompose_z2n(c.cocycle(), tol)};
    if (name == "z2z4_decompose") return {z2z4_decompose(c.cocycle())};
    if (name == "cyclic_decompose") {
        const json& coc = c.section("cocycle");
        if (!coc.is_object() || coc.value("kind", "") != "f_alpha")
            throw ParseError("cyclic_decompose needs a cocycle section of kind 'f_alpha'");
        std::vector<RingValue> alpha;
        for (const auto& x : coc.at("alpha")) alpha.push_back(io::parse_value(x, d));
        const int n = static_cast<int>(alpha.size()) + 1;
        const RingValue b = param(sec, "b", d, [&] {
            RingValue prod = one();
            for (const auto& a : alpha) prod = ring_mul(prod, a);
            return root_or_fail(prod, n, "b", tol);
        });
        return {cyclic_decompose(n, alpha, b, tol)};
    }
    if (name.rfind("klein_", 0) == 0) {
        const KleinParams p = klein_params(c);
        const RingValue bg = ring_mul(p.beta, p.gamma), ag = ring_mul(p.alpha, p.gamma);
        if (name == "klein_split4")
            return {klein_split4(p, param(sec, "x", d, [&] { return root_or_fail(bg, 2, "x", tol); }),
                                 param(sec, "y", d, [&] { return root_or_fail(ag, 2, "y", tol); }), tol)};
        if (name == "klein_complex_pair") {
            const RingValue x = param(sec, "x", d, [&] { return root_or_fail(ring_neg(bg), 2, "x", tol); });
            const RingValue y = param(sec, "y", d, [&] {
                if (auto r = nth_root(ag, 2, tol)) return *r;
                return root_or_fail(ring_neg(ag), 2, "y", tol);
            });
            return {klein_complex_pair(p, x, y, tol)};
        }
        if (name == "klein_quaternion")
            return {klein_quaternion(p, param(sec, "x", d, [&] { return root_or_fail(ring_neg(bg), 2, "x", tol); }),
                                     param(sec, "y", d, [&] { return root_or_fail(ag, 2, "y", tol); }), tol)};
        if (name == "klein_matrix")
            return {klein_matrix(p, param(sec, "x", d, [&] { return root_or_fail(bg, 2, "x", tol); }),
                                 param(sec, "y", d, one), tol)};
        if (name == "klein_matrix_alt")
            return {klein_matrix_alt(
                p, param(sec, "x", d, [&] { return root_or_fail(ring_mul(p.alpha, p.beta), 2, "x", tol); }),
                param(sec, "delta", d, one), tol)};
    }
    static const std::vector<std::string> periodic = {"extend_two_matrix", "extend_two_quaternion", "complexify_odd",
                                                      "split_odd", "extend_even_projection"};
    if (std::find(periodic.begin(), periodic.end(), name) != periodic.end())
        return build_periodicity(name, sec, io::parse_clifford(c.section("clifford"), d, tol), tol);
    throw ParseError("unknown constructor '" + name + "'");
}

int cmd_iso(const RunConfig& c, json& out) {
    IsoResult r = build_iso(c, c.section("iso"));
    const MorphismReport rep = verify_morphism(r.morphism, c.tol);
    out["command"] = "iso";
    out["report"] = io::report_json(rep);
    if (!r.extras.empty()) out["extras"] = r.extras;
    return rep.verified() ? 0 : 1;
}

int cmd_clifford(const RunConfig& c, json& out) {
    const json& sec = c.section("clifford");
    DescPtr d = c.desc;
    if (sec.contains("field")) {
        const std::string field = sec.at("field").get<std::string>();
        if (field == "real") d = desc::real_scalar();
        else if (field == "complex") d = desc::complex_scalar();
        else throw ParseError("clifford field must be 'real' or 'complex'");
    }
    const CliffordSpec spec = io::parse_clifford(sec, d, c.tol);
    CocyclePtr f = clifford_cocycle(spec);
    const GroupTable& G = f->G();
    json table = json::object();
    for (int a = 0; a < G.order(); ++a) {
        json row = json::object();
        for (int b = 0; b < G.order(); ++b) row[G.label(b)] = format_value((*f)(a, b));
        table[G.label(a)] = row;
    }
    // Generator relations.
    double square = 0.0, anti = 0.0;
    json failures = json::array();
    const int n = spec.size();
    for (int s = 0; s < n; ++s) {
        const AlgebraElement vs = generator(f, 1 << s);
        const double r = alg_distance(alg_mul(vs, vs), embed_scalar(f, spec.rho[s]));
        square = std::max(square, r);
        if (r > c.tol) failures.push_back("square of " + spec.base.base()[s]);
        for (int t = s + 1; t < n; ++t) {
            const AlgebraElement vt = generator(f, 1 << t);
            const double q = alg_distance(alg_add(alg_mul(vs, vt), alg_mul(vt, vs)), alg_zero(f));
            anti = std::max(anti, q);
            if (q > c.tol) failures.push_back("anticommutator of " + spec.base.base()[s] + "," + spec.base.base()[t]);
        }
    }
    const ValidationReport val = validate(*f, c.tol, c.grid);
    bool ok = val.ok() && failures.empty();
    out["command"] = "clifford";
    out["labels"] = spec.base.base();
    out["cocycle"] = table;
    out["valid"] = val.ok();
    out["relations"] = {{"square_residual", io::format_real(square)},
                        {"anticommute_residual", io::format_real(anti)},
                        {"failures", failures},
                        {"ok", failures.empty()}};
    out["tilde_full"] = format_value(clifford_tilde_full(spec));
    json reports = json::array();
    if (sec.contains("periodicity")) {
        for (const auto& p : sec.at("periodicity")) {
            const json psec = p.is_string() ? json{{"op", p}} : p;
            const std::string op = psec.value("op", "");
            IsoResult r = build_periodicity(op, psec, spec, c.tol);
            const MorphismReport rep = verify_morphism(r.morphism, c.tol);
            json j = io::report_json(rep);
            if (!r.extras.empty()) j["extras"] = r.extras;
            reports.push_back(j);
            ok = ok && rep.verified();
        }
    }
    out["periodicity"] = reports;
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Twisted group algebra workbench", "twalg"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--config", o.config, "Config file (JSON)");
    app.add_option("--tol", o.tol, "Comparison tolerance");
    app.add_option("--grid", o.grid, "Torus grid points per variable");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", o.out, "Write the report to this file");
    const std::vector<std::pair<const char*, const char*>> cmds = {
        {"validate", "Check the cocycle axioms"},
        {"mul", "Multiply elements left to right"},
        {"star", "Involution of an element"},
        {"norm", "Operator norm of an element"},
        {"classify", "Partition f_alpha parameters into equivalence classes"},
        {"iso", "Build and verify a named morphism"},
        {"clifford", "Clifford cocycle, relations and periodicity maps"}};
    for (const auto& [name, help] : cmds) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        if (std::string(name) == "mul" || std::string(name) == "star" || std::string(name) == "norm")
            sub->add_option("operands", o.operands, "Element names from the config or inline JSON literals");
        if (std::string(name) == "norm")
            sub->add_option("--matrix-csv", o.matrix_csv, "Write the flattened regular matrix as CSV (re,im pairs)");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o_out, o_err;
        const int code = app.exit(e, o_out, o_err);
        out << o_out.str();
        err << o_err.str();
        return code == 0 ? 0 : 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        const RunConfig c = load_config(o);
        json report = json::object();
        int code = 0;
        if (cmd == "validate") code = cmd_validate(c, report);
        else if (cmd == "mul") code = cmd_mul(o, c, report);
        else if (cmd == "star") code = cmd_star(o, c, report);
        else if (cmd == "norm") code = cmd_norm(o, c, report);
        else if (cmd == "classify") code = cmd_classify(c, report);
        else if (cmd == "iso") code = cmd_iso(c, report);
        else code = cmd_clifford(c, report);
        report["exit_code"] = code;
        const std::string text = render(report, o.format);
        if (o.out.empty()) {
            out << text;
        } else {
            std::ofstream f(o.out);
            if (!f) {
                err << "error: cannot write '" << o.out << "'\n";
                return 2;
            }
            f << text;
        }
        return code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace twalg
