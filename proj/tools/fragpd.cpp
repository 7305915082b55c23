// fragpd: command-line driver for the fragile power domination library.
//
// Exit codes: 0 success, 1 property check disagreed with --expect (or an
// internal consistency check failed), 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <regex>
#include <set>
#include <iostream>
#include <sstream>

#include "fragpd/fragpd.hpp"

using json = nlohmann::ordered_json;
using namespace fpd;

namespace {

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json number(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

json numbers(const std::vector<Integer>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(number(x));
    return out;
}

json vertex_list(const VertexSet& s) { return json(s.members()); }

std::string rational_string(const Rational& r) {
    const Integer n = boost::multiprecision::numerator(r);
    const Integer d = boost::multiprecision::denominator(r);
    return d == 1 ? n.str() : n.str() + "/" + d.str();
}

/// "1/2", "0.25", "1", "3e-1" is not accepted.
Rational parse_rational(const std::string& text) {
    static const std::regex frac(R"(\s*(\d+)\s*/\s*(\d+)\s*)");
    static const std::regex dec(R"(\s*(\d*)(?:\.(\d*))?\s*)");
    std::smatch m;
    if (std::regex_match(text, m, frac)) {
        const Integer d(m[2].str());
        if (d == 0) throw input_error("zero denominator in \"" + text + "\"");
        return Rational(Integer(m[1].str()), d);
    }
    if (std::regex_match(text, m, dec) && (m[1].length() + m[2].length()) > 0) {
        const std::string whole = m[1].length() ? m[1].str() : "0";
        const std::string frac_digits = m[2].str();
        Integer scale = 1;
        for (std::size_t i = 0; i < frac_digits.size(); ++i) scale *= 10;
        const Integer num(whole + frac_digits);
        return Rational(num, scale);
    }
    throw input_error("cannot parse \"" + text + "\" as a rational number");
}

struct Loaded {
    Graph graph;
    std::map<std::string, VertexSet> sets;
    std::string description;
};

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, std::string> out;
    for (const auto& p : raw) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw input_error("--param expects K=V, got \"" + p + "\"");
        out[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return out;
}

std::size_t param_size(const std::map<std::string, std::string>& params, const std::string& key,
                       std::optional<std::size_t> fallback = std::nullopt) {
    const auto it = params.find(key);
    if (it == params.end()) {
        if (fallback) return *fallback;
        throw input_error("family parameter \"" + key + "\" is required");
    }
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(it->second, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != it->second.size() || it->second.empty() || it->second.front() == '-')
        throw input_error("family parameter \"" + key + "\" must be a nonnegative integer");
    return static_cast<std::size_t>(v);
}

Loaded load_family(const std::string& name, const std::map<std::string, std::string>& params) {
    Loaded out;
    auto singles = [&out](const Graph& g) {
        for (const auto& [v, l] : g.labels())
            if (l.size() == 1) out.sets[l] = VertexSet{v};
    };
    if (name == "fig3" || name == "fig3_base") {
        auto [g, s] = fig3_base();
        out.graph = std::move(g);
        out.sets["S"] = s;
        singles(out.graph);
        out.description = "triangle u,v,w with two leaves on v and on w";
    } else if (name == "fig4" || name == "fig4_counterexample") {
        auto [g, s] = fig4_counterexample();
        out.graph = std::move(g);
        out.sets["S"] = s;
        singles(out.graph);
        out.description = "triangle example with gadgets giving a linear polynomial";
    } else if (name == "h_graph") {
        const std::size_t t = param_size(params, "t", 0), w = param_size(params, "w", 0);
        const std::size_t d = param_size(params, "d", 0), s = param_size(params, "s", 3);
        auto [g, sp] = h_graph(t, w, d, s);
        out.graph = std::move(g);
        out.sets["S"] = sp;
        out.sets["A"] = VertexSet{1, 4};
        out.description = "H(" + std::to_string(t) + "," + std::to_string(w) + "," + std::to_string(d) +
                          ") with s=" + std::to_string(s);
    } else if (name == "g_family") {
        const std::size_t s = param_size(params, "s"), l = param_size(params, "ell");
        const GFamily fam(s, l);
        out.graph = fam.graph();
        out.sets["K"] = fam.clique();
        out.sets["S"] = fam.special();
        for (std::size_t i = 1; i <= s; ++i) {
            out.sets["R" + std::to_string(i)] = fam.row(i);
            out.sets["L" + std::to_string(i)] = fam.pendant(i);
            out.sets["F" + std::to_string(i)] = fam.fort(i);
        }
        for (std::size_t j = 1; j <= fam.eta(); ++j) out.sets["C" + std::to_string(j)] = fam.column(j);
        out.description = "G_" + std::to_string(s) + "(" + std::to_string(l) + ")";
    } else {
        throw input_error("unknown family \"" + name + "\" (fig3, fig4, h_graph, g_family)");
    }
    for (const auto& [key, _] : params) {
        static const std::set<std::string> known{"s", "ell", "t", "w", "d"};
        if (!known.count(key)) throw input_error("unknown family parameter \"" + key + "\"");
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::map<std::string, VertexSet> read_sidecar(const std::string& path) {
    const json j = json::parse(read_file(path));
    std::map<std::string, VertexSet> out;
    if (!j.contains("sets") || !j["sets"].is_object()) throw input_error("sidecar \"" + path + "\" has no \"sets\" object");
    for (const auto& [k, v] : j["sets"].items()) out[k] = VertexSet(v.get<std::vector<Vertex>>());
    return out;
}

/// Options shared by every subcommand that reads a graph.
struct GraphSource {
    std::string graph_path;
    std::string sets_path;
    std::string family;
    std::vector<std::string> params;
    std::optional<std::size_t> s, ell, t, w, d;

    void attach(CLI::App* app) {
        auto* g = app->add_option("--graph", graph_path, "edge-list file");
        auto* f = app->add_option("--family", family, "fig3 | fig4 | h_graph | g_family");
        g->excludes(f);
        app->add_option("--sets", sets_path, "JSON sidecar with named vertex sets");
        app->add_option("--param", params, "family parameter K=V")->take_all();
        app->add_option("--s", s, "family parameter s");
        app->add_option("--ell", ell, "family parameter ell");
        app->add_option("--t", t, "family parameter t");
        app->add_option("--w", w, "family parameter w");
        app->add_option("--d", d, "family parameter d");
    }

    [[nodiscard]] Loaded load() const {
        if (graph_path.empty() == family.empty()) throw input_error("give exactly one of --graph or --family");
        Loaded out;
        if (!graph_path.empty()) {
            out.graph = parse_edge_list(read_file(graph_path));
            out.description = graph_path;
        } else {
            auto p = parse_params(params);
            const std::pair<const char*, const std::optional<std::size_t>*> shorthands[] = {
                {"s", &s}, {"ell", &ell}, {"t", &t}, {"w", &w}, {"d", &d}};
            for (auto [key, val] : shorthands)
                if (*val) p[key] = std::to_string(**val);
            out = load_family(family, p);
        }
        if (!sets_path.empty())
            for (auto& [k, v] : read_sidecar(sets_path)) out.sets[k] = std::move(v);
        for (const auto& [k, v] : out.sets)
            for (Vertex x : v) out.graph.check_vertex(x);
        return out;
    }
};

/// Comma-separated tokens: a named set, a vertex label, or an id, each with
/// an optional ":m" multiplicity.
Placement parse_placement(const std::string& text, const Loaded& src) {
    std::map<Vertex, unsigned> mult;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty()) continue;
        unsigned m = 1;
        if (const auto colon = tok.rfind(':'); colon != std::string::npos) {
            const std::string ms = tok.substr(colon + 1);
            if (ms.empty() || ms.find_first_not_of("0123456789") != std::string::npos || ms.size() > 6)
                throw input_error("bad multiplicity in \"" + tok + "\"");
            m = static_cast<unsigned>(std::stoul(ms));
            if (m == 0) throw input_error("multiplicity must be positive in \"" + tok + "\"");
            tok = tok.substr(0, colon);
        }
        std::vector<Vertex> vs;
        if (auto it = src.sets.find(tok); it != src.sets.end()) {
            vs = it->second.members();
        } else if (auto v = src.graph.find_label(tok)) {
            vs.push_back(*v);
        } else if (!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos && tok.size() < 10) {
            vs.push_back(static_cast<Vertex>(std::stoul(tok)));
        } else {
            throw input_error("unknown vertex or set \"" + tok + "\"");
        }
        for (Vertex v : vs) {
            src.graph.check_vertex(v);
            if (mult.count(v)) throw input_error("vertex " + std::to_string(v) + " listed twice");
            mult[v] = m;
        }
    }
    return Placement(mult);
}

VertexSet require_set(const Placement& p, const char* what) {
    if (!p.is_set()) throw input_error(std::string(what) + " must not use multiplicities");
    return p.support();
}

json poly_json(const ExPoly& e) {
    json j;
    j["power"] = numbers(e.power.coeffs().empty() ? std::vector<Integer>{0} : e.power.coeffs());
    if (e.bernstein) j["bernstein"] = numbers(*e.bernstein);
    j["s"] = e.s;
    j["d"] = e.d;
    return j;
}

struct Output {
    std::string format = "text";
    std::string out_path;

    void emit(const json& j, const std::string& text) const {
        std::string body = format == "json" ? j.dump(2) + "\n" : text;
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(out_path);
            if (!f) throw input_error("cannot write \"" + out_path + "\"");
            f << body;
        }
    }
};

int verdict_exit(bool passed, const std::string& expect) {
    if (expect.empty()) return 0;
    return (expect == "pass") == passed ? 0 : 1;
}

std::string join(const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fragile power domination: observation, expected value polynomials, gadgets and families"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "fragpd 1.0.0");

    GraphSource src;
    Output out;
    std::string set_text, placement_text, other_text, q_text, which, expect, job_path;
    std::size_t cap = default_enumeration_cap, trials = 100000, ell_check = 1, max_k = 8;
    std::uint64_t seed = 1;

    auto common = [&](CLI::App* sub) {
        src.attach(sub);
        sub->add_option("--format", out.format, "text | json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out.out_path, "write output here instead of stdout");
        sub->add_option("--cap", cap, "enumeration cap on the placement support")->check(CLI::Range(1, 30));
    };
    auto placement_opts = [&](CLI::App* sub) {
        auto* a = sub->add_option("--set", set_text, "vertex set: labels, ids or named sets, comma separated");
        auto* b = sub->add_option("--placement", placement_text, "multiset placement, entries v or v:m");
        a->excludes(b);
    };

    auto* obs = app.add_subcommand("obs", "observed set and forcing trace");
    common(obs);
    placement_opts(obs);

    auto* expol = app.add_subcommand("expol", "expected value polynomial");
    common(expol);
    placement_opts(expol);
    expol->add_option("--q", q_text, "also evaluate at this failure probability");

    auto* check = app.add_subcommand("check", "characterization checks");
    common(check);
    placement_opts(check);
    check->add_option("which", which, "linear | degree | quadratic-identity | sign-audit | additivity")
        ->required()
        ->check(CLI::IsMember({"linear", "degree", "quadratic-identity", "sign-audit", "additivity"}));
    check->add_option("--degree", ell_check, "degree bound for the degree check");
    check->add_option("--expect", expect, "pass | fail")->check(CLI::IsMember({"pass", "fail"}));

    auto* compare = app.add_subcommand("compare", "does placement B dominate placement A");
    common(compare);
    compare->add_option("--set,--a", set_text, "placement A")->required();
    compare->add_option("--with,--b", other_text, "placement B")->required();
    compare->add_option("--expect", expect, "pass | fail")->check(CLI::IsMember({"pass", "fail"}));

    auto* build = app.add_subcommand("build", "attach gadgets to reach target coefficients");
    build->add_option("--job", job_path, "JSON job file")->required();
    build->add_option("--format", out.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    build->add_option("--out", out.out_path, "prefix for <out>.el and <out>.json");
    build->add_option("--cap", cap, "enumeration cap")->check(CLI::Range(1, 30));

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate");
    common(mc);
    placement_opts(mc);
    mc->add_option("--q", q_text, "failure probability")->required();
    mc->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed, "generator seed");

    auto* family = app.add_subcommand("family", "emit a named graph as edge list plus named sets");
    src.attach(family);
    family->add_option("--format", out.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    family->add_option("--out", out.out_path, "prefix for <out>.el and <out>.json");

    auto* gamma = app.add_subcommand("gamma", "power domination number by exhaustive search");
    common(gamma);
    gamma->add_option("--max-k", max_k, "largest set size to try")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            const json job = json::parse(read_file(job_path));
            if (!job.contains("graph") || !job.contains("placement") || !job.contains("targets"))
                throw input_error("job needs \"graph\", \"placement\" and \"targets\"");
            Loaded host;
            host.graph = parse_edge_list(job["graph"].get<std::string>());
            std::string ptext;
            for (const auto& [k, v] : job["placement"].items())
                ptext += k + ":" + std::to_string(v.get<unsigned>()) + ",";
            const Placement m = parse_placement(ptext, host);
            std::map<std::size_t, Integer> targets;
            for (const auto& [k, v] : job["targets"].items()) {
                std::size_t pos = 0;
                const auto key = std::stoull(k, &pos);
                if (pos != k.size()) throw input_error("target key \"" + k + "\" is not a power");
                targets[key] = v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<std::int64_t>());
            }
            BuildOptions opt;
            opt.cap = cap;
            const auto rep = target_coefficients(host.graph, m, targets, opt);
            json j;
            j["polynomial"] = numbers(rep.polynomial.coeffs());
            j["postcondition"] = rep.postcondition_holds;
            j["induced"] = rep.induced;
            j["sign_audit"] = rep.audit.passed;
            j["order"] = rep.result.order();
            json params = json::array();
            for (const auto& a : rep.parameters)
                params.push_back({{"power", a.power},
                                  {"affix", vertex_list(a.affix_set)},
                                  {"fork_length", a.fork_length},
                                  {"spoon_length", a.spoon_length},
                                  {"demand", number(a.demand)}});
            j["parameters"] = params;
            json leaves = json::object();
            for (auto [v, c] : rep.added_leaves) leaves[std::to_string(v)] = c;
            j["added_leaves"] = leaves;
            const std::string edge_list = serialize(rep.result);
            if (!out.out_path.empty()) {
                std::ofstream(out.out_path + ".el") << edge_list << "\n";
                std::ofstream(out.out_path + ".json") << j.dump(2) << "\n";
                std::cout << "wrote " << out.out_path << ".el and " << out.out_path << ".json\n";
            } else if (out.format == "json") {
                j["graph"] = edge_list;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "polynomial: " << rep.polynomial.to_string() << "\n"
                          << "vertices: " << rep.result.order() << "\n"
                          << "postcondition: " << (rep.postcondition_holds ? "pass" : "fail") << "\n"
                          << "induced: " << (rep.induced ? "yes" : "no") << "\n"
                          << "sign audit: " << (rep.audit.passed ? "pass" : "fail") << "\n";
                for (const auto& a : rep.parameters)
                    std::cout << "q^" << a.power << ": affix {" << join(a.affix_set) << "} fork " << a.fork_length
                              << " spoon " << a.spoon_length << "\n";
            }
            return rep.postcondition_holds && rep.induced && rep.audit.passed ? 0 : 1;
        }

        const Loaded g = src.load();

        if (family->parsed()) {
            json sets = json::object();
            for (const auto& [k, v] : g.sets) sets[k] = vertex_list(v);
            json side{{"family", src.family}, {"description", g.description}, {"order", g.graph.order()},
                      {"size", g.graph.size()}, {"sets", sets}};
            const std::string edge_list = serialize(g.graph);
            if (!out.out_path.empty()) {
                std::ofstream(out.out_path + ".el") << edge_list << "\n";
                std::ofstream(out.out_path + ".json") << side.dump(2) << "\n";
                std::cout << "wrote " << out.out_path << ".el and " << out.out_path << ".json\n";
            } else if (out.format == "json") {
                side["graph"] = edge_list;
                std::cout << side.dump(2) << "\n";
            } else {
                std::cout << edge_list << "\n";
            }
            return 0;
        }

        if (gamma->parsed()) {
            const auto k = power_domination_number(g.graph, max_k);
            json j{{"gamma_p", k ? json(*k) : json(nullptr)}, {"max_k", max_k}};
            out.emit(j, k ? "gamma_P = " + std::to_string(*k) + "\n"
                          : "gamma_P exceeds " + std::to_string(max_k) + "\n");
            return 0;
        }

        if (compare->parsed()) {
            const VertexSet a = require_set(parse_placement(set_text, g), "placement A");
            const VertexSet b = require_set(parse_placement(other_text, g), "placement B");
            const auto c = compare_placements(g.graph, a, b, cap);
            json j{{"verdict", to_string(c.verdict)},
                   {"lambda_a", numbers(c.lambda_a)},
                   {"lambda_b", numbers(c.lambda_b)},
                   {"poly_a", numbers(c.poly_a.coeffs())},
                   {"poly_b", numbers(c.poly_b.coeffs())},
                   {"grid", {{"negative", c.signs.negative}, {"zero", c.signs.zero}, {"positive", c.signs.positive}}},
                   {"grid_consistent", c.grid_consistent}};
            std::ostringstream t;
            t << "verdict: B " << to_string(c.verdict) << " A\n"
              << "E_A = " << c.poly_a.to_string() << "\n"
              << "E_B = " << c.poly_b.to_string() << "\n"
              << "grid (E_B - E_A): " << c.signs.negative << " negative, " << c.signs.zero << " zero, "
              << c.signs.positive << " positive\n";
            out.emit(j, t.str());
            if (!c.grid_consistent) return 1;
            return verdict_exit(c.verdict != Dominance::incomparable_by_sums, expect);
        }

        const Placement m = parse_placement(placement_text.empty() ? set_text : placement_text, g);

        if (obs->parsed()) {
            const VertexSet active = m.support();
            const auto r = observe(g.graph, active);
            json trace = json::array();
            for (auto f : r.trace) trace.push_back({f.forcer, f.forced});
            json j{{"count", r.observed.size()},
                   {"order", g.graph.order()},
                   {"power_dominating", r.observed.size() == g.graph.order()},
                   {"observed", vertex_list(r.observed)},
                   {"dominated", vertex_list(r.dominated)},
                   {"trace", trace}};
            std::ostringstream t;
            t << "observed " << r.observed.size() << " of " << g.graph.order() << "\n"
              << "observed: " << join(r.observed) << "\n"
              << "dominated: " << join(r.dominated) << "\n"
              << "trace:";
            for (auto f : r.trace) t << " " << f.forcer << "->" << f.forced;
            t << "\n";
            out.emit(j, t.str());
            return 0;
        }

        if (expol->parsed()) {
            const ExPoly e = m.is_set() ? expected_polynomial_set(g.graph, m.support(), cap)
                                        : expected_polynomial_multiset(g.graph, m, cap);
            json j = poly_json(e);
            std::string t = e.power.to_string() + "\n";
            if (!q_text.empty()) {
                const Rational q = parse_rational(q_text);
                if (q < 0 || q > 1) throw input_error("--q must lie in [0, 1]");
                const Rational v = e.power.evaluate(q);
                j["q"] = rational_string(q);
                j["value"] = rational_string(v);
                t += "E(" + rational_string(q) + ") = " + rational_string(v) + "\n";
            }
            out.emit(j, t);
            return 0;
        }

        if (mc->parsed()) {
            const Rational q = parse_rational(q_text);
            if (q < 0 || q > 1) throw input_error("--q must lie in [0, 1]");
            const auto est = monte_carlo_estimate(g.graph, m, q.convert_to<double>(), trials, seed);
            const ExPoly e = expected_polynomial_multiset(g.graph, m, cap);
            const double exact = e.power.evaluate(q).convert_to<double>();
            json j{{"mean", est.mean},   {"standard_error", est.standard_error}, {"trials", est.trials},
                   {"seed", seed},       {"q", rational_string(q)},             {"exact", exact}};
            std::ostringstream t;
            t.precision(10);
            t << "mean " << est.mean << " (standard error " << est.standard_error << ", " << est.trials
              << " trials)\nexact " << exact << "\n";
            out.emit(j, t.str());
            return 0;
        }

        if (check->parsed()) {
            json j{{"check", which}};
            std::ostringstream t;
            bool passed = false;
            if (which == "sign-audit") {
                const auto audit = coefficient_sign_audit(g.graph, m, cap);
                passed = audit.passed;
                json entries = json::array();
                for (const auto& en : audit.entries) {
                    entries.push_back({{"power", en.power},
                                       {"class", to_string(en.cls)},
                                       {"coefficient", number(en.coefficient)},
                                       {"ok", en.ok}});
                    t << "q^" << en.power << " " << to_string(en.cls) << " " << en.coefficient
                      << (en.ok ? "" : "  VIOLATION") << "\n";
                }
                j["entries"] = entries;
            } else {
                const VertexSet s = require_set(m, "this check");
                const ExPoly e = expected_polynomial_set(g.graph, s, cap);
                j["polynomial"] = poly_json(e);
                t << "E = " << e.power.to_string() << "\n";
                if (which == "linear") {
                    passed = degree_condition_check(e, 1).condition_holds;
                } else if (which == "degree") {
                    const auto d = degree_condition_check(e, ell_check);
                    passed = d.condition_holds;
                    j["degree"] = ell_check;
                    j["degree_at_most"] = d.degree_at_most;
                    t << "condition: " << (d.condition_holds ? "holds" : "fails") << "\n"
                      << "degree <= " << ell_check << ": " << (d.degree_at_most ? "yes" : "no") << "\n";
                } else if (which == "quadratic-identity") {
                    passed = quadratic_identity_check(e);
                } else {
                    const auto r = additivity_check(g.graph, s, cap);
                    passed = r.holds;
                    if (r.witness) {
                        j["witness"] = vertex_list(*r.witness);
                        j["observed"] = r.observed;
                        j["singleton_sum"] = r.singleton_sum;
                        t << "X = {" << join(*r.witness) << "}: |Obs| = " << r.observed << ", singleton sum "
                          << r.singleton_sum << "\n";
                    }
                }
            }
            j["result"] = passed ? "pass" : "fail";
            t << which << ": " << (passed ? "pass" : "fail") << "\n";
            out.emit(j, t.str());
            return verdict_exit(passed, expect);
        }
    } catch (const consistency_error& e) {
        std::cerr << "fragpd: internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "fragpd: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fragpd: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
