// Command-line workbench: every analysis is a subcommand with deterministic
// text or JSON output.
//
// exit codes: 0 success, 1 invalid input, 2 resource limit hit,
//             3 suite check failure, 4 internal error

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <hclif/json_io.hpp>
#include <hclif/parse.hpp>

#include "checks.hpp"

namespace {

using namespace hclif;

struct Options {
    int p = 5;
    std::string point;
    std::string coords = "a";
    std::string order = "grevlex";
    std::string format = "text";
    int max_degree = 4;
    int rep_index = 1;
    std::string element = "0,1,0";
    int limit_degree = 30;
    std::size_t limit_basis = 5000;
    bool dual = false;
};

std::string pkey(const ModuliPoint& pt) { return checks::detail::point_key(pt); }

ModuliPoint read_point(const Options& opt) {
    if (opt.point.empty()) throw invalid_input("--point is required for this command");
    return parse_point(opt.point, opt.p, opt.coords == "ABC");
}

MonomialOrder read_order(const Options& opt) {
    if (opt.order == "grevlex") return MonomialOrder::grevlex;
    if (opt.order == "lex") return MonomialOrder::lex;
    throw invalid_input("--order must be grevlex or lex");
}

std::vector<std::string> var_names(int p) {
    std::vector<std::string> names;
    for (int i = 0; i < p; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

void emit(const Json& j, const std::vector<std::string>& text_lines, const Options& opt) {
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& line : text_lines) std::cout << line << "\n";
    }
}

void cmd_analyze(const Options& opt) {
    auto pt = read_point(opt);
    auto ord = read_order(opt);
    GroebnerLimits lim{opt.limit_degree, opt.limit_basis};
    const int p = pt.p;

    auto rels = presentation_relations(pt);
    RowBasis<CycNum> span(p * p);
    for (const auto& r : rels) span.add(r);
    int rank = static_cast<int>(span.rows.size());

    auto qs = base_quadrics(pt, ord);
    auto an = analyze_base_locus(pt, lim, ord);
    bool quantum = is_quantum_point(pt);
    bool closed_form_known = p == 3 || p == 5;
    bool regular = closed_form_known ? is_regular_point(pt) : an.dim == -1;

    Json j;
    j["command"] = "analyze";
    j["p"] = p;
    j["point"] = json_point(pt);
    j["order"] = opt.order;
    j["relations"] = Json{{"count", rels.size()}, {"rank", rank}};
    Json jq = Json::array();
    for (const auto& q : qs) jq.push_back(poly_to_string(q, var_names(p)));
    j["dual_quadrics"] = jq;
    j["quantum"] = quantum;
    j["regular"] = regular;
    j["locus"] = json_locus(an);

    std::vector<std::string> text;
    text.push_back("point " + pkey(pt) + "  (p = " + std::to_string(p) + ")");
    if (p == 5) {
        auto abc = abc_coords(pt);
        j["abc"] = json_coords(abc);
        text.push_back("  (A:B:C) = " + checks::detail::proj_key(5, abc));
    }
    text.push_back("presentation: " + std::to_string(rels.size()) + " relations of rank " +
                   std::to_string(rank));
    text.push_back("dual quadrics (order " + opt.order + "):");
    for (int k = 0; k < p; ++k) text.push_back("  q" + std::to_string(k) + " = " + jq[k].get<std::string>());
    text.push_back(std::string("quantum member: ") + (quantum ? "yes" : "no"));
    text.push_back(std::string("regular (base-point-free): ") + (regular ? "yes" : "no") +
                   (closed_form_known ? " (closed form)" : " (by elimination)"));
    if (closed_form_known) {
        auto val = regular_locus_value(pt);
        j["closed_form_value"] = to_string(val);
        bool agree = (an.dim == -1) == !is_zero(val);
        j["closed_form_agrees"] = agree;
        text.push_back("  closed-form value " + to_string(val) +
                       (agree ? ", agrees with elimination" : ", DISAGREES with elimination"));
    }
    if (p == 5) {
        auto abc = abc_coords(pt);
        auto D = evaluate(discriminant_sum_form(), abc);
        auto conic = abc[0] * abc[1] + abc[2] * abc[2];
        j["discriminant"] = Json{{"D", to_string(D)},
                                 {"conic_AB_plus_C2", to_string(conic)},
                                 {"C", to_string(abc[2])}};
        text.push_back("discriminant D = " + to_string(D) + ", AB+C^2 = " + to_string(conic) +
                       ", C = " + to_string(abc[2]));
    }
    if (an.dim == -1) {
        text.push_back("base locus: empty; leading-ideal pure powers " +
                       checks::detail::join_int(an.pure_powers));
    } else {
        text.push_back("base locus: dim " + std::to_string(an.dim) + ", degree " +
                       an.degree.str() + ", series " + to_string(an.series));
        if (!an.verified_points.empty())
            text.push_back("  verified points: " + std::to_string(an.verified_points.size()));
        for (const auto& z : an.verified_points)
            text.push_back("    " + checks::detail::proj_key(p, z));
        for (const auto& [u, v] : an.coordinate_lines)
            text.push_back("  coordinate line span(e" + std::to_string(u) + ", e" +
                           std::to_string(v) + ")");
    }
    emit(j, text, opt);
}

void cmd_quantum(const Options& opt) {
    auto qs = quantum_points(opt.p);
    std::vector<ModuliPoint> sorted(qs.begin(), qs.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const ModuliPoint& x, const ModuliPoint& y) { return pkey(x) < pkey(y); });
    Json j;
    j["command"] = "quantum";
    j["p"] = opt.p;
    j["count"] = sorted.size();
    j["points"] = json_points(sorted);
    std::vector<std::string> text;
    text.push_back(std::to_string(sorted.size()) + " quantum points at p = " +
                   std::to_string(opt.p));
    for (const auto& q : sorted) {
        std::string line = "  " + pkey(q);
        if (opt.p == 5 && opt.coords == "ABC")
            line += "  (A:B:C) = " + checks::detail::proj_key(5, abc_coords(q));
        text.push_back(line);
    }
    emit(j, text, opt);
}

void cmd_orbit(const Options& opt) {
    auto pt = read_point(opt);
    auto orb = moduli_orbit(pt);
    std::vector<ModuliPoint> sorted(orb.begin(), orb.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const ModuliPoint& x, const ModuliPoint& y) { return pkey(x) < pkey(y); });
    Json j;
    j["command"] = "orbit";
    j["p"] = opt.p;
    j["point"] = json_point(pt);
    j["count"] = sorted.size();
    j["points"] = json_points(sorted);
    std::vector<std::string> text;
    text.push_back("orbit of " + pkey(pt) + " has " + std::to_string(sorted.size()) + " points");
    for (const auto& q : sorted) text.push_back("  " + pkey(q));
    emit(j, text, opt);
}

void cmd_fixed_points(const Options& opt) {
    HeisenbergGroup G(opt.p);
    auto parts = parsedetail::split_commas(opt.element);
    if (parts.size() != 3) throw invalid_input("--element takes r,s,t integers");
    int r, s, t;
    try {
        r = std::stoi(parts[0]);
        s = std::stoi(parts[1]);
        t = std::stoi(parts[2]);
    } catch (...) {
        throw invalid_input("--element takes r,s,t integers");
    }
    auto h = G.make(r, s, t);
    auto fps = projective_fixed_points(G, opt.rep_index, h);
    std::set<std::string> keys;
    for (const auto& z : fps) keys.insert(checks::detail::proj_key(opt.p, z));
    Json j;
    j["command"] = "fixed-points";
    j["p"] = opt.p;
    j["element"] = to_string(h);
    j["rep"] = opt.rep_index;
    j["count"] = keys.size();
    Json arr = Json::array();
    for (const auto& k : keys) arr.push_back(k);
    j["points"] = arr;
    std::vector<std::string> text;
    text.push_back("fixed points of " + to_string(h) + " on P(V_" +
                   std::to_string(opt.rep_index) + "), p = " + std::to_string(opt.p));
    for (const auto& k : keys) text.push_back("  " + k);
    emit(j, text, opt);
}

void cmd_char_series(const Options& opt) {
    auto pt = read_point(opt);
    HeisenbergGroup G(opt.p);
    GradedAlgebra A(clifford_algebra(pt));
    auto cs = character_series(A, G, opt.max_degree, opt.dual);
    Json j = json_char_series(cs);
    j["command"] = "char-series";
    j["point"] = json_point(pt);
    j["dual_side"] = opt.dual;
    std::vector<std::string> text;
    text.push_back(std::string("graded characters of the ") + (opt.dual ? "dual of the " : "") +
                   "member at " + pkey(pt) + " through degree " + std::to_string(opt.max_degree));
    for (std::size_t c = 0; c < cs.reps.size(); ++c) {
        std::string row = "  class " + to_string(cs.reps[c]) + ": ";
        for (int n = 0; n <= cs.upto; ++n) row += (n ? ", " : "") + to_string(cs.coeff[c][n]);
        text.push_back(row);
    }
    emit(j, text, opt);
}

int cmd_suite(const std::string& name, const Options& opt) {
    auto names = checks::suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string all;
        for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
        throw invalid_input("unknown suite '" + name + "' (available: " + all + ")");
    }
    bool pass = true;
    Json checks_json = Json::array();
    std::vector<std::string> text;
    for (const auto& entry : checks::registry()) {
        if (std::find(entry.suites.begin(), entry.suites.end(), name) == entry.suites.end())
            continue;
        auto res = entry.run();
        pass = pass && res.pass;
        Json cj;
        cj["slug"] = res.slug;
        cj["pass"] = res.pass;
        cj["lines"] = res.lines;
        checks_json.push_back(cj);
        text.push_back(std::string(res.pass ? "PASS " : "FAIL ") + res.slug);
        for (const auto& line : res.lines) text.push_back("  " + line);
    }
    text.push_back(std::string("suite ") + name + ": " + (pass ? "all checks passed" : "FAILURES"));
    Json j;
    j["command"] = "suite";
    j["suite"] = name;
    j["pass"] = pass;
    j["checks"] = checks_json;
    emit(j, text, opt);
    return pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the Clifford-type quadratic family and its symmetries"};
    app.require_subcommand(1);
    Options opt;
    int rc = 0;

    auto add_common = [&](CLI::App* sub, bool with_point) {
        sub->add_option("--p", opt.p, "odd prime (3, 5, or 7)")->capture_default_str();
        if (with_point)
            sub->add_option("--point", opt.point,
                            "coordinates: h+1 projective or h affine entries, 'inf' at p=3; "
                            "entries use integers, n/d, and w-expressions with + - * ^");
        sub->add_option("--coords", opt.coords, "input/display convention: a or ABC (p=5)")
            ->check(CLI::IsMember({"a", "ABC"}))
            ->capture_default_str();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    auto* analyze = app.add_subcommand("analyze", "presentation, quadrics, base locus, regularity");
    add_common(analyze, true);
    analyze->add_option("--order", opt.order, "monomial order for the elimination")
        ->check(CLI::IsMember({"grevlex", "lex"}))
        ->capture_default_str();
    analyze->add_option("--limit-degree", opt.limit_degree, "S-polynomial degree cap")
        ->capture_default_str();
    analyze->add_option("--limit-basis", opt.limit_basis, "basis size cap")->capture_default_str();
    analyze->callback([&] { cmd_analyze(opt); });

    auto* quantum = app.add_subcommand("quantum", "the finitely many quantum members");
    add_common(quantum, false);
    quantum->callback([&] { cmd_quantum(opt); });

    auto* orbit = app.add_subcommand("orbit", "orbit of a parameter point under the two twists");
    add_common(orbit, true);
    orbit->callback([&] { cmd_orbit(opt); });

    auto* fixed = app.add_subcommand("fixed-points", "eigenlines of a group element on P(V_i)");
    add_common(fixed, false);
    fixed->add_option("--element", opt.element, "group element as r,s,t")->capture_default_str();
    fixed->add_option("--rep", opt.rep_index, "which p-dimensional module V_i")
        ->capture_default_str();
    fixed->callback([&] { cmd_fixed_points(opt); });

    auto* cseries = app.add_subcommand("char-series", "graded character table of a member");
    add_common(cseries, true);
    cseries->add_option("--max-degree", opt.max_degree, "truncation degree")
        ->capture_default_str();
    cseries->add_flag("--dual", opt.dual, "use the Koszul dual side");
    cseries->callback([&] { cmd_char_series(opt); });

    auto* suite = app.add_subcommand("suite", "run a named batch of published-value checks");
    std::string suite_name;
    suite->add_option("name", suite_name, "p3-paper, p5-paper, p7-general, charseries, koszul")
        ->required();
    suite->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    suite->callback([&] { rc = cmd_suite(suite_name, opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const hclif::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const hclif::resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return rc;
}
