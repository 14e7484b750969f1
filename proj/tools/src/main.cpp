#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chromaprob/chromatic.hpp"
#include "chromaprob/cluster.hpp"
#include "chromaprob/coloring_prob.hpp"
#include "chromaprob/distribution.hpp"
#include "chromaprob/graph.hpp"
#include "chromaprob/mono_tolerance.hpp"
#include "chromaprob/simplex.hpp"
#include "chromaprob/symfunc.hpp"

namespace cp = chromaprob;
using json = nlohmann::ordered_json;

namespace {

struct GlobalOptions {
    unsigned long long seed = 20240214ULL;
    int threads = 1;
    long long max_states = cp::kDefaultMaxStates;
    bool json_output = false;
    std::string out_path;
};

cp::Graph load_graph(const std::string& arg) {
    const std::string prefix = "named:";
    if (arg.rfind(prefix, 0) == 0) return cp::named_graph(arg.substr(prefix.size()));
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open graph file '" + arg + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return cp::parse_edge_list(buffer.str());
}

std::string rat_str(const cp::Rational& x) { return cp::rational_to_string(x); }

json partition_json(const cp::Partition& lambda) {
    json a = json::array();
    for (int part : lambda) a.push_back(part);
    return a;
}

json distribution_json(const cp::Distribution& d) {
    json a = json::array();
    for (const auto& entry : d.p) a.push_back(rat_str(entry));
    return a;
}

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void render_human(std::ostream& os, const json& results) {
    for (const auto& [key, value] : results.items()) {
        if (value.is_array() && !value.empty() && value[0].is_object() &&
            value[0].contains("check")) {
            os << key << ":\n";
            for (const auto& item : value) {
                os << "  [" << (item["holds"].get<bool>() ? "ok" : "FAIL") << "] "
                   << item["check"].get<std::string>() << "\n";
            }
            continue;
        }
        os << key << ": ";
        if (value.is_string())
            os << value.get<std::string>();
        else
            os << value.dump();
        os << "\n";
    }
}

int emit_report(const GlobalOptions& opt, const std::string& command, const json& inputs,
                const json& results, std::chrono::steady_clock::time_point start,
                int exit_code) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

    std::ostringstream text;
    if (opt.json_output) {
        json report;
        report["command"] = command;
        report["inputs"] = inputs;
        report["results"] = results;
        report["timing_ms"] = ms;
        text << report.dump(2) << "\n";
    } else {
        text << "command: " << command << "\n";
        render_human(text, results);
    }

    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << opt.out_path << "'\n";
            return 2;
        }
        out << text.str();
    } else {
        std::cout << text.str();
    }
    return exit_code;
}

struct CheckList {
    json checks = json::array();
    bool ok = true;
    void record(const std::string& name, bool holds) {
        checks.push_back(json{{"check", name}, {"holds", holds}});
        ok = ok && holds;
    }
};

// ---------------------------------------------------------------- commands

int cmd_graph(const GlobalOptions& opt, const std::string& graph_arg) {
    auto start = std::chrono::steady_clock::now();
    cp::Graph g = load_graph(graph_arg);
    json results;
    results["n"] = g.n;
    results["m"] = (long long)g.edges.size();
    results["max_degree"] = cp::max_degree(g);
    results["connected"] = cp::is_connected(g);
    results["components"] = (long long)cp::connected_components(g).size();
    results["bipartite"] = cp::is_bipartite(g);
    results["claw_free"] = cp::is_claw_free(g);
    results["triangles"] = cp::triangle_count(g);
    results["spanning_trees"] = cp::spanning_tree_count(g).str();
    return emit_report(opt, "graph", json{{"graph", graph_arg}}, results, start, 0);
}

int cmd_chromatic(const GlobalOptions& opt, const std::string& graph_arg, long long q) {
    auto start = std::chrono::steady_clock::now();
    cp::Graph g = load_graph(graph_arg);
    cp::UnivariatePolynomial chi = cp::chromatic_polynomial(g, opt.max_states);
    json results;
    results["degree"] = chi.degree();
    json coeffs = json::array();
    for (const auto& c : chi.c) coeffs.push_back(c.str());
    results["coefficients_low_to_high"] = coeffs;
    if (q >= 0) {
        cp::Int value = cp::chromatic_eval(g, cp::Int(q), opt.max_states);
        results["colorings_at_q"] = value.str();
        if (q >= 1)
            results["uniform_probability"] =
                rat_str(cp::uniform_proper_probability(g, cp::Int(q), opt.max_states));
    }
    return emit_report(opt, "chromatic", json{{"graph", graph_arg}, {"q", q}}, results,
                       start, 0);
}

int cmd_prob(const GlobalOptions& opt, const std::string& graph_arg,
             const std::string& dist_arg) {
    auto start = std::chrono::steady_clock::now();
    cp::Graph g = load_graph(graph_arg);
    cp::Distribution p = cp::parse_distribution(dist_arg);
    cp::Rational value = cp::proper_probability(g, p, opt.max_states);
    json results;
    results["q"] = (long long)p.p.size();
    results["probability"] = rat_str(value);
    results["probability_double"] = cp::rational_to_double(value);
    return emit_report(opt, "prob", json{{"graph", graph_arg}, {"dist", dist_arg}}, results,
                       start, 0);
}

int cmd_kprob(const GlobalOptions& opt, const std::string& graph_arg,
              const std::string& dist_arg, int k) {
    auto start = std::chrono::steady_clock::now();
    cp::Graph g = load_graph(graph_arg);
    cp::Distribution p = cp::parse_distribution(dist_arg);
    cp::Rational value = cp::at_most_k_probability(g, p, k, opt.max_states, opt.threads);
    json results;
    results["k"] = k;
    results["probability"] = rat_str(value);
    results["probability_double"] = cp::rational_to_double(value);
    return emit_report(opt, "kprob",
                       json{{"graph", graph_arg}, {"dist", dist_arg}, {"k", k}}, results,
                       start, 0);
}

int cmd_distribution(const GlobalOptions& opt, const std::string& dist_arg) {
    auto start = std::chrono::steady_clock::now();
    cp::Distribution p = cp::parse_distribution(dist_arg);
    json results;
    results["q"] = (long long)p.p.size();
    results["entries"] = distribution_json(p);
    results["uniform"] = cp::is_uniform(p);
    return emit_report(opt, "distribution", json{{"dist", dist_arg}}, results, start, 0);
}

std::vector<cp::Rational> snap_to_simplex(const std::vector<double>& x, long long denom) {
    std::vector<cp::Int> counts(x.size());
    cp::Int total = 0;
    std::size_t big = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        long long r = std::llround(x[i] * (double)denom);
        r = std::clamp(r, 0LL, denom);
        counts[i] = r;
        total += r;
        if (x[i] > x[big]) big = i;
    }
    counts[big] += cp::Int(denom) - total;
    std::vector<cp::Rational> entries;
    entries.reserve(x.size());
    for (const auto& c : counts) entries.emplace_back(c, cp::Int(denom));
    return entries;
}

int cmd_optimize(const GlobalOptions& opt, const std::string& graph_arg, int q,
                 int restarts, double tolerance, long long snap_denominator) {
    auto start = std::chrono::steady_clock::now();
    cp::Graph g = load_graph(graph_arg);
    cp::ProfileTable table = cp::build_profile_table(g, q, opt.max_states);
    cp::Objective objective = [&table](const std::vector<double>& p) {
        return cp::evaluate_profile_table(table, p);
    };
    cp::MaximizeResult best = cp::maximize_over_simplex(objective, q, restarts, tolerance);

    std::vector<cp::Rational> snapped = snap_to_simplex(best.argmax, snap_denominator);
    cp::Distribution snapped_dist = cp::make_distribution(snapped);
    cp::Rational snapped_value = cp::evaluate_profile_table(table, snapped_dist);
    cp::Rational uniform_value =
        cp::evaluate_profile_table(table, cp::uniform_distribution(q));

    json results;
    json argmax = json::array();
    for (double v : best.argmax) argmax.push_back(v);
    results["argmax"] = argmax;
    results["value"] = best.value;
    results["converged"] = best.converged;
    results["snapped_argmax"] = distribution_json(snapped_dist);
    results["snapped_value"] = rat_str(snapped_value);
    results["uniform_value"] = rat_str(uniform_value);
    results["uniform_at_least_snapped"] = uniform_value >= snapped_value;
    return emit_report(opt, "optimize",
                       json{{"graph", graph_arg},
                            {"q", q},
                            {"restarts", restarts},
                            {"tolerance", tolerance},
                            {"snap_denominator", snap_denominator}},
                       results, start, 0);
}

int cmd_schur_scan(const GlobalOptions& opt, const std::string& graph_arg, int q,
                   int samples) {
    auto start = std::chrono::steady_clock::now();
    cp::Graph g = load_graph(graph_arg);
    cp::SchurScanReport report =
        cp::schur_concavity_scan(g, q, samples, opt.seed, opt.max_states);
    json results;
    results["samples"] = samples;
    results["seed"] = opt.seed;
    results["holds_on_samples"] = report.holds_on_samples;
    if (!report.holds_on_samples) {
        results["point"] = distribution_json(report.point);
        results["pinched"] = distribution_json(report.pinched);
        results["point_value"] = rat_str(report.point_value);
        results["pinched_value"] = rat_str(report.pinched_value);
    }
    return emit_report(opt, "schur-scan",
                       json{{"graph", graph_arg}, {"q", q}, {"samples", samples}}, results,
                       start, 0);
}

int cmd_scan(const GlobalOptions& opt, const std::string& graph_arg, int q, int k,
             int grid) {
    auto start = std::chrono::steady_clock::now();
    cp::Graph g = load_graph(graph_arg);
    cp::UniformScanReport report =
        cp::p_uniform_scan(g, q, k, grid, opt.max_states, opt.threads);
    json results;
    results["grid_denominator"] = grid;
    results["is_uniform_max_on_grid"] = report.is_uniform_max_on_grid;
    results["uniform_value"] = rat_str(report.uniform_value);
    results["best_point"] = distribution_json(report.best_point);
    results["best_value"] = rat_str(report.best_value);
    return emit_report(opt, "scan",
                       json{{"graph", graph_arg}, {"q", q}, {"k", k}, {"grid", grid}},
                       results, start, 0);
}

json symmetric_terms_json(const std::map<cp::Partition, cp::Rational, cp::PartitionOrder>& terms) {
    json rows = json::array();
    for (const auto& [lambda, coeff] : terms) {
        rows.push_back(
            json{{"partition", partition_json(lambda)}, {"coefficient", rat_str(coeff)}});
    }
    return rows;
}

int cmd_csf(const GlobalOptions& opt, const std::string& graph_arg, int q) {
    auto start = std::chrono::steady_clock::now();
    cp::Graph g = load_graph(graph_arg);
    cp::SymmetricPolynomial f = cp::chromatic_symmetric_function(g, q, opt.max_states);
    json results;
    results["q"] = q;
    results["degree"] = cp::max_degree(f);
    results["term_count"] = (long long)f.terms.size();
    results["monomial_terms"] = symmetric_terms_json(f.terms);
    return emit_report(opt, "csf", json{{"graph", graph_arg}, {"q", q}}, results, start, 0);
}

int cmd_epos(const GlobalOptions& opt, const std::string& graph_arg, int q) {
    auto start = std::chrono::steady_clock::now();
    cp::Graph g = load_graph(graph_arg);
    cp::SymmetricPolynomial f = cp::chromatic_symmetric_function(g, q, opt.max_states);
    auto basis = cp::elementary_basis(f);
    json results;
    results["q"] = q;
    results["e_positive"] = cp::is_e_positive(f);
    results["elementary_coefficients"] = symmetric_terms_json(basis);
    return emit_report(opt, "epos", json{{"graph", graph_arg}, {"q", q}}, results, start, 0);
}

int cmd_bounds(const GlobalOptions& opt, const std::string& graph_arg, int m_max) {
    auto start = std::chrono::steady_clock::now();
    cp::Graph g = load_graph(graph_arg);
    int delta = cp::max_degree(g);
    json results;
    results["max_degree"] = delta;

    cp::CoefficientBoundReport report = cp::coefficient_bound_report(g, m_max);
    results["in_stated_regime"] = report.in_stated_regime;
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back(json{{"alpha", partition_json(row.alpha)},
                            {"coefficient", rat_str(row.coefficient)},
                            {"bound", rat_str(row.bound)},
                            {"within", row.within}});
    }
    results["coefficient_rows"] = rows;

    if (delta >= 1) {
        results["threshold_q_main"] = cp::threshold_q_main(delta).str();
        results["threshold_q_shameful"] = cp::threshold_q_shameful(delta).str();
        results["threshold_q_nonvanishing"] = cp::threshold_q_nonvanishing(delta).str();
    }
    if (delta >= 2) {
        try {
            results["spanning_tree_bound"] = rat_str(cp::t_n_delta(g.n, delta));
        } catch (const cp::resource_limit_error&) {
            results["spanning_tree_bound"] = "skipped";
        }
    }
    if (cp::is_connected(g) && g.edges.size() <= 24) {
        cp::PenroseReport penrose = cp::penrose_check(g);
        results["penrose"] = json{{"signed_sum", penrose.signed_sum.str()},
                                  {"trees", penrose.trees.str()},
                                  {"holds", penrose.holds}};
    }
    return emit_report(opt, "bounds", json{{"graph", graph_arg}, {"m_max", m_max}}, results,
                       start, 0);
}

// ---------------------------------------------------------------- reproduce

void reproduce_star(const GlobalOptions& opt, CheckList& list, json& results) {
    cp::Graph g = cp::star_graph(4);
    cp::Distribution half = cp::uniform_distribution(2);
    cp::Distribution skew =
        cp::make_distribution({cp::Rational(1, 5), cp::Rational(4, 5)});
    cp::Rational p_half = cp::proper_probability(g, half, opt.max_states);
    cp::Rational p_skew = cp::proper_probability(g, skew, opt.max_states);
    results["uniform_value"] = rat_str(p_half);
    results["skewed_value"] = rat_str(p_skew);
    list.record("P(1/2,1/2) equals 1/16", p_half == cp::Rational(1, 16));
    list.record("P(1/5,4/5) equals 260/3125", p_skew == cp::Rational(260, 3125));
    list.record("skewed beats uniform", p_skew > p_half);
    list.record("closed form agrees at both points",
                cp::star_closed_form(4, half) == p_half &&
                    cp::star_closed_form(4, skew) == p_skew);
}

void reproduce_tree(const GlobalOptions& opt, CheckList& list, json& results) {
    auto [even1, odd1] = cp::ternary_tree_layer_counts(1);
    auto [even2, odd2] = cp::ternary_tree_layer_counts(2);
    results["layer_counts_k1"] = json{{"even", even1}, {"odd", odd1}};
    results["layer_counts_k2"] = json{{"even", even2}, {"odd", odd2}};
    list.record("depth-2 tree has 5 even-layer and 2 odd-layer vertices",
                even1 == 5 && odd1 == 2);
    list.record("depth-4 tree has 21 even-layer and 10 odd-layer vertices",
                even2 == 21 && odd2 == 10);

    cp::Rational half1 = cp::ternary_tree_closed_form(1, cp::Rational(1, 2));
    cp::Rational skew1 = cp::ternary_tree_closed_form(1, cp::Rational(2, 5));
    results["k1_uniform_value"] = rat_str(half1);
    results["k1_skewed_value"] = rat_str(skew1);
    list.record("k=1 uniform value equals 1/64", half1 == cp::Rational(1, 64));
    list.record("k=1 closed form matches direct probability",
                half1 == cp::proper_probability(cp::ternary_tree_graph(1),
                                                cp::uniform_distribution(2),
                                                opt.max_states));
    list.record("k=1 value at p1=2/5 equals 1260/78125",
                skew1 == cp::Rational(1260, 78125));
    list.record("k=1 skewed beats uniform", skew1 > half1);

    cp::Rational half2 = cp::ternary_tree_closed_form(2, cp::Rational(1, 2));
    cp::Rational skew2 = cp::ternary_tree_closed_form(2, cp::Rational(10, 21));
    results["k2_uniform_value"] = rat_str(half2);
    results["k2_skewed_value"] = rat_str(skew2);
    list.record("k=2 uniform value equals 1/2^30",
                half2 == cp::Rational(cp::Int(1), cp::int_pow(cp::Int(2), 30)));
    list.record("k=2 value at p1=10/21 beats uniform", skew2 > half2);
}

void reproduce_figure1(const GlobalOptions& opt, CheckList& list, json& results) {
    cp::Graph g = cp::figure1_graph();
    list.record("graph has 19 vertices and 78 edges", g.n == 19 && g.edges.size() == 78);

    cp::Distribution half = cp::uniform_distribution(2);
    cp::EdgeCountDistribution pmf_half =
        cp::mono_edge_distribution(g, half, opt.max_states, opt.threads);
    bool below_zero = true;
    for (int j = 0; j < 30 && j < (int)pmf_half.pmf.size(); ++j)
        below_zero = below_zero && pmf_half.pmf[j] == 0;
    cp::Rational at_half = pmf_half.cumulative(30);
    results["uniform_value"] = rat_str(at_half);
    list.record("no coloring leaves fewer than 30 monochromatic edges", below_zero);
    list.record("P(30 tolerated, uniform) equals 1/262144",
                at_half == cp::Rational(1, 262144));

    cp::Distribution skew =
        cp::make_distribution({cp::Rational(2, 5), cp::Rational(3, 5)});
    cp::Rational at_skew =
        cp::mono_edge_distribution(g, skew, opt.max_states, opt.threads).cumulative(30);
    cp::Rational expected =
        cp::rat_pow(cp::Rational(2, 5), 7) * cp::rat_pow(cp::Rational(3, 5), 12) +
        cp::rat_pow(cp::Rational(3, 5), 7) * cp::rat_pow(cp::Rational(2, 5), 12);
    results["skewed_value"] = rat_str(at_skew);
    list.record("P(30 tolerated, (2/5,3/5)) equals (2/5)^7(3/5)^12 + (3/5)^7(2/5)^12",
                at_skew == expected);
    list.record("skewed beats uniform", at_skew > at_half);
}

void reproduce_birthday(const GlobalOptions&, CheckList& list, json& results) {
    int minimal = cp::minimal_birthday_n(365, cp::Rational(1, 2));
    results["minimal_n"] = minimal;
    list.record("minimal group size equals 23", minimal == 23);

    cp::Rational p23 = cp::uniform_birthday_probability(23, 365);
    cp::Rational p22 = cp::uniform_birthday_probability(22, 365);
    results["all_distinct_at_23"] = rat_str(p23);
    results["all_distinct_at_22"] = rat_str(p22);
    list.record("all-distinct probability at 23 is below 1/2", p23 < cp::Rational(1, 2));
    list.record("all-distinct probability at 22 is above 1/2", p22 > cp::Rational(1, 2));
    list.record("elementary symmetric route agrees at 23",
                cp::birthday_probability(23, cp::uniform_distribution(365)) == p23);
}

void reproduce_shameful(const GlobalOptions& opt, CheckList& list, json& results) {
    int found = -1;
    for (int n = 2; n <= 16; ++n) {
        cp::Graph g = cp::complete_bipartite_graph(n, n);
        if (!cp::shameful_ratio_monotone(g, cp::Int(3), opt.max_states)) {
            found = n;
            break;
        }
    }
    results["minimal_n"] = found;
    list.record("a violation exists for some n at q=3", found != -1);
    list.record("the minimal violating n equals 10", found == 10);
    if (found != -1) {
        cp::Graph g = cp::complete_bipartite_graph(found, found);
        cp::Rational two = cp::uniform_proper_probability(g, cp::Int(2), opt.max_states);
        cp::Rational three = cp::uniform_proper_probability(g, cp::Int(3), opt.max_states);
        results["uniform_probability_q2"] = rat_str(two);
        results["uniform_probability_q3"] = rat_str(three);
        list.record("two colors beat three colors at the violation", two > three);
    }
}

void reproduce_schur51(const GlobalOptions&, CheckList& list, json& results) {
    cp::SymmetricPolynomial s = cp::schur_function(cp::Partition{5, 1}, 2);
    std::map<cp::Partition, cp::Rational, cp::PartitionOrder> expected;
    expected[cp::Partition{5, 1}] = 1;
    expected[cp::Partition{4, 2}] = 1;
    expected[cp::Partition{3, 3}] = 1;
    list.record("two-variable expansion is m(5,1)+m(4,2)+m(3,3)", s.terms == expected);

    const int denom = 10;
    std::vector<cp::Distribution> grid;
    std::vector<cp::Rational> values;
    for (int i = 0; i <= denom; ++i) {
        cp::Distribution d = cp::make_distribution(
            {cp::Rational(i, denom), cp::Rational(denom - i, denom)});
        grid.push_back(d);
        values.push_back(cp::evaluate_symmetric(s, d));
    }
    bool violation = false;
    for (std::size_t a = 0; a < grid.size() && !violation; ++a) {
        for (std::size_t b = 0; b < grid.size() && !violation; ++b) {
            if (a == b) continue;
            std::vector<cp::Rational> va = grid[a].p;
            std::vector<cp::Rational> vb = grid[b].p;
            std::sort(va.begin(), va.end());
            std::sort(vb.begin(), vb.end());
            if (va == vb) continue;
            if (cp::majorizes(grid[a], grid[b]) && values[a] > values[b]) {
                violation = true;
                results["witness_higher"] = distribution_json(grid[a]);
                results["witness_lower"] = distribution_json(grid[b]);
                results["value_higher"] = rat_str(values[a]);
                results["value_lower"] = rat_str(values[b]);
            }
        }
    }
    list.record("grid search finds a Schur concavity violation", violation);

    cp::Rational at_skew = cp::evaluate_symmetric(
        s, cp::make_distribution({cp::Rational(3, 5), cp::Rational(2, 5)}));
    cp::Rational at_half = cp::evaluate_symmetric(s, cp::uniform_distribution(2));
    results["value_at_3_5"] = rat_str(at_skew);
    results["value_at_half"] = rat_str(at_half);
    list.record("s(3/5,2/5) exceeds s(1/2,1/2) although (3/5,2/5) majorizes",
                at_skew > at_half && at_skew == cp::Rational(1266, 15625) &&
                    at_half == cp::Rational(5, 64));
}

void reproduce_epositive(const GlobalOptions& opt, CheckList& list, json& results) {
    using Basis = std::map<cp::Partition, cp::Rational, cp::PartitionOrder>;

    cp::SymmetricPolynomial f1 = cp::monomial_basis_element(cp::Partition{2}, 2);
    cp::SymmetricPolynomial four = cp::sym_scale(
        cp::monomial_basis_element(cp::Partition{1, 1}, 2), cp::Rational(4));
    f1 = cp::sym_add(f1, four);
    Basis b1 = cp::elementary_basis(f1);
    Basis expect1;
    expect1[cp::Partition{1, 1}] = 1;
    expect1[cp::Partition{2}] = 2;
    results["square_plus_cross"] = symmetric_terms_json(b1);
    list.record("x1^2+4x1x2+x2^2 expands to e1^2 + 2 e2", b1 == expect1);
    list.record("x1^2+4x1x2+x2^2 is e-positive", cp::is_e_positive(f1));

    cp::SymmetricPolynomial f2 = cp::monomial_basis_element(cp::Partition{2}, 2);
    Basis b2 = cp::elementary_basis(f2);
    Basis expect2;
    expect2[cp::Partition{1, 1}] = 1;
    expect2[cp::Partition{2}] = -2;
    results["sum_of_squares"] = symmetric_terms_json(b2);
    list.record("x1^2+x2^2 expands to e1^2 - 2 e2", b2 == expect2);
    list.record("x1^2+x2^2 is not e-positive", !cp::is_e_positive(f2));

    cp::SymmetricPolynomial csf =
        cp::chromatic_symmetric_function(cp::complete_graph(2), 3, opt.max_states);
    cp::SymmetricPolynomial expected_csf = cp::sym_scale(
        cp::monomial_basis_element(cp::Partition{1, 1}, 3), cp::Rational(2));
    Basis b3 = cp::elementary_basis(csf);
    Basis expect3;
    expect3[cp::Partition{2}] = 2;
    results["edge_csf"] = symmetric_terms_json(b3);
    list.record("the one-edge coloring function is 2 m(1,1) in three variables",
                csf.terms == expected_csf.terms);
    list.record("it expands to 2 e2 and is e-positive",
                b3 == expect3 && cp::is_e_positive(csf));
}

int cmd_reproduce(const GlobalOptions& opt, const std::string& target) {
    auto start = std::chrono::steady_clock::now();
    CheckList list;
    json results;
    if (target == "star")
        reproduce_star(opt, list, results);
    else if (target == "tree")
        reproduce_tree(opt, list, results);
    else if (target == "figure1")
        reproduce_figure1(opt, list, results);
    else if (target == "birthday")
        reproduce_birthday(opt, list, results);
    else if (target == "shameful")
        reproduce_shameful(opt, list, results);
    else if (target == "schur51")
        reproduce_schur51(opt, list, results);
    else if (target == "epositive")
        reproduce_epositive(opt, list, results);
    else
        throw std::invalid_argument("unknown reproduce target '" + target + "'");
    results["checks"] = list.checks;
    results["all_hold"] = list.ok;
    return emit_report(opt, "reproduce", json{{"target", target}}, results, start,
                       list.ok ? 0 : 1);
}

// -------------------------------------------------------------------- sweep

int cmd_sweep(const GlobalOptions& opt, const std::string& target, int resolution,
              const std::string& csv_path) {
    auto start = std::chrono::steady_clock::now();
    if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    std::ofstream csv(csv_path);
    if (!csv) throw std::invalid_argument("cannot write '" + csv_path + "'");

    long long rows = 0;
    int steps = resolution - 1;
    if (target == "star_curve") {
        csv << "p1,P\n";
        for (int i = 0; i <= steps; ++i) {
            cp::Rational p1(i, steps);
            cp::Distribution d = cp::make_distribution({p1, cp::Rational(1) - p1});
            cp::Rational value = cp::star_closed_form(4, d);
            csv << format_g12(cp::rational_to_double(p1)) << ","
                << format_g12(cp::rational_to_double(value)) << "\n";
            ++rows;
        }
    } else if (target == "contour4star") {
        csv << "p1,p2,P\n";
        for (int i = 0; i <= steps; ++i) {
            for (int j = 0; j + i <= steps; ++j) {
                cp::Rational p1(i, steps);
                cp::Rational p2(j, steps);
                cp::Distribution d = cp::make_distribution(
                    {p1, p2, cp::Rational(1) - p1 - p2});
                cp::Rational value = cp::star_closed_form(4, d);
                csv << format_g12(cp::rational_to_double(p1)) << ","
                    << format_g12(cp::rational_to_double(p2)) << ","
                    << format_g12(cp::rational_to_double(value)) << "\n";
                ++rows;
            }
        }
    } else {
        throw std::invalid_argument("unknown sweep target '" + target + "'");
    }
    csv.close();

    json results;
    results["target"] = target;
    results["resolution"] = resolution;
    results["rows"] = rows;
    results["csv"] = csv_path;
    GlobalOptions stdout_opt = opt;
    stdout_opt.out_path.clear();
    return emit_report(stdout_opt, "sweep",
                       json{{"target", target}, {"resolution", resolution}}, results, start,
                       0);
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOptions opt;
    CLI::App app{"exact proper-coloring probabilities, tolerant extensions, and "
                 "symmetric-function diagnostics"};
    app.require_subcommand(1);
    app.add_option("--seed", opt.seed, "seed for randomized scans");
    app.add_option("--threads", opt.threads, "worker threads for two-color sweeps")
        ->check(CLI::Range(1, 64));
    app.add_option("--max-states", opt.max_states, "enumeration state budget")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", opt.json_output, "emit a JSON run report");
    app.add_option("--out", opt.out_path, "write the report (or CSV for sweep) to a file");

    std::string graph_arg, dist_arg, target;
    long long q_opt = -1;
    int q = 2, k = 0, samples = 200, restarts = 16, grid = 8, m_max = 4, resolution = 0;
    double tolerance = 1e-10;
    long long snap_denominator = 1000000;

    auto* graph_cmd = app.add_subcommand("graph", "structural summary of a graph");
    graph_cmd->add_option("graph", graph_arg, "edge-list file or named:<kind>[:params]")
        ->required();

    auto* chromatic_cmd =
        app.add_subcommand("chromatic", "chromatic polynomial and palette counts");
    chromatic_cmd->add_option("graph", graph_arg)->required();
    chromatic_cmd->add_option("q", q_opt, "palette size to evaluate at");

    auto* prob_cmd = app.add_subcommand("prob", "proper-coloring probability");
    prob_cmd->add_option("graph", graph_arg)->required();
    prob_cmd->add_option("dist", dist_arg, "comma rationals or uniform:<q>")->required();

    auto* kprob_cmd =
        app.add_subcommand("kprob", "probability of at most k monochromatic edges");
    kprob_cmd->add_option("graph", graph_arg)->required();
    kprob_cmd->add_option("dist", dist_arg)->required();
    kprob_cmd->add_option("k", k)->required();

    auto* dist_cmd = app.add_subcommand("distribution", "parse and echo a distribution");
    dist_cmd->add_option("dist", dist_arg)->required();

    auto* optimize_cmd =
        app.add_subcommand("optimize", "maximize the proper-coloring probability");
    optimize_cmd->add_option("graph", graph_arg)->required();
    optimize_cmd->add_option("q", q)->required()->check(CLI::Range(1, 32));
    optimize_cmd->add_option("--restarts", restarts)->check(CLI::Range(1, 1000));
    optimize_cmd->add_option("--tolerance", tolerance);
    optimize_cmd->add_option("--snap-denominator", snap_denominator)
        ->check(CLI::PositiveNumber);

    auto* schur_cmd = app.add_subcommand("schur-scan", "randomized Schur concavity check");
    schur_cmd->add_option("graph", graph_arg)->required();
    schur_cmd->add_option("q", q)->required()->check(CLI::Range(1, 32));
    schur_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);

    auto* scan_cmd =
        app.add_subcommand("scan", "grid scan of the tolerant probability against uniform");
    scan_cmd->add_option("graph", graph_arg)->required();
    scan_cmd->add_option("q", q)->required()->check(CLI::Range(1, 32));
    scan_cmd->add_option("k", k)->required();
    scan_cmd->add_option("--grid", grid, "common denominator of the grid")
        ->check(CLI::PositiveNumber);

    auto* csf_cmd = app.add_subcommand("csf", "color-usage generating function");
    csf_cmd->add_option("graph", graph_arg)->required();
    csf_cmd->add_option("q", q)->required()->check(CLI::Range(1, 32));

    auto* epos_cmd = app.add_subcommand("epos", "elementary-basis expansion and verdict");
    epos_cmd->add_option("graph", graph_arg)->required();
    epos_cmd->add_option("q", q)->required()->check(CLI::Range(1, 32));

    auto* bounds_cmd =
        app.add_subcommand("bounds", "series coefficients, bounds, and thresholds");
    bounds_cmd->add_option("graph", graph_arg)->required();
    bounds_cmd->add_option("--mmax", m_max)->check(CLI::Range(2, 12));

    auto* reproduce_cmd =
        app.add_subcommand("reproduce", "run a named golden computation and assert it");
    reproduce_cmd
        ->add_option("target", target,
                     "star, tree, figure1, birthday, shameful, schur51, epositive")
        ->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "emit CSV data for plots");
    sweep_cmd->add_option("target", target, "star_curve or contour4star")->required();
    sweep_cmd->add_option("resolution", resolution)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (graph_cmd->parsed()) return cmd_graph(opt, graph_arg);
        if (chromatic_cmd->parsed()) return cmd_chromatic(opt, graph_arg, q_opt);
        if (prob_cmd->parsed()) return cmd_prob(opt, graph_arg, dist_arg);
        if (kprob_cmd->parsed()) return cmd_kprob(opt, graph_arg, dist_arg, k);
        if (dist_cmd->parsed()) return cmd_distribution(opt, dist_arg);
        if (optimize_cmd->parsed())
            return cmd_optimize(opt, graph_arg, q, restarts, tolerance, snap_denominator);
        if (schur_cmd->parsed()) return cmd_schur_scan(opt, graph_arg, q, samples);
        if (scan_cmd->parsed()) return cmd_scan(opt, graph_arg, q, k, grid);
        if (csf_cmd->parsed()) return cmd_csf(opt, graph_arg, q);
        if (epos_cmd->parsed()) return cmd_epos(opt, graph_arg, q);
        if (bounds_cmd->parsed()) return cmd_bounds(opt, graph_arg, m_max);
        if (reproduce_cmd->parsed()) return cmd_reproduce(opt, target);
        if (sweep_cmd->parsed()) {
            if (opt.out_path.empty())
                throw std::invalid_argument("sweep requires --out for the CSV path");
            return cmd_sweep(opt, target, resolution, opt.out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
