#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qgw/classical.hpp"
#include "qgw/errors.hpp"
#include "qgw/genpoly.hpp"
#include "qgw/quantizer.hpp"
#include "qgw/solver.hpp"

namespace qgw::cli {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> config_keys = {"genus", "genus-max", "order", "margin", "gauge", "initial-data",
                                              "format", "out", "suite", "threads"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

Gauge make_gauge(const std::string& text) {
    if (text == "special") return Gauge::special();
    if (text == "zero") return Gauge::zero();
    return Gauge::parse(text);
}

// A fixed generic gauge used as third sample by the gauge-independence suite.
const char* sample_gauge = "c1a=2/7,-1/3;c1b=1/5,3/11;c2=-1/9,2/13,1/17;c3=1/4,-3/19,5/23,-1/29";

// Smallest order at which genus g can be solved with the given margin (at least 14).
int required_order(int g, int margin) { return (g <= 0 ? 0 : 3 * g - 3 + (g == 1 ? 1 : 0)) + 1 + margin; }

int default_order(int g, int margin) { return std::max(14, required_order(g, margin)); }

std::vector<std::string> rat_list(const XPoly& p) {
    std::vector<std::string> r;
    for (int k = 0; k <= p.degree(); ++k) r.push_back(to_string(p.coeff(k)));
    return r;
}

int first_invariant_degree(int g) { return g >= 2 ? 0 : 1; }

struct Solved {
    MirrorData md;
    VertexTable table;
    std::vector<SolveReport> reports;  // genus 0..g
};

Solved solve_up_to(int g, int order, int margin, const Gauge& gauge, const std::string& initial_data, int threads) {
    Solved s{build_mirror(order), {}, {}};
    ClassicalData classical = ClassicalData::from_mirror(s.md);
    if (!initial_data.empty()) classical.load_file(initial_data);
    s.table = VertexTable::genus_zero(s.md, 3);
    s.reports.push_back(solve_genus0(s.md));
    s.reports.back().gauge = gauge;
    for (int h = 1; h <= g; ++h) s.reports.push_back(solve_genus(h, gauge, s.md, s.table, classical, margin, threads));
    return s;
}

json config_json(const RunConfig& c, const Gauge& gauge, int order) {
    json j;
    j["command"] = c.command;
    if (c.command == "solve") j["genus"] = c.genus;
    else j["genus_max"] = c.genus_max;
    if (c.command == "verify") j["suite"] = c.suite;
    j["order"] = order;
    j["margin"] = c.margin;
    j["gauge"] = gauge.to_string();
    j["initial_data"] = c.initial_data;
    j["format"] = c.format;
    return j;
}

void write_csv(const std::vector<SolveReport>& reports, std::ostream& out) {
    out << "g,d,numerator,denominator\n";
    for (const auto& r : reports)
        for (int d = first_invariant_degree(r.genus); d < static_cast<int>(r.invariants.size()); ++d) {
            const Rat& v = r.invariants[d];
            out << r.genus << ',' << d << ',' << v.get_num().get_str() << ',' << v.get_den().get_str() << '\n';
        }
}

json report_json(const SolveReport& r) {
    json j;
    j["genus"] = r.genus;
    j["insertions"] = r.insertions;
    j["gauge"] = r.gauge.to_string();
    j["ambiguity"] = rat_list(r.ambiguity);
    j["ambiguity_gauge_zero"] = rat_list(r.ambiguity_gauge_zero);
    json inv = json::array();
    for (int d = first_invariant_degree(r.genus); d < static_cast<int>(r.invariants.size()); ++d)
        inv.push_back({{"d", d}, {"value", to_string(r.invariants[d])}});
    j["invariants"] = inv;
    j["residual_margin"] = r.residual_margin;
    return j;
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
    const Gauge gauge = make_gauge(c.gauge);
    const int order = c.order > 0 ? c.order : default_order(c.genus, c.margin);
    Solved s = solve_up_to(c.genus, order, c.margin, gauge, c.initial_data, c.threads);
    if (c.format == "csv") {
        write_csv(s.reports, out);
        return 0;
    }
    json j;
    j["config"] = config_json(c, gauge, order);
    json results = json::array();
    for (const auto& r : s.reports) results.push_back(report_json(r));
    j["results"] = results;
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_table(const RunConfig& c, std::ostream& out) {
    const Gauge gauge = make_gauge(c.gauge);
    const int order = c.order > 0 ? c.order : default_order(c.genus_max, c.margin);
    Solved s = solve_up_to(c.genus_max, order, c.margin, gauge, c.initial_data, c.threads);
    write_csv(s.reports, out);
    return 0;
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

std::string first_diff_detail(const QSeries& a, const QSeries& b) {
    const int k = first_difference(a, b);
    return k < 0 ? "identical to q-order " + std::to_string(std::min(a.order(), b.order()))
                 : "differs at q-order " + std::to_string(k);
}

Check series_check(const std::string& name, const QSeries& a, const QSeries& b) {
    return {name, first_difference(a, b) < 0, first_diff_detail(a, b)};
}

void suite_mirror(const RunConfig& c, std::vector<Check>& checks) {
    const int order = std::max(c.order, 30);
    const MirrorData md = build_mirror(order);
    try {
        vertex_P03(md);
        checks.push_back({"mirror.P03_identity", true, "P_{0,3} = 1 to q-order " + std::to_string(order)});
    } catch (const mirror_identity_violation& e) {
        checks.push_back({"mirror.P03_identity", false, e.what()});
    }
    const QSeries& A = md.A;
    const QSeries& B = md.B1;
    const QSeries& X = md.X;
    const QSeries A2 = D(A) + A * A;
    checks.push_back(series_check("mirror.relation_A2", A2,
                                  Rat(2) * B * B - Rat(2) * A * B - Rat(4) * md.B2 -
                                      X * (A + Rat(2) * B + frac(2, 5))));
    checks.push_back(series_check("mirror.relation_B4", md.B4,
                                  -(X * (Rat(2) * md.B3 + frac(7, 5) * md.B2 + frac(2, 5) * B + frac(24, 625)))));
    for (const char* name : {"E1", "E2", "E3"}) {
        const GenPoly e = GenPoly::variable(name, Basis::propagators);
        checks.push_back(series_check(std::string("mirror.D_closure_") + name, eval(D_gen(e), md), D(eval(e, md))));
    }
    const std::vector<Rat> n = instanton_counts(genus0_potential(md));
    int bad = -1;
    for (int d = 1; d < static_cast<int>(n.size()) && bad < 0; ++d)
        if (n[d].get_den() != 1) bad = d;
    checks.push_back({"mirror.instanton_integrality", bad < 0,
                      bad < 0 ? "n_d integral for d <= " + std::to_string(n.size() - 1)
                              : "n_" + std::to_string(bad) + " is not an integer"});
}

void suite_oracle(const RunConfig& c, std::vector<Check>& checks) {
    const Gauge gauge = make_gauge(c.gauge);
    const int order = c.order > 0 ? c.order : 12;
    // The oracle runs at a low order; the fits use whatever margin that order leaves.
    const int margin = std::min(c.margin, std::max(0, order - required_order(c.genus_max, 0)));
    Solved s = solve_up_to(c.genus_max, order, margin, gauge, c.initial_data, c.threads);
    const OracleReport rep = compare_oracle(c.genus_max, 3, gauge, s.md, s.table, c.threads);
    checks.push_back({"oracle.convention", rep.convention != Convention::inconsistent,
                      "symmetrization convention: " + to_string(rep.convention)});
    for (const auto& e : rep.entries)
        checks.push_back({"oracle.g" + std::to_string(e.g) + "_m" + std::to_string(e.m) + "_n" + std::to_string(e.n),
                          e.equal,
                          e.equal ? "equal to q-order " + std::to_string(order)
                                  : "differs at q-order " + std::to_string(e.first_difference)});
}

void suite_hae(const RunConfig& c, std::vector<Check>& checks) {
    const Gauge gauge = make_gauge(c.gauge);
    const int order = std::max(c.order, 25);
    Solved s = solve_up_to(2, order, c.margin, gauge, c.initial_data, c.threads);
    const GenPoly P11 = ringfit(s.reports[1].P, Basis::generators, {1, 1, 2, 3, 1}, 1, s.md, c.margin);
    const GenPoly P2 = ringfit(s.reports[2].P, Basis::propagators, {1, 2, 3, 0, 1}, 3, s.md, c.margin);
    const HAEReport rep = verify_HAE(2, to_generators(P2), {{1, P11}}, s.md);
    checks.push_back({"hae.genus2_first", rep.hae1_checked && rep.hae1_first_failure < 0,
                      rep.hae1_first_failure < 0 ? "holds" : "fails at q-order " + std::to_string(rep.hae1_first_failure)});
    checks.push_back({"hae.genus2_second", rep.hae2_first_failure < 0,
                      rep.hae2_first_failure < 0 ? "holds" : "fails at q-order " + std::to_string(rep.hae2_first_failure)});
}

void suite_gauge(const RunConfig& c, std::vector<Check>& checks) {
    const int order = c.order > 0 ? c.order : default_order(2, c.margin);
    std::vector<Solved> runs;
    const std::vector<std::string> gauges = {"special", "zero", sample_gauge};
    for (const auto& g : gauges) runs.push_back(solve_up_to(2, order, c.margin, make_gauge(g), c.initial_data, c.threads));
    for (std::size_t i = 1; i < runs.size(); ++i) {
        const std::string tag = "gauge." + gauges[0] + "_vs_" + (i == 1 ? gauges[1] : std::string("sample"));
        checks.push_back(series_check(tag + ".P2", runs[0].reports[2].P, runs[i].reports[2].P));
        const bool inv = runs[0].reports[2].invariants == runs[i].reports[2].invariants;
        checks.push_back({tag + ".N2", inv, inv ? "N_{2,d} identical for d <= " + std::to_string(order) : "N_{2,d} differ"});
        const bool amb = runs[0].reports[2].ambiguity_gauge_zero == runs[i].reports[2].ambiguity_gauge_zero;
        checks.push_back({tag + ".f2_gauge_zero", amb, amb ? "identical" : "differ"});
    }
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    static const std::vector<std::string> suites = {"mirror", "oracle", "hae", "gauge"};
    if (c.suite != "all" && std::find(suites.begin(), suites.end(), c.suite) == suites.end())
        throw std::invalid_argument("unknown suite '" + c.suite + "'");
    std::vector<Check> checks;
    for (const auto& name : suites) {
        if (c.suite != "all" && c.suite != name) continue;
        if (name == "mirror") suite_mirror(c, checks);
        if (name == "oracle") suite_oracle(c, checks);
        if (name == "hae") suite_hae(c, checks);
        if (name == "gauge") suite_gauge(c, checks);
    }
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.pass; });
    if (c.format == "csv") {
        out << "check,pass,detail\n";
        for (const auto& k : checks) out << k.name << ',' << (k.pass ? "true" : "false") << ",\"" << k.detail << "\"\n";
    } else {
        json j;
        j["config"] = config_json(c, make_gauge(c.gauge), c.order);
        json list = json::array();
        for (const auto& k : checks) list.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
        j["checks"] = list;
        j["pass"] = ok;
        out << j.dump(2) << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::map<std::string, std::string> r;
    std::string line;
    for (int no = 1; std::getline(in, line); ++no) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(no) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::replace(key.begin(), key.end(), '_', '-');
        if (std::find(config_keys.begin(), config_keys.end(), key) == config_keys.end())
            throw std::invalid_argument(path + ":" + std::to_string(no) + ": unknown key '" + key + "'");
        r[key] = trim(line.substr(eq + 1));
    }
    return r;
}

RunConfig parse_arguments(const std::vector<std::string>& args) {
    if (args.empty()) throw std::invalid_argument("missing command (solve, verify or table)");
    RunConfig c;
    c.command = args[0];
    if (c.command != "solve" && c.command != "verify" && c.command != "table")
        throw std::invalid_argument("unknown command '" + c.command + "'");

    // Config file values come first so that explicit flags win.
    std::vector<std::string> tokens;
    std::vector<std::string> rest(args.begin() + 1, args.end());
    for (std::size_t i = 0; i < rest.size(); ++i) {
        std::string path;
        if (rest[i] == "--config") {
            if (i + 1 == rest.size()) throw std::invalid_argument("--config needs a path");
            path = rest[i + 1];
            rest.erase(rest.begin() + static_cast<long>(i), rest.begin() + static_cast<long>(i) + 2);
            --i;
        } else if (rest[i].rfind("--config=", 0) == 0) {
            path = rest[i].substr(9);
            rest.erase(rest.begin() + static_cast<long>(i));
            --i;
        } else {
            continue;
        }
        for (const auto& [k, v] : read_config_file(path)) tokens.push_back("--" + k + "=" + v);
    }
    tokens.insert(tokens.end(), rest.begin(), rest.end());

    CLI::App app{"qgw " + c.command};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.add_option("--genus", c.genus)->check(CLI::NonNegativeNumber);
    app.add_option("--genus-max", c.genus_max)->check(CLI::NonNegativeNumber);
    app.add_option("--order", c.order)->check(CLI::NonNegativeNumber);
    app.add_option("--margin", c.margin)->check(CLI::NonNegativeNumber);
    app.add_option("--gauge", c.gauge);
    app.add_option("--initial-data", c.initial_data);
    app.add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", c.out);
    app.add_option("--suite", c.suite)->check(CLI::IsMember({"mirror", "oracle", "hae", "gauge", "all"}));
    app.add_option("--threads", c.threads)->check(CLI::PositiveNumber);
    std::reverse(tokens.begin(), tokens.end());
    try {
        app.parse(tokens);
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(e.what());
    }
    make_gauge(c.gauge).validate();  // degree bounds are enforced before any work starts
    return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "solve") return cmd_solve(config, out);
        if (config.command == "table") return cmd_table(config, out);
        return cmd_verify(config, out);
    } catch (const not_polynomial& e) {
        err << "error: " << e.what() << '\n';
    } catch (const insufficient_initial_data& e) {
        err << "error: " << e.what() << " (supply it with --initial-data)\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        out << "usage: qgw {solve|verify|table} [--config FILE] [--genus G] [--genus-max G] [--order N]\n"
               "           [--margin N] [--gauge special|zero|c1a=..;c1b=..;c2=..;c3=..]\n"
               "           [--initial-data FILE] [--format json|csv] [--out FILE]\n"
               "           [--suite mirror|oracle|hae|gauge|all] [--threads N]\n";
        return args.empty() ? 2 : 0;
    }
    RunConfig config;
    try {
        config = parse_arguments(args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (config.out.empty()) return run(config, out, err);
    std::ostringstream buffer;
    const int code = run(config, buffer, err);
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
        err << "error: cannot write '" << config.out << "'\n";
        return 2;
    }
    file << buffer.str();
    return code;
}

}  // namespace qgw::cli
