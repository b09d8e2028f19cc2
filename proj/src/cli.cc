#include "qsurf/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "qsurf/analytic_model.h"
#include "qsurf/class_enumerator.h"
#include "qsurf/code_library.h"
#include "qsurf/decoder.h"
#include "qsurf/io.h"
#include "qsurf/monte_carlo.h"
#include "qsurf/weight_enumerator.h"

namespace qsurf {

namespace {

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class InvariantError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Selector {
    std::string family;
    int d_x = 0;
    int d_z = 0;
    std::string code_file;
};

struct Options {
    Selector selector;
    std::vector<std::string> codes;  // "family:dx:dz" or a code JSON path
    std::string out_path;
    std::string format = "csv";
    int workers = 1;
    uint64_t seed = 1;
    std::vector<double> p;
    std::vector<std::string> a;
    uint64_t trials = 0;
    int j_max = 0;
    int j_cut = 0;
    double max_decodes = 2e7;
    double precision = 0;
    double max_trials = 1e8;
    std::string error;
};

StabilizerCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open code file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("code file '" + path + "' is not valid JSON: " + e.what());
    }
    return load_code(doc);
}

StabilizerCode build_checked(const std::string& family, int d_x, int d_z) {
    StabilizerCode code = build_code(parse_family(family), d_x, d_z);
    CodeReport report = verify_code(code);
    if (!report.ok()) throw InvariantError(code.label() + " failed verification: " + report.violations.front());
    return code;
}

StabilizerCode resolve(const Selector& s) {
    if (!s.code_file.empty()) return load_code_file(s.code_file);
    if (s.family.empty()) throw ConfigError("a code needs --family, --dx and --dz, or --code-file");
    return build_checked(s.family, s.d_x, s.d_z);
}

/// "rotated-xzzx:3:3" or a path to a code document.
StabilizerCode resolve_spec(const std::string& spec) {
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return load_code_file(spec);
    auto first = spec.find(':');
    auto second = spec.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw ConfigError("code '" + spec + "' must be family:dx:dz or a .json file");
    }
    try {
        return build_checked(spec.substr(0, first), std::stoi(spec.substr(first + 1, second - first - 1)),
                             std::stoi(spec.substr(second + 1)));
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
            throw ConfigError("code '" + spec + "': " + e.what());
        }
        throw;
    }
}

std::vector<StabilizerCode> resolve_all(const Options& o) {
    std::vector<StabilizerCode> codes;
    for (const auto& spec : o.codes) codes.push_back(resolve_spec(spec));
    if (codes.empty()) codes.push_back(resolve(o.selector));
    return codes;
}

std::vector<Asymmetry> parse_asymmetries(const std::vector<std::string>& values) {
    std::vector<Asymmetry> out;
    for (const auto& v : values) {
        try {
            out.push_back(Asymmetry::parse(v));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    return out;
}

void check_probabilities(const std::vector<double>& ps) {
    for (double p : ps) {
        if (!(p >= 0 && p <= 1)) throw ConfigError(fmt::format("p = {} is outside [0, 1]", p));
    }
}

/// Weights the analytic model needs: the asymptotic terms and the bracket cut.
int required_weight(const StabilizerCode& code, const CodeDistances& d, int j_cut) {
    CorrectionCapability cap = correction_capability(d);
    return std::min(code.n, std::max(cap.e_g + cap.e_z + 1, j_cut));
}

struct AnalyticCode {
    StabilizerCode code;
    CodeDistances distances;
    ErrorClassTable table;
    int j_cut = 0;
};

AnalyticCode prepare(const StabilizerCode& code, const Options& o) {
    AnalyticCode ac{code, effective_distances(code), {}, 0};
    CorrectionCapability cap = correction_capability(ac.distances);
    ac.j_cut = o.j_cut > 0 ? o.j_cut : cap.e_g + cap.e_z + 1;
    if (ac.j_cut < cap.e_g + 1) {
        throw ConfigError(fmt::format("--j-cut {} is below t + 1 = {} for {}", ac.j_cut, cap.e_g + 1, code.label()));
    }
    if (ac.j_cut > code.n) throw ConfigError(fmt::format("--j-cut {} exceeds n = {}", ac.j_cut, code.n));
    EnumerationOptions eo;
    eo.workers = o.workers;
    eo.max_decodes = o.max_decodes;
    ac.table = enumerate_classes(code, required_weight(code, ac.distances, ac.j_cut), eo);
    return ac;
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : path_(path), stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw ConfigError("cannot write '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (o.format == f) return;
    }
    throw ConfigError("--format " + o.format + " is not supported by this command");
}

int cmd_build(const Options& o, std::ostream& out) {
    StabilizerCode code = resolve(o.selector);
    Output dst(o.out_path, out);
    *dst << describe_json(code).dump(2) << '\n';
    return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    check_format(o, {"csv", "json"});
    StabilizerCode code = resolve(o.selector);
    int j_max = o.j_max > 0 ? o.j_max : 3;
    if (j_max > code.n) throw ConfigError(fmt::format("--j-max {} exceeds n = {}", j_max, code.n));
    EnumerationOptions eo;
    eo.workers = o.workers;
    eo.max_decodes = o.max_decodes;
    ErrorClassTable table = enumerate_classes(code, j_max, eo);
    Output dst(o.out_path, out);
    if (o.format == "json") {
        *dst << class_table_json(table).dump(2) << '\n';
    } else {
        write_class_table_csv(*dst, table);
    }
    return kExitOk;
}

int cmd_wepoly(const Options& o, std::ostream& out) {
    check_format(o, {"csv", "json"});
    StabilizerCode code = resolve(o.selector);
    CosetEnumeration cosets = enumerate_cosets(code, o.workers);
    WeightEnumerator we = coset_enumerate(code, o.workers);
    Output dst(o.out_path, out);
    *dst << weight_enumerator_json(code.label(), we, true_distances(cosets)).dump(2) << '\n';
    return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
    StabilizerCode code = resolve(o.selector);
    PauliOperator error;
    try {
        error = PauliOperator::from_string(o.error);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("--error: ") + e.what());
    }
    if (error.num_qubits() != code.n) {
        throw ConfigError(fmt::format("--error has {} letters, the code has {} qubits", error.num_qubits(), code.n));
    }
    MatchingDecoder decoder(code);
    DecodeTrace trace = decoder.decode_with_trace(extract_syndrome(code, error));
    Outcome outcome = classify_failure(code, error, trace.correction);
    Output dst(o.out_path, out);
    *dst << decode_trace_json(code, error, trace, outcome).dump(2) << '\n';
    return kExitOk;
}

int cmd_curves(const Options& o, std::ostream& out) {
    check_format(o, {"csv"});
    check_probabilities(o.p);
    std::vector<Asymmetry> as = parse_asymmetries(o.a);
    std::vector<CurvePoint> points;
    if (!o.p.empty() && !as.empty()) {
        for (const auto& code : resolve_all(o)) {
            AnalyticCode ac = prepare(code, o);
            for (const auto& a : as) {
                for (double p : o.p) {
                    ChannelModel ch = ChannelModel::from_asymmetry(p, a);
                    const std::string label = ac.code.label();
                    Bracket b = p_logical_full(ac.code, ac.table, ch, ac.j_cut, ac.distances);
                    points.push_back({p, a.str(), label, p_logical_asymptotic(ac.code, ac.table, ch, ac.distances),
                                      "asymptotic"});
                    points.push_back({p, a.str(), label, b.lower, "full_lower"});
                    points.push_back({p, a.str(), label, b.upper, "full_upper"});
                    points.push_back({p, a.str(), label, bounded_distance_curve(ac.code, ch), "bounded_distance"});
                }
            }
        }
    }
    Output dst(o.out_path, out);
    write_curves_csv(*dst, points);
    return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
    check_format(o, {"csv"});
    check_probabilities(o.p);
    std::vector<Asymmetry> as = parse_asymmetries(o.a);
    if (o.trials == 0 && o.precision <= 0) throw ConfigError("simulate needs --trials or --precision");
    StabilizerCode code = resolve(o.selector);
    std::optional<AnalyticCode> analytic;
    if (o.precision > 0) analytic = prepare(code, o);
    EstimateOptions eo;
    eo.workers = o.workers;
    std::vector<TrialReport> reports;
    for (const auto& a : as) {
        for (double p : o.p) {
            ChannelModel ch = ChannelModel::from_asymmetry(p, a);
            uint64_t trials = o.trials;
            if (analytic) {
                double pl = p_logical_asymptotic(analytic->code, analytic->table, ch, analytic->distances);
                if (!(pl > 0 && pl < 1)) {
                    throw ConfigError(fmt::format("no trial budget: predicted p_L = {} at p = {}, A = {}", pl, p, a.str()));
                }
                double budget = trials_for_precision(pl, o.precision);
                err << fmt::format("budget p={} A={} predicted_pL={:.4g} trials={:.0f}\n", p, a.str(), pl,
                                   std::ceil(budget));
                if (trials == 0) {
                    if (budget > o.max_trials) {
                        throw BudgetExceeded(fmt::format("{:.3g} trials needed at p = {}, A = {} (limit {:.3g})",
                                                         budget, p, a.str(), o.max_trials),
                                             budget);
                    }
                    trials = uint64_t(std::ceil(budget));
                }
            }
            TrialReport r = estimate(code, ch, trials, o.seed, eo);
            if (r.cap_overflows > 0) {
                err << fmt::format("warning: {} trials exceeded the matcher capacity at p={} A={}\n", r.cap_overflows,
                                   p, a.str());
            }
            reports.push_back(r);
        }
    }
    Output dst(o.out_path, out);
    write_trial_reports_csv(*dst, reports);
    return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
    check_format(o, {"csv"});
    check_probabilities(o.p);
    std::vector<Asymmetry> as = parse_asymmetries(o.a);
    if (o.codes.size() != 2) throw ConfigError("compare takes exactly two --code selectors");
    AnalyticCode c1 = prepare(resolve_spec(o.codes[0]), o);
    AnalyticCode c2 = prepare(resolve_spec(o.codes[1]), o);
    std::vector<CompareRow> rows;
    for (const auto& a : as) {
        for (double p : o.p) {
            if (p <= 0) throw ConfigError("compare needs p > 0");
            rows.push_back({p, a.str(), c1.code.label(), c2.code.label(),
                            compare_ratio(c1.code, c1.table, c1.distances, c2.code, c2.table, c2.distances, p, a)});
        }
    }
    Output dst(o.out_path, out);
    write_compare_csv(*dst, rows);
    return kExitOk;
}

void add_selector(CLI::App* cmd, Options& o) {
    cmd->add_option("--family", o.selector.family, "surface | rotated | xzzx | rotated-xzzx");
    cmd->add_option("--dx", o.selector.d_x, "lattice rows (X distance)");
    cmd->add_option("--dz", o.selector.d_z, "lattice columns (Z distance)");
    cmd->add_option("--code-file", o.selector.code_file, "code document written by build");
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--out", o.out_path, "output file (default stdout)");
    cmd->add_option("--format", o.format, "csv | json");
    cmd->add_option("--workers", o.workers, "worker threads; results do not depend on it")->check(CLI::Range(1, 256));
    cmd->add_option("--seed", o.seed, "random seed");
}

void add_grid(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.p, "physical error probabilities")->delimiter(',');
    cmd->add_option("--A", o.a, "channel asymmetries, decimal or inf")->delimiter(',');
}

void add_analytic(CLI::App* cmd, Options& o) {
    cmd->add_option("--j-cut", o.j_cut, "largest weight with enumerated beta in the full sum");
    cmd->add_option("--max-decodes", o.max_decodes, "enumeration budget");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Planar surface code analysis: lattices, exhaustive decoding tables, weight enumerators, "
                 "logical error rate curves and Monte Carlo estimates."};
    app.require_subcommand(1, 1);
    app.allow_extras(false);

    auto* build = app.add_subcommand("build", "build and verify a code, write its JSON document");
    add_selector(build, o);
    add_common(build, o);

    auto* classify = app.add_subcommand("classify", "fraction of non-correctable patterns per class");
    add_selector(classify, o);
    add_common(classify, o);
    classify->add_option("--j-max", o.j_max, "largest pattern weight (default 3)");
    classify->add_option("--max-decodes", o.max_decodes, "enumeration budget");

    auto* wepoly = app.add_subcommand("wepoly", "weight enumerators by coset enumeration");
    add_selector(wepoly, o);
    add_common(wepoly, o);

    auto* decode = app.add_subcommand("decode", "decode one error pattern and print the trace");
    add_selector(decode, o);
    add_common(decode, o);
    decode->add_option("--error", o.error, "Pauli string, one letter per qubit (I or _ for identity)")->required();

    auto* curves = app.add_subcommand("curves", "analytic logical error rate curves");
    add_selector(curves, o);
    add_common(curves, o);
    add_grid(curves, o);
    add_analytic(curves, o);
    curves->add_option("--code", o.codes, "family:dx:dz or code JSON, repeatable");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo logical error rate");
    add_selector(simulate, o);
    add_common(simulate, o);
    add_grid(simulate, o);
    add_analytic(simulate, o);
    simulate->add_option("--trials", o.trials, "trials per grid point");
    simulate->add_option("--precision", o.precision,
                         "relative standard error target; prints the implied trial budget");
    simulate->add_option("--max-trials", o.max_trials, "refuse budgets above this");

    auto* compare = app.add_subcommand("compare", "ratio of asymptotic logical error rates, code1 over code2");
    add_common(compare, o);
    add_grid(compare, o);
    add_analytic(compare, o);
    compare->add_option("--code", o.codes, "family:dx:dz or code JSON, exactly two")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (*build) return cmd_build(o, out);
        if (*classify) return cmd_classify(o, out);
        if (*wepoly) return cmd_wepoly(o, out);
        if (*decode) return cmd_decode(o, out);
        if (*curves) return cmd_curves(o, out);
        if (*simulate) return cmd_simulate(o, out, err);
        if (*compare) return cmd_compare(o, out);
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << fmt::format(" (estimated cost {:.3g})\n", e.estimated_cost());
        return kExitBudget;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitConfig;
}

}  // namespace qsurf
