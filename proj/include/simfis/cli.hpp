#ifndef SIMFIS_CLI_HPP
#define SIMFIS_CLI_HPP

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef __unix__
#include <unistd.h>
#endif

#include "simfis/io.hpp"
#include "simfis/oracle.hpp"

namespace simfis::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;        // success / audit pass / all claims match
inline constexpr int kExitInput = 1;     // parse or validation error
inline constexpr int kExitUsage = 2;     // bad command line
inline constexpr int kExitVerdict = 3;   // audit fail, claim mismatch, or failed check

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ModificationType to_type(int t) {
    return t == 1 ? ModificationType::Type1 : ModificationType::Type2;
}

inline io::Palette pick_palette(const std::ostream& out) {
    io::Palette pal;
#ifdef __unix__
    if (&out == &std::cout && isatty(STDOUT_FILENO) == 1 && std::getenv("NO_COLOR") == nullptr) {
        pal.good = "\033[32m";
        pal.bad = "\033[31m";
        pal.reset = "\033[0m";
    }
#else
    (void)out;
#endif
    return pal;
}

inline void render_fmp_trace(std::ostream& out, const RuleBase& rb, const Observations& obs,
                             const FmpResult& res) {
    for (size_t i = 0; i < res.rules.size(); ++i) {
        const FmpRuleTrace& tr = res.rules[i];
        const Rule& rule = rb.rules()[i];
        out << "rule " << tr.rule << ":\n";
        for (size_t k = 0; k < tr.similarities.size(); ++k) {
            out << "  SM(" << rule.antecedents[k] << ", " << obs.sets[k].name
                << ") = " << tr.similarities[k] << "\n";
            out << "  term " << rb.inputs()[k].name << ": "
                << io::format_pwl(rb.output().name, tr.terms[k]) << "\n";
        }
        out << "  sub-result: " << io::format_pwl(rb.output().name, tr.sub_result) << "\n";
    }
}

inline void render_fmt_trace(std::ostream& out, const RuleBase& rb, const FuzzySet& bstar,
                             const FmtResult& res) {
    for (size_t i = 0; i < res.rules.size(); ++i) {
        const FmtRuleTrace& tr = res.rules[i];
        const Rule& rule = rb.rules()[i];
        out << "rule " << tr.rule << ":\n";
        out << "  SM(" << rule.consequent << ", " << bstar.name << ") = " << tr.similarity
            << "\n";
        for (size_t k = 0; k < tr.terms.size(); ++k)
            out << "  term " << rb.inputs()[k].name << ": "
                << io::format_pwl(rb.inputs()[k].name, tr.terms[k]) << "\n";
    }
}

/// Re-runs the FMP pipeline on the float oracle and compares. Exact
/// similarities feed the pointwise stage, so deviations come from grid
/// evaluation alone.
inline bool run_fmp_check(std::ostream& out, const RuleBase& rb, const Observations& obs,
                          ModificationType t, const FmpResult& res, double tol, size_t n) {
    bool ok = true;
    for (size_t i = 0; i < res.rules.size(); ++i) {
        const Rule& rule = rb.rules()[i];
        for (size_t k = 0; k < rule.antecedents.size(); ++k) {
            double approx = oracle::oracle_similarity(rb.set(rule.antecedents[k]),
                                                      obs.sets[k], n);
            auto rep = oracle::cross_check(res.rules[i].similarities[k], approx, tol);
            ok = ok && rep.pass;
            out << "check sm " << rule.name << "/" << rb.inputs()[k].name
                << ": exact=" << res.rules[i].similarities[k] << " oracle=" << approx
                << " dev=" << rep.max_deviation << (rep.pass ? " ok" : " FAIL") << "\n";
        }
    }
    std::vector<SampledFunction> subs;
    for (size_t i = 0; i < res.rules.size(); ++i) {
        const Rule& rule = rb.rules()[i];
        const PiecewiseLinear& consequent = rb.set(rule.consequent).membership;
        SampledFunction acc{0, 0, {}};
        for (size_t k = 0; k < rule.antecedents.size(); ++k) {
            double sm = res.rules[i].similarities[k].to_double();
            SampledFunction term =
                t == ModificationType::Type1
                    ? oracle::scale(sm, oracle::sample(consequent, n))
                    : oracle::clip_div(oracle::sample(consequent, n), sm);
            acc = k == 0 ? std::move(term) : oracle::pointwise_min(std::move(acc), term);
        }
        subs.push_back(std::move(acc));
    }
    SampledFunction agg = subs[0];
    for (size_t i = 1; i < subs.size(); ++i) agg = oracle::pointwise_max(std::move(agg), subs[i]);
    auto rep = oracle::cross_check(res.aggregate, agg, tol);
    ok = ok && rep.pass;
    out << "check aggregate: max dev=" << rep.max_deviation << (rep.pass ? " ok" : " FAIL")
        << "\n";
    return ok;
}

}  // namespace detail

/// Runs one CLI invocation (args exclude the program name) and returns the
/// process exit code. All output goes to the given streams.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"exact similarity-based fuzzy inference and reductivity auditing"};
    app.require_subcommand(1);

    std::string rules_path, obs_path, claims_path, set_a, set_b, mode;
    int type = 0;
    bool trace = false;
    std::size_t csv_n = 0;
    double check_tol = -1.0;

    CLI::App* sm = app.add_subcommand("sm", "similarity of two sets from the rule-base file");
    sm->add_option("rules", rules_path, "rule-base file")->required();
    sm->add_option("set1", set_a, "first set name")->required();
    sm->add_option("set2", set_b, "second set name")->required();

    CLI::App* fmp = app.add_subcommand("fmp", "forward inference from observed inputs");
    fmp->add_option("rules", rules_path, "rule-base file")->required();
    fmp->add_option("observations", obs_path, "observations file (one set per input)")
        ->required();
    fmp->add_option("--type", type, "modification type")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    fmp->add_flag("--trace", trace, "print similarities and per-rule sub-results");
    fmp->add_option("--csv", csv_n, "emit CSV of the aggregate with N rows")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    fmp->add_option("--check", check_tol, "cross-check against the sampled oracle at TOL")
        ->check(CLI::PositiveNumber);

    CLI::App* fmt = app.add_subcommand("fmt", "backward inference from an observed output");
    fmt->add_option("rules", rules_path, "rule-base file")->required();
    fmt->add_option("bstar", obs_path, "file with one set on the output variable")->required();
    fmt->add_option("--type", type, "modification type")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    fmt->add_flag("--trace", trace, "print similarities and per-rule terms");
    fmt->add_option("--csv", csv_n, "emit CSV of each result with N rows")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));

    CLI::App* audit = app.add_subcommand("audit", "reductive-property audit of every rule");
    audit->add_option("rules", rules_path, "rule-base file")->required();
    audit->add_option("--mode", mode, "fmp or fmt")
        ->required()
        ->check(CLI::IsMember({"fmp", "fmt"}));
    audit->add_option("--type", type, "modification type")
        ->required()
        ->check(CLI::IsMember({1, 2}));

    CLI::App* verify = app.add_subcommand("verify", "check recorded claims against the engine");
    verify->add_option("rules", rules_path, "rule-base file")->required();
    verify->add_option("claims", claims_path, "claims file")->required();

    std::vector<const char*> argv;
    argv.push_back("simfis");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    const io::Palette pal = detail::pick_palette(out);
    std::string current_file = rules_path;
    try {
        io::RuleBaseFile rbf = io::parse_rulebase(detail::read_file(rules_path));
        const RuleBase& rb = rbf.rulebase;

        if (sm->parsed()) {
            out << similarity(rb.set(set_a), rb.set(set_b)) << "\n";
            return kExitOk;
        }

        if (fmp->parsed()) {
            current_file = obs_path;
            Observations obs = io::parse_observations(detail::read_file(obs_path), rbf.doc);
            current_file = rules_path;
            FmpResult res = fmp_infer(rb, obs, detail::to_type(type));
            if (trace) detail::render_fmp_trace(out, rb, obs, res);
            out << io::format_pwl(rb.output().name, res.aggregate) << "\n";
            if (csv_n >= 2) io::emit_csv(out, res.aggregate, csv_n, 6);
            if (check_tol > 0 &&
                !detail::run_fmp_check(out, rb, obs, detail::to_type(type), res, check_tol,
                                       10001))
                return kExitVerdict;
            return kExitOk;
        }

        if (fmt->parsed()) {
            current_file = obs_path;
            FuzzySet bstar = io::parse_output_observation(detail::read_file(obs_path), rbf.doc);
            current_file = rules_path;
            FmtResult res = fmt_infer(rb, bstar, detail::to_type(type));
            if (trace) detail::render_fmt_trace(out, rb, bstar, res);
            for (size_t k = 0; k < res.aggregates.size(); ++k) {
                out << io::format_pwl(rb.inputs()[k].name, res.aggregates[k]) << "\n";
                if (csv_n >= 2) {
                    out << "# " << rb.inputs()[k].name << "\n";
                    io::emit_csv(out, res.aggregates[k], csv_n, 6);
                }
            }
            return kExitOk;
        }

        if (audit->parsed()) {
            AuditReport report = mode == "fmp" ? audit_fmp(rb, detail::to_type(type))
                                               : audit_fmt(rb, detail::to_type(type));
            io::render_audit_report(out, report, pal);
            return report.all_pass() ? kExitOk : kExitVerdict;
        }

        if (verify->parsed()) {
            current_file = claims_path;
            std::vector<Claim> claims = io::parse_claims(detail::read_file(claims_path), rbf.doc);
            current_file = rules_path;
            bool all_match = true;
            for (const Claim& c : claims) {
                ClaimResult res = verify_claim(c, rb);
                const std::string var = c.is_fmp() ? rb.output().name : c.variable;
                io::render_claim_result(out, c, res, var, pal);
                all_match = all_match && res.verdict == ClaimVerdict::Match;
            }
            return all_match ? kExitOk : kExitVerdict;
        }
    } catch (const io::ParseError& e) {
        err << current_file << ":" << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}

}  // namespace simfis::cli

#endif  // SIMFIS_CLI_HPP
