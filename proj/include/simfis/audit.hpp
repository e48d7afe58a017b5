#ifndef SIMFIS_AUDIT_HPP
#define SIMFIS_AUDIT_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simfis/inference.hpp"

namespace simfis {

/// A point where two functions provably differ, with both exact values.
struct Witness {
    Rational x;
    Rational engine;
    Rational expected;
};

/// Smallest grid point (merged breakpoints plus crossings, in domain order)
/// where `engine` and `expected` differ. Two piecewise-linear functions that
/// agree on that whole grid agree everywhere, so nullopt means equal.
inline std::optional<Witness> first_difference(const PiecewiseLinear& engine,
                                               const PiecewiseLinear& expected) {
    std::vector<Rational> xs = detail::merged_grid(engine, expected);
    std::vector<Rational> cr = crossings(engine, expected);
    xs.insert(xs.end(), cr.begin(), cr.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const Rational& x : xs) {
        Rational ev = engine.eval(x);
        Rational xv = expected.eval(x);
        if (!(ev == xv)) return Witness{x, std::move(ev), std::move(xv)};
    }
    return std::nullopt;
}

/// Maximal interval of {x : P(a(x), b(x))} for a cellwise-constant strict
/// predicate. Excluded endpoints are points where the predicate fails (the
/// set is open there); an endpoint is closed iff the predicate holds at it,
/// which can only happen at the domain boundary.
struct Region {
    Rational lo;
    Rational hi;
    bool lo_closed;
    bool hi_closed;

    std::string render() const {
        return std::string(lo_closed ? "[" : "(") + lo.to_string() + ", " + hi.to_string() +
               (hi_closed ? "]" : ")");
    }
};

namespace detail {

enum class RegionPred { NotEqual, Greater };

/// Maximal regions where a != b (NotEqual) or a > b (Greater). The grid of
/// merged breakpoints plus crossings makes the sign of a - b constant on each
/// open cell, so regions are unions of cells split at touch points.
inline std::vector<Region> regions_where(RegionPred pred, const PiecewiseLinear& a,
                                         const PiecewiseLinear& b) {
    require_same_domain(a, b);
    const std::vector<Rational> xs = refined_grid(a, b);
    const auto holds_at = [&](size_t i) {
        int s = (a.eval(xs[i]) - b.eval(xs[i])).sign();
        return pred == RegionPred::NotEqual ? s != 0 : s > 0;
    };
    std::vector<bool> at(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) at[i] = holds_at(i);
    // Interior sign is constant per cell; it satisfies the predicate iff the
    // predicate holds at either endpoint of the cell.
    const auto cell_holds = [&](size_t i) { return at[i] || at[i + 1]; };

    std::vector<Region> out;
    size_t i = 0;
    const size_t cells = xs.size() - 1;
    while (i < cells) {
        if (!cell_holds(i)) {
            ++i;
            continue;
        }
        size_t j = i;
        // Extend while consecutive cells hold AND the shared grid point does
        // not split the region (a touch point where the predicate fails).
        while (j + 1 < cells && cell_holds(j + 1) && at[j + 1]) ++j;
        out.push_back(Region{xs[i], xs[j + 1], at[i], at[j + 1]});
        i = j + 1;
    }
    return out;
}

}  // namespace detail

inline std::vector<Region> difference_regions(const PiecewiseLinear& a,
                                              const PiecewiseLinear& b) {
    return detail::regions_where(detail::RegionPred::NotEqual, a, b);
}

inline std::vector<Region> exceeds_regions(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    return detail::regions_where(detail::RegionPred::Greater, a, b);
}

// ---------------------------------------------------------------------------
// Reductivity audits
// ---------------------------------------------------------------------------

enum class AuditMode { Fmp, Fmt };

/// One reductivity check: for FMP, rule vs. aggregate on the output variable;
/// for FMT, one entry per (rule, input variable).
struct ReductivityEntry {
    std::string rule;
    std::string variable;  // output variable for FMP, input variable for FMT
    PiecewiseLinear engine;
    PiecewiseLinear expected;
    bool pass;
    std::optional<Witness> witness;  // present iff !pass
};

struct AuditReport {
    AuditMode mode;
    ModificationType type;
    std::vector<ReductivityEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    bool rule_passes(const std::string& rule) const {
        for (const auto& e : entries)
            if (e.rule == rule && !e.pass) return false;
        return true;
    }
};

namespace detail {

inline ReductivityEntry make_entry(std::string rule, std::string variable,
                                   PiecewiseLinear engine, PiecewiseLinear expected) {
    std::optional<Witness> w = first_difference(engine, expected);
    bool pass = !w.has_value();
    return ReductivityEntry{std::move(rule), std::move(variable), std::move(engine),
                            std::move(expected), pass, std::move(w)};
}

}  // namespace detail

/// Reductive property, forward direction: feeding rule i's own antecedents
/// back in must reproduce its consequent in the aggregate.
inline AuditReport audit_fmp(const RuleBase& rb, ModificationType t) {
    AuditReport report{AuditMode::Fmp, t, {}};
    for (const Rule& rule : rb.rules()) {
        Observations obs;
        for (const auto& name : rule.antecedents) obs.sets.push_back(rb.set(name));
        FmpResult res = fmp_infer(rb, obs, t);
        report.entries.push_back(detail::make_entry(rule.name, rb.output().name,
                                                    std::move(res.aggregate),
                                                    rb.set(rule.consequent).membership));
    }
    return report;
}

/// Reductive property, backward direction: feeding the complement of rule i's
/// consequent must reproduce the complement of each of its antecedents.
inline AuditReport audit_fmt(const RuleBase& rb, ModificationType t) {
    AuditReport report{AuditMode::Fmt, t, {}};
    for (const Rule& rule : rb.rules()) {
        const FuzzySet& consequent = rb.set(rule.consequent);
        FuzzySet bstar{"complement(" + consequent.name + ")", consequent.universe,
                       consequent.membership.complement()};
        FmtResult res = fmt_infer(rb, bstar, t);
        for (size_t k = 0; k < rb.inputs().size(); ++k) {
            report.entries.push_back(detail::make_entry(
                rule.name, rb.inputs()[k].name, std::move(res.aggregates[k]),
                rb.set(rule.antecedents[k]).membership.complement()));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Claim verification
// ---------------------------------------------------------------------------

/// A recorded piecewise result attributed to some external source, to be
/// checked against what the engine derives for the same target.
struct Claim {
    enum class Target { FmpAggregate, FmpSub, FmtAggregate, FmtSub };

    std::string label;
    Target target;
    std::string rule;      // for FmpSub / FmtSub
    std::string variable;  // for FmtAggregate / FmtSub
    ModificationType type;
    PiecewiseLinear claimed;
    std::vector<FuzzySet> observations;  // for FMP targets
    std::optional<FuzzySet> bstar;       // for FMT targets

    bool is_fmp() const { return target == Target::FmpAggregate || target == Target::FmpSub; }
};

struct BoundFinding {
    enum class Kind { ExceedsReference, BelowReference, ExceedsOne };
    Kind kind;
    Region region;
    Witness witness;  // x, reference-side value, claimed value
};

namespace detail {

inline void append_bound_findings(std::vector<BoundFinding>& out, BoundFinding::Kind kind,
                                  const PiecewiseLinear& big, const PiecewiseLinear& small) {
    const std::vector<Region> regions = exceeds_regions(big, small);
    if (regions.empty()) return;
    const std::vector<Rational> xs = refined_grid(big, small);
    for (const Region& r : regions) {
        // First grid point inside the region where the inequality is strict;
        // every region contains at least one (its grid endpoints span whole
        // cells of strictly positive difference).
        Rational x = r.lo;
        for (const Rational& g : xs) {
            if (g < r.lo) continue;
            if (r.hi < g) break;
            if (small.eval(g) < big.eval(g)) {
                x = g;
                break;
            }
        }
        out.push_back(BoundFinding{kind, r, Witness{x, small.eval(x), big.eval(x)}});
    }
}

}  // namespace detail

/// Structural checks that need no inference: a type-1 sub-result can never
/// exceed the function it modifies, and a type-2 sub-result can never drop
/// below it nor exceed 1. Aggregate claims have no single reference and are
/// not checked here.
inline std::vector<BoundFinding> bound_check_claim(const Claim& c, const RuleBase& rb) {
    std::vector<BoundFinding> out;
    const PiecewiseLinear* reference = nullptr;
    if (c.target == Claim::Target::FmpSub) {
        reference = &rb.set(rb.rule(c.rule).consequent).membership;
    } else if (c.target == Claim::Target::FmtSub) {
        const Rule& rule = rb.rule(c.rule);
        reference = &rb.set(rule.antecedents[rb.input_index(c.variable)]).membership;
    } else {
        return out;
    }
    if (c.type == ModificationType::Type1) {
        detail::append_bound_findings(out, BoundFinding::Kind::ExceedsReference, c.claimed,
                                      *reference);
    } else {
        detail::append_bound_findings(out, BoundFinding::Kind::BelowReference, *reference,
                                      c.claimed);
        detail::append_bound_findings(out, BoundFinding::Kind::ExceedsOne, c.claimed,
                                      PiecewiseLinear::constant(c.claimed.domain(), Rational(1)));
    }
    return out;
}

/// What the engine derives for the claim's target.
inline PiecewiseLinear compute_claim_target(const Claim& c, const RuleBase& rb) {
    if (c.is_fmp()) {
        Observations obs{c.observations};
        if (c.target == Claim::Target::FmpAggregate)
            return fmp_infer(rb, obs, c.type).aggregate;
        validate_observations(rb, obs);
        return fmp_sub_result(rb, rb.rule(c.rule), obs, c.type);
    }
    if (!c.bstar)
        throw std::invalid_argument("claim '" + c.label + "': FMT target without bstar");
    if (c.target == Claim::Target::FmtAggregate)
        return fmt_infer(rb, *c.bstar, c.type).aggregates[rb.input_index(c.variable)];
    return fmt_sub_result(rb, rb.rule(c.rule), *c.bstar, rb.input_index(c.variable), c.type);
}

enum class ClaimVerdict { Match, Mismatch, Violation };

struct ClaimResult {
    std::string label;
    ClaimVerdict verdict;
    PiecewiseLinear engine;
    std::vector<BoundFinding> findings;   // non-empty iff Violation
    std::vector<Region> mismatches;       // maximal regions where claimed != engine
    std::optional<Witness> witness;       // engine/claimed values at a differing point
};

/// Bound violations take precedence; a bound-violating claim can never match
/// the engine, so the two verdict routes cannot contradict each other.
inline ClaimResult verify_claim(const Claim& c, const RuleBase& rb) {
    std::vector<BoundFinding> findings = bound_check_claim(c, rb);
    PiecewiseLinear engine = compute_claim_target(c, rb);
    std::vector<Region> mism = difference_regions(engine, c.claimed);
    if (!findings.empty()) {
        const Rational& x = findings[0].witness.x;
        Witness w{x, engine.eval(x), c.claimed.eval(x)};
        return ClaimResult{c.label,       ClaimVerdict::Violation, std::move(engine),
                           std::move(findings), std::move(mism),  std::move(w)};
    }
    std::optional<Witness> w = first_difference(engine, c.claimed);
    ClaimVerdict verdict = mism.empty() ? ClaimVerdict::Match : ClaimVerdict::Mismatch;
    return ClaimResult{c.label, verdict, std::move(engine), {}, std::move(mism), std::move(w)};
}

}  // namespace simfis

#endif  // SIMFIS_AUDIT_HPP
