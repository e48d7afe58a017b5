#ifndef SIMFIS_INFERENCE_HPP
#define SIMFIS_INFERENCE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simfis/fuzzy.hpp"

namespace simfis {

enum class ModificationType { Type1, Type2 };

/// "If A_{i1} and ... and A_{im} then B_i". Antecedent k lives on input
/// universe k; the consequent on the output universe.
struct Rule {
    std::string name;
    std::vector<std::string> antecedents;
    std::string consequent;
};

/// m input universes, one output universe, a named set table and n >= 1
/// rules. The constructor validates everything; an instance is always
/// consistent.
class RuleBase {
public:
    RuleBase(std::vector<Universe> inputs, Universe output,
             std::vector<FuzzySet> sets, std::vector<Rule> rules)
        : inputs_(std::move(inputs)), output_(std::move(output)), rules_(std::move(rules)) {
        if (inputs_.empty())
            throw std::invalid_argument("rule base: need at least one input universe");
        if (rules_.empty())
            throw std::invalid_argument("rule base: need at least one rule");
        for (auto& s : sets) {
            if (!index_.emplace(s.name, sets_.size()).second)
                throw std::invalid_argument("rule base: duplicate set '" + s.name + "'");
            for (const auto& v : validate_set(s))
                throw std::invalid_argument("rule base: " + v.detail);
            sets_.push_back(std::move(s));
        }
        for (const auto& r : rules_) {
            if (r.antecedents.size() != inputs_.size())
                throw std::invalid_argument("rule '" + r.name + "': has " +
                                            std::to_string(r.antecedents.size()) +
                                            " antecedents for " +
                                            std::to_string(inputs_.size()) + " inputs");
            for (size_t k = 0; k < r.antecedents.size(); ++k) {
                const FuzzySet& a = set(r.antecedents[k]);
                if (!(a.universe == inputs_[k]))
                    throw std::invalid_argument("rule '" + r.name + "': antecedent '" + a.name +
                                                "' is not on input universe '" +
                                                inputs_[k].name + "'");
            }
            const FuzzySet& c = set(r.consequent);
            if (!(c.universe == output_))
                throw std::invalid_argument("rule '" + r.name + "': consequent '" + c.name +
                                            "' is not on the output universe");
        }
    }

    const std::vector<Universe>& inputs() const { return inputs_; }
    const Universe& output() const { return output_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<FuzzySet>& sets() const { return sets_; }

    bool has_set(const std::string& name) const { return index_.count(name) != 0; }

    const FuzzySet& set(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("unknown set '" + name + "'");
        return sets_[it->second];
    }

    const Rule& rule(const std::string& name) const {
        for (const auto& r : rules_)
            if (r.name == name) return r;
        throw std::invalid_argument("unknown rule '" + name + "'");
    }

    /// Index of the input universe called `var`.
    size_t input_index(const std::string& var) const {
        for (size_t k = 0; k < inputs_.size(); ++k)
            if (inputs_[k].name == var) return k;
        throw std::invalid_argument("'" + var + "' is not an input variable");
    }

private:
    std::vector<Universe> inputs_;
    Universe output_;
    std::vector<FuzzySet> sets_;
    std::map<std::string, size_t> index_;
    std::vector<Rule> rules_;
};

/// One observed fuzzy set per input universe, in declared variable order.
struct Observations {
    std::vector<FuzzySet> sets;
};

inline void validate_observations(const RuleBase& rb, const Observations& obs) {
    if (obs.sets.size() != rb.inputs().size())
        throw std::invalid_argument("observations: got " + std::to_string(obs.sets.size()) +
                                    " sets for " + std::to_string(rb.inputs().size()) +
                                    " input variables");
    for (size_t k = 0; k < obs.sets.size(); ++k) {
        if (!(obs.sets[k].universe == rb.inputs()[k]))
            throw std::invalid_argument("observation '" + obs.sets[k].name +
                                        "' is not on input universe '" +
                                        rb.inputs()[k].name + "'");
        for (const auto& v : validate_set(obs.sets[k]))
            throw std::invalid_argument("observation: " + v.detail);
    }
}

inline void validate_output_set(const RuleBase& rb, const FuzzySet& bstar) {
    if (!(bstar.universe == rb.output()))
        throw std::invalid_argument("'" + bstar.name + "' is not on the output universe '" +
                                    rb.output().name + "'");
    for (const auto& v : validate_set(bstar))
        throw std::invalid_argument(v.detail);
}

namespace detail {

inline PiecewiseLinear modify(ModificationType t, const PiecewiseLinear& target,
                              const Rational& sm) {
    return t == ModificationType::Type1 ? target.scale(sm) : target.clip_div(sm);
}

}  // namespace detail

/// Per-rule forward sub-reasoning: fold the per-antecedent modified
/// consequents with pointwise min. Order-independent.
inline PiecewiseLinear fmp_sub_result(const RuleBase& rb, const Rule& rule,
                                      const Observations& obs, ModificationType t) {
    const PiecewiseLinear& consequent = rb.set(rule.consequent).membership;
    PiecewiseLinear acc = detail::modify(
        t, consequent, similarity(rb.set(rule.antecedents[0]), obs.sets[0]));
    for (size_t k = 1; k < rule.antecedents.size(); ++k) {
        Rational sm = similarity(rb.set(rule.antecedents[k]), obs.sets[k]);
        acc = pointwise_min(acc, detail::modify(t, consequent, sm));
    }
    return acc;
}

struct FmpRuleTrace {
    std::string rule;
    std::vector<Rational> similarities;      // one per input variable
    std::vector<PiecewiseLinear> terms;      // modified consequent per variable
    PiecewiseLinear sub_result;              // pointwise min of terms
};

struct FmpResult {
    std::vector<FmpRuleTrace> rules;         // 1:1 with the rule base's rules
    PiecewiseLinear aggregate;               // pointwise max of all sub-results
};

/// Forward inference (observed inputs -> output fuzzy set) with full trace.
inline FmpResult fmp_infer(const RuleBase& rb, const Observations& obs, ModificationType t) {
    validate_observations(rb, obs);
    std::vector<FmpRuleTrace> traces;
    traces.reserve(rb.rules().size());
    for (const Rule& rule : rb.rules()) {
        FmpRuleTrace tr{rule.name, {}, {}, fmp_sub_result(rb, rule, obs, t)};
        for (size_t k = 0; k < rule.antecedents.size(); ++k) {
            tr.similarities.push_back(similarity(rb.set(rule.antecedents[k]), obs.sets[k]));
            tr.terms.push_back(
                detail::modify(t, rb.set(rule.consequent).membership, tr.similarities.back()));
        }
        traces.push_back(std::move(tr));
    }
    PiecewiseLinear agg = traces[0].sub_result;
    for (size_t i = 1; i < traces.size(); ++i) agg = pointwise_max(agg, traces[i].sub_result);
    return FmpResult{std::move(traces), std::move(agg)};
}

/// Backward sub-reasoning for input variable k: the rule's antecedent
/// modified by the consequent similarity SM(B_i, B*).
inline PiecewiseLinear fmt_sub_result(const RuleBase& rb, const Rule& rule,
                                      const FuzzySet& bstar, size_t k, ModificationType t) {
    if (k >= rule.antecedents.size())
        throw std::invalid_argument("fmt_sub_result: input index out of range");
    Rational sm = similarity(rb.set(rule.consequent), bstar);
    return detail::modify(t, rb.set(rule.antecedents[k]).membership, sm);
}

struct FmtRuleTrace {
    std::string rule;
    Rational similarity;                     // SM(consequent, B*)
    std::vector<PiecewiseLinear> terms;      // modified antecedent per variable
};

struct FmtResult {
    std::vector<FmtRuleTrace> rules;
    std::vector<PiecewiseLinear> aggregates;  // one per input variable
};

/// Backward inference (observed output -> one fuzzy set per input variable).
inline FmtResult fmt_infer(const RuleBase& rb, const FuzzySet& bstar, ModificationType t) {
    validate_output_set(rb, bstar);
    std::vector<FmtRuleTrace> traces;
    traces.reserve(rb.rules().size());
    for (const Rule& rule : rb.rules()) {
        FmtRuleTrace tr{rule.name, similarity(rb.set(rule.consequent), bstar), {}};
        for (size_t k = 0; k < rule.antecedents.size(); ++k)
            tr.terms.push_back(
                detail::modify(t, rb.set(rule.antecedents[k]).membership, tr.similarity));
        traces.push_back(std::move(tr));
    }
    std::vector<PiecewiseLinear> aggs;
    aggs.reserve(rb.inputs().size());
    for (size_t k = 0; k < rb.inputs().size(); ++k) {
        PiecewiseLinear acc = traces[0].terms[k];
        for (size_t i = 1; i < traces.size(); ++i) acc = pointwise_max(acc, traces[i].terms[k]);
        aggs.push_back(std::move(acc));
    }
    return FmtResult{std::move(traces), std::move(aggs)};
}

}  // namespace simfis

#endif  // SIMFIS_INFERENCE_HPP
