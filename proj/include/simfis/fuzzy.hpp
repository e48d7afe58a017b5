#ifndef SIMFIS_FUZZY_HPP
#define SIMFIS_FUZZY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simfis/piecewise_linear.hpp"

namespace simfis {

/// Named variable with its declared closed-interval domain of discourse.
struct Universe {
    std::string name;
    Interval interval;

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.name == b.name && a.interval == b.interval;
    }
};

/// Named membership function bound to a universe. Valid sets have their
/// membership domain equal to the universe interval and values in [0, 1];
/// see validate_set.
struct FuzzySet {
    std::string name;
    Universe universe;
    PiecewiseLinear membership;
};

struct UniverseMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SetViolation {
    enum class Kind { Domain, Range };
    Kind kind;
    std::string detail;
};

/// Violations are data, not failures: an empty result means the set is valid.
inline std::vector<SetViolation> validate_set(const FuzzySet& s) {
    std::vector<SetViolation> out;
    if (!(s.membership.domain() == s.universe.interval))
        out.push_back({SetViolation::Kind::Domain,
                       "membership domain of '" + s.name + "' differs from universe '" +
                           s.universe.name + "'"});
    for (const auto& p : s.membership.points()) {
        if (p.v < Rational(0) || Rational(1) < p.v) {
            out.push_back({SetViolation::Kind::Range,
                           "membership value " + p.v.to_string() + " of '" + s.name +
                               "' at x = " + p.x.to_string() + " outside [0, 1]"});
        }
    }
    return out;
}

/// Similarity of two fuzzy sets on one universe:
///   SM(A, B) = (1 + mean absolute membership difference)^(-1)
/// computed exactly; always in (0, 1], and 1 iff the memberships coincide.
inline Rational similarity(const FuzzySet& a, const FuzzySet& b) {
    if (!(a.universe == b.universe))
        throw UniverseMismatchError("similarity: '" + a.name + "' on universe '" +
                                    a.universe.name + "' vs '" + b.name + "' on '" +
                                    b.universe.name + "'");
    const Rational len = a.universe.interval.length();
    return len / (len + abs_diff_integral(a.membership, b.membership));
}

}  // namespace simfis

#endif  // SIMFIS_FUZZY_HPP
