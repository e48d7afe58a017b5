#ifndef SIMFIS_ORACLE_HPP
#define SIMFIS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "simfis/fuzzy.hpp"

namespace simfis {

/// Uniformly sampled function values over a universe interval, endpoints
/// included. Plain binary floating point throughout; this is the
/// cross-validation side, deliberately sharing no exact-arithmetic code
/// paths with the engine.
struct SampledFunction {
    double lo;
    double hi;
    std::vector<double> values;

    size_t size() const { return values.size(); }
    double x_at(size_t i) const {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(values.size() - 1);
    }
};

namespace oracle {

namespace detail {

inline void require_count(size_t n) {
    if (n < 2) throw std::invalid_argument("oracle: sample count must be >= 2");
}

inline void require_same_shape(const SampledFunction& a, const SampledFunction& b) {
    if (a.size() != b.size() || a.lo != b.lo || a.hi != b.hi)
        throw std::invalid_argument("oracle: sampled operands have mismatched shape");
}

/// Double-precision view of a piecewise-linear function: breakpoints
/// converted once, then plain interpolation.
struct LinearView {
    std::vector<double> xs;
    std::vector<double> vs;

    explicit LinearView(const PiecewiseLinear& f) {
        xs.reserve(f.points().size());
        vs.reserve(f.points().size());
        for (const auto& p : f.points()) {
            xs.push_back(p.x.to_double());
            vs.push_back(p.v.to_double());
        }
    }

    double operator()(double x) const {
        if (x <= xs.front()) return vs.front();
        if (x >= xs.back()) return vs.back();
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        size_t i = static_cast<size_t>(it - xs.begin());
        double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
        return vs[i - 1] + t * (vs[i] - vs[i - 1]);
    }
};

}  // namespace detail

inline SampledFunction sample(const PiecewiseLinear& f, size_t n) {
    detail::require_count(n);
    detail::LinearView view(f);
    SampledFunction s{f.domain().lo.to_double(), f.domain().hi.to_double(), {}};
    s.values.reserve(n);
    const double h = (s.hi - s.lo) / static_cast<double>(n - 1);
    for (size_t i = 0; i < n; ++i) s.values.push_back(view(s.lo + h * static_cast<double>(i)));
    return s;
}

/// Trapezoidal similarity on a uniform n-point grid, blind to breakpoints
/// and crossings. Summation is left-to-right for determinism.
inline double oracle_similarity(const FuzzySet& a, const FuzzySet& b, size_t n) {
    if (!(a.universe == b.universe))
        throw UniverseMismatchError("oracle_similarity: sets on different universes");
    detail::require_count(n);
    detail::LinearView fa(a.membership);
    detail::LinearView fb(b.membership);
    const double lo = a.universe.interval.lo.to_double();
    const double hi = a.universe.interval.hi.to_double();
    const double h = (hi - lo) / static_cast<double>(n - 1);
    double integral = 0.0;
    double prev = std::fabs(fa(lo) - fb(lo));
    for (size_t i = 1; i < n; ++i) {
        double x = lo + h * static_cast<double>(i);
        double cur = std::fabs(fa(x) - fb(x));
        integral += 0.5 * (prev + cur) * h;
        prev = cur;
    }
    return 1.0 / (1.0 + integral / (hi - lo));
}

// Sample-by-sample pointwise operations, mirroring the engine's pipeline in
// plain doubles.

inline SampledFunction scale(double s, SampledFunction f) {
    for (double& v : f.values) v *= s;
    return f;
}

inline SampledFunction clip_div(SampledFunction f, double s) {
    for (double& v : f.values) v = std::min(1.0, v / s);
    return f;
}

inline SampledFunction complement(SampledFunction f) {
    for (double& v : f.values) v = 1.0 - v;
    return f;
}

inline SampledFunction pointwise_min(SampledFunction a, const SampledFunction& b) {
    detail::require_same_shape(a, b);
    for (size_t i = 0; i < a.size(); ++i) a.values[i] = std::min(a.values[i], b.values[i]);
    return a;
}

inline SampledFunction pointwise_max(SampledFunction a, const SampledFunction& b) {
    detail::require_same_shape(a, b);
    for (size_t i = 0; i < a.size(); ++i) a.values[i] = std::max(a.values[i], b.values[i]);
    return a;
}

struct CheckReport {
    double max_deviation;
    double tolerance;
    bool pass;
};

/// Max absolute deviation between the exact function (evaluated at the exact
/// uniform grid points, then converted to double) and the sampled values.
inline CheckReport cross_check(const PiecewiseLinear& exact, const SampledFunction& approx,
                               double tol) {
    const size_t n = approx.size();
    const Rational lo = exact.domain().lo;
    const Rational width = exact.domain().length();
    double max_dev = 0.0;
    for (size_t i = 0; i < n; ++i) {
        Rational x = lo + width * Rational(static_cast<long long>(i),
                                           static_cast<long long>(n - 1));
        double dev = std::fabs(exact.eval(x).to_double() - approx.values[i]);
        max_dev = std::max(max_dev, dev);
    }
    return CheckReport{max_dev, tol, max_dev <= tol};
}

inline CheckReport cross_check(const Rational& exact, double approx, double tol) {
    double dev = std::fabs(exact.to_double() - approx);
    return CheckReport{dev, tol, dev <= tol};
}

}  // namespace oracle

}  // namespace simfis

#endif  // SIMFIS_ORACLE_HPP
