#ifndef SIMFIS_PIECEWISE_LINEAR_HPP
#define SIMFIS_PIECEWISE_LINEAR_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "simfis/rational.hpp"

namespace simfis {

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
        if (!(lo < hi))
            throw std::invalid_argument("Interval: need lo < hi");
    }

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

struct Breakpoint {
    Rational x;
    Rational v;

    friend bool operator==(const Breakpoint& a, const Breakpoint& b) {
        return a.x == b.x && a.v == b.v;
    }
};

/// Total piecewise-linear function on a closed interval.
///
/// Canonical form: breakpoint x's strictly increasing, first x == domain.lo,
/// last x == domain.hi, and no interior breakpoint collinear with its
/// neighbours. Two canonical functions are extensionally equal iff their
/// breakpoint sequences are identical, which is what operator== checks.
class PiecewiseLinear {
public:
    PiecewiseLinear(Interval domain, std::vector<Breakpoint> points)
        : domain_(std::move(domain)), pts_(std::move(points)) {
        if (pts_.size() < 2)
            throw std::invalid_argument("PiecewiseLinear: need at least 2 breakpoints");
        for (size_t i = 1; i < pts_.size(); ++i) {
            if (pts_[i].x == pts_[i - 1].x)
                throw std::invalid_argument("PiecewiseLinear: duplicate x at " +
                                            pts_[i].x.to_string());
            if (pts_[i].x < pts_[i - 1].x)
                throw std::invalid_argument("PiecewiseLinear: breakpoints not sorted");
        }
        if (pts_.front().x != domain_.lo || pts_.back().x != domain_.hi)
            throw std::invalid_argument("PiecewiseLinear: endpoint breakpoints must match domain");
        remove_collinear();
    }

    static PiecewiseLinear constant(Interval domain, Rational v) {
        std::vector<Breakpoint> pts{{domain.lo, v}, {domain.hi, v}};
        return PiecewiseLinear(std::move(domain), std::move(pts));
    }

    const Interval& domain() const { return domain_; }
    const std::vector<Breakpoint>& points() const { return pts_; }

    /// Exact linear interpolation. No extrapolation: x outside the domain is
    /// a domain error.
    Rational eval(const Rational& x) const {
        if (!domain_.contains(x))
            throw std::domain_error("PiecewiseLinear::eval: " + x.to_string() +
                                    " outside [" + domain_.lo.to_string() + ", " +
                                    domain_.hi.to_string() + "]");
        auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                                   [](const Rational& a, const Breakpoint& p) { return a < p.x; });
        if (it == pts_.begin()) return pts_.front().v;
        if (it == pts_.end()) return pts_.back().v;
        const Breakpoint& r = *it;
        const Breakpoint& l = *(it - 1);
        if (l.x == x) return l.v;
        return l.v + (r.v - l.v) * (x - l.x) / (r.x - l.x);
    }

    /// True iff every breakpoint value lies in [0, 1] (hence the whole
    /// function does, by linearity).
    bool within_unit() const {
        const Rational zero(0), one(1);
        for (const auto& p : pts_)
            if (p.v < zero || one < p.v) return false;
        return true;
    }

    /// Pointwise 1 - f. Requires 0 <= f <= 1.
    PiecewiseLinear complement() const {
        if (!within_unit())
            throw std::domain_error("complement: function leaves [0, 1]");
        std::vector<Breakpoint> pts = pts_;
        for (auto& p : pts) p.v = Rational(1) - p.v;
        return PiecewiseLinear(domain_, std::move(pts));
    }

    /// Pointwise s * f for a similarity factor s in (0, 1].
    PiecewiseLinear scale(const Rational& s) const {
        require_unit_factor(s, "scale");
        std::vector<Breakpoint> pts = pts_;
        for (auto& p : pts) p.v = p.v * s;
        return PiecewiseLinear(domain_, std::move(pts));
    }

    /// Pointwise min(1, f / s) for s in (0, 1]; requires 0 <= f <= 1.
    /// The crossing points where f == s become new breakpoints.
    PiecewiseLinear clip_div(const Rational& s) const;

    friend bool operator==(const PiecewiseLinear& f, const PiecewiseLinear& g) {
        return f.domain_ == g.domain_ && f.pts_ == g.pts_;
    }

private:
    static void require_unit_factor(const Rational& s, const char* op) {
        if (!(Rational(0) < s) || Rational(1) < s)
            throw std::domain_error(std::string(op) + ": factor " + s.to_string() +
                                    " outside (0, 1]");
    }

    // Stack pass: drops every interior breakpoint collinear with its
    // neighbours, so structural equality equals extensional equality.
    void remove_collinear() {
        if (pts_.size() < 3) return;
        std::vector<Breakpoint> out;
        out.reserve(pts_.size());
        for (auto& p : pts_) {
            while (out.size() >= 2) {
                const Breakpoint& a = out[out.size() - 2];
                const Breakpoint& b = out[out.size() - 1];
                if ((b.v - a.v) * (p.x - b.x) == (p.v - b.v) * (b.x - a.x))
                    out.pop_back();
                else
                    break;
            }
            out.push_back(std::move(p));
        }
        pts_ = std::move(out);
    }

    Interval domain_;
    std::vector<Breakpoint> pts_;
};

namespace detail {

inline void require_same_domain(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    if (!(f.domain() == g.domain()))
        throw std::invalid_argument("piecewise-linear operands have mismatched domains");
}

/// Sorted union of both functions' breakpoint x-coordinates.
inline std::vector<Rational> merged_grid(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    std::vector<Rational> xs;
    xs.reserve(f.points().size() + g.points().size());
    auto it = f.points().begin();
    auto jt = g.points().begin();
    while (it != f.points().end() || jt != g.points().end()) {
        if (jt == g.points().end() || (it != f.points().end() && it->x < jt->x)) {
            xs.push_back(it->x);
            ++it;
        } else if (it == f.points().end() || jt->x < it->x) {
            xs.push_back(jt->x);
            ++jt;
        } else {
            xs.push_back(it->x);
            ++it;
            ++jt;
        }
    }
    return xs;
}

}  // namespace detail

/// Every x where f - g changes sign, in increasing order. Tangencies (sign
/// touches zero without flipping) and intervals where f == g contribute
/// nothing.
inline std::vector<Rational> crossings(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    detail::require_same_domain(f, g);
    const std::vector<Rational> xs = detail::merged_grid(f, g);
    std::vector<int> sgn(xs.size());
    std::vector<Rational> d(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        d[i] = f.eval(xs[i]) - g.eval(xs[i]);
        sgn[i] = d[i].sign();
    }

    std::vector<Rational> out;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        // Strict sign flip inside a cell: one interior zero of the linear
        // difference.
        if (sgn[i] * sgn[i + 1] < 0) {
            out.push_back(xs[i] + (xs[i + 1] - xs[i]) * d[i] / (d[i] - d[i + 1]));
        }
    }
    // Grid points where the difference is exactly zero: crossings iff the
    // nearest nonzero signs on the two sides disagree. Zero-difference
    // segments are skipped while looking for those signs.
    for (size_t i = 1; i + 1 < xs.size(); ++i) {
        if (sgn[i] != 0) continue;
        int left = 0;
        for (size_t k = i; k-- > 0;)
            if (sgn[k] != 0) {
                left = sgn[k];
                break;
            }
        int right = 0;
        for (size_t k = i + 1; k < xs.size(); ++k)
            if (sgn[k] != 0) {
                right = sgn[k];
                break;
            }
        if (left != 0 && right != 0 && left != right) out.push_back(xs[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/// Merged breakpoints plus crossings: on each cell of this grid, f - g is
/// linear with constant sign in the interior.
inline std::vector<Rational> refined_grid(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    std::vector<Rational> xs = merged_grid(f, g);
    std::vector<Rational> cr = crossings(f, g);
    if (!cr.empty()) {
        xs.insert(xs.end(), cr.begin(), cr.end());
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }
    return xs;
}

enum class Extremum { Min, Max };

inline PiecewiseLinear pointwise_extremum(Extremum kind, const PiecewiseLinear& f,
                                          const PiecewiseLinear& g) {
    require_same_domain(f, g);
    const std::vector<Rational> xs = refined_grid(f, g);
    std::vector<Breakpoint> pts;
    pts.reserve(xs.size());
    for (const Rational& x : xs) {
        Rational fv = f.eval(x);
        Rational gv = g.eval(x);
        pts.push_back({x, kind == Extremum::Min ? min(fv, gv) : max(fv, gv)});
    }
    return PiecewiseLinear(f.domain(), std::move(pts));
}

}  // namespace detail

inline PiecewiseLinear pointwise_min(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    return detail::pointwise_extremum(detail::Extremum::Min, f, g);
}

inline PiecewiseLinear pointwise_max(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    return detail::pointwise_extremum(detail::Extremum::Max, f, g);
}

inline PiecewiseLinear PiecewiseLinear::clip_div(const Rational& s) const {
    require_unit_factor(s, "clip_div");
    if (!within_unit())
        throw std::domain_error("clip_div: function leaves [0, 1]");
    std::vector<Breakpoint> pts = pts_;
    for (auto& p : pts) p.v = p.v / s;
    return pointwise_min(constant(domain_, Rational(1)),
                         PiecewiseLinear(domain_, std::move(pts)));
}

/// Exact integral of |f - g| over the shared domain. Splits at all
/// breakpoints and crossings; each cell is a trapezoid of constant sign.
inline Rational abs_diff_integral(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    detail::require_same_domain(f, g);
    const std::vector<Rational> xs = detail::refined_grid(f, g);
    Rational total(0);
    Rational prev = abs(f.eval(xs[0]) - g.eval(xs[0]));
    for (size_t i = 1; i < xs.size(); ++i) {
        Rational cur = abs(f.eval(xs[i]) - g.eval(xs[i]));
        total += (prev + cur) * (xs[i] - xs[i - 1]) / Rational(2);
        prev = std::move(cur);
    }
    return total;
}

/// Restriction to a sub-interval (both endpoints inside the domain).
inline PiecewiseLinear restrict_to(const PiecewiseLinear& f, const Interval& sub) {
    if (!f.domain().contains(sub.lo) || !f.domain().contains(sub.hi))
        throw std::domain_error("restrict_to: sub-interval outside domain");
    std::vector<Breakpoint> pts;
    pts.push_back({sub.lo, f.eval(sub.lo)});
    for (const auto& p : f.points())
        if (sub.lo < p.x && p.x < sub.hi) pts.push_back(p);
    pts.push_back({sub.hi, f.eval(sub.hi)});
    return PiecewiseLinear(sub, std::move(pts));
}

/// Exact pointwise comparison helpers built on the canonical form.
inline bool pointwise_leq(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    return pointwise_max(f, g) == g;
}

}  // namespace simfis

#endif  // SIMFIS_PIECEWISE_LINEAR_HPP
