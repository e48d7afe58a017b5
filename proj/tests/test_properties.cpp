#include <catch2/catch_amalgamated.hpp>

#include "property_suite.hpp"

using namespace testutil;

TEST_CASE("randomized invariant families", "[properties]") {
    for (const auto& [name, outcome] : run_all_properties(500)) {
        INFO(name);
        CHECK(outcome.cases >= 500);
        for (const auto& f : outcome.failures) {
            INFO(f);
        }
        CHECK(outcome.failures.empty());
    }
}

// Piecewise-linear algebra invariants beyond the shared suite.

TEST_CASE("operations close over canonical functions", "[properties]") {
    Gen gen(0x5EED);
    const Interval dom(Rational(0), Rational(2));
    const auto is_canonical = [](const PiecewiseLinear& f) {
        const auto& pts = f.points();
        if (pts.size() < 2) return false;
        if (pts.front().x != f.domain().lo || pts.back().x != f.domain().hi) return false;
        for (size_t i = 1; i < pts.size(); ++i)
            if (!(pts[i - 1].x < pts[i].x)) return false;
        for (size_t i = 1; i + 1 < pts.size(); ++i) {
            const auto& a = pts[i - 1];
            const auto& b = pts[i];
            const auto& c = pts[i + 1];
            if ((b.v - a.v) * (c.x - b.x) == (c.v - b.v) * (b.x - a.x)) return false;
        }
        return true;
    };
    for (int i = 0; i < 500; ++i) {
        PiecewiseLinear f = gen.membership(dom);
        PiecewiseLinear g = gen.membership(dom);
        Rational s = gen.rational_01(11);
        if (s.is_zero()) s = Rational(1, 2);
        REQUIRE(is_canonical(pointwise_min(f, g)));
        REQUIRE(is_canonical(pointwise_max(f, g)));
        REQUIRE(is_canonical(f.scale(s)));
        REQUIRE(is_canonical(f.clip_div(s)));
        REQUIRE(is_canonical(f.complement()));
    }
}

TEST_CASE("extrema dominate their operands at every breakpoint", "[properties]") {
    Gen gen(0xBEEF);
    const Interval dom(Rational(0), Rational(1));
    for (int i = 0; i < 500; ++i) {
        PiecewiseLinear f = gen.general_pl(dom);
        PiecewiseLinear g = gen.general_pl(dom);
        PiecewiseLinear mx = pointwise_max(f, g);
        PiecewiseLinear mn = pointwise_min(f, g);
        for (const auto& p : mx.points()) {
            REQUIRE(f.eval(p.x) <= p.v);
            REQUIRE(g.eval(p.x) <= p.v);
        }
        for (const auto& p : mn.points()) {
            REQUIRE(p.v <= f.eval(p.x));
            REQUIRE(p.v <= g.eval(p.x));
        }
    }
}

TEST_CASE("zero integral difference iff canonical equality", "[properties]") {
    Gen gen(0x1DEA);
    const Interval dom(Rational(0), Rational(1));
    for (int i = 0; i < 500; ++i) {
        PiecewiseLinear f = gen.membership(dom);
        PiecewiseLinear g = (i % 4 == 0) ? f : gen.membership(dom);
        REQUIRE((abs_diff_integral(f, g) == Rational(0)) == (f == g));
    }
}

TEST_CASE("scaling commutes with evaluation", "[properties]") {
    Gen gen(0xACE);
    const Interval dom(Rational(0), Rational(3));
    for (int i = 0; i < 500; ++i) {
        PiecewiseLinear f = gen.membership(dom);
        Rational s = gen.rational_01(9);
        if (s.is_zero()) s = Rational(1, 3);
        Rational x = dom.lo + dom.length() * gen.rational_01(17);
        REQUIRE(f.scale(s).eval(x) == s * f.eval(x));
    }
}

TEST_CASE("clip-divide never lowers a membership function", "[properties]") {
    Gen gen(0xC11D);
    const Interval dom(Rational(0), Rational(1));
    for (int i = 0; i < 500; ++i) {
        PiecewiseLinear f = gen.membership(dom);
        Rational s = gen.rational_01(7);
        if (s.is_zero()) s = Rational(1, 7);
        PiecewiseLinear clipped = f.clip_div(s);
        REQUIRE(pointwise_leq(f, clipped));
        REQUIRE(clipped.within_unit());
    }
}

TEST_CASE("integrals add across any interior split", "[properties]") {
    Gen gen(0xADD);
    const Interval dom(Rational(0), Rational(2));
    for (int i = 0; i < 500; ++i) {
        PiecewiseLinear f = gen.membership(dom);
        PiecewiseLinear g = gen.membership(dom);
        Rational split = dom.lo + dom.length() * Rational(gen.int_in(1, 47), 48);
        Interval left(dom.lo, split), right(split, dom.hi);
        Rational sum = abs_diff_integral(restrict_to(f, left), restrict_to(g, left)) +
                       abs_diff_integral(restrict_to(f, right), restrict_to(g, right));
        REQUIRE(sum == abs_diff_integral(f, g));
    }
}

TEST_CASE("antecedent order inside a rule does not matter", "[properties]") {
    Gen gen(0x0DD);
    for (int i = 0; i < 200; ++i) {
        Gen::System sys = gen.system();
        if (sys.rb.inputs().size() < 2) continue;
        // reverse the input variables, antecedents and observations together
        std::vector<Universe> inputs(sys.rb.inputs().rbegin(), sys.rb.inputs().rend());
        std::vector<Rule> rules = sys.rb.rules();
        for (auto& r : rules)
            std::reverse(r.antecedents.begin(), r.antecedents.end());
        RuleBase reversed(inputs, sys.rb.output(), sys.rb.sets(), rules);
        Observations obs{{sys.obs.sets.rbegin(), sys.obs.sets.rend()}};
        for (ModificationType t : {ModificationType::Type1, ModificationType::Type2})
            REQUIRE(fmp_infer(sys.rb, sys.obs, t).aggregate ==
                    fmp_infer(reversed, obs, t).aggregate);
    }
}
