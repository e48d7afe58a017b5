#include <catch2/catch_amalgamated.hpp>

#include "example2.hpp"
#include "simfis/inference.hpp"

using namespace simfis;
using testutil::Q;
using testutil::example2;
using testutil::make_pl;

TEST_CASE("rule base validation", "[inference]") {
    const auto& ex = example2();
    CHECK(ex.rb.rules().size() == 2);
    CHECK(ex.rb.inputs().size() == 2);

    CHECK_THROWS_AS(RuleBase({ex.ux1}, ex.uy, {ex.A11, ex.B1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(RuleBase({}, ex.uy, {ex.B1}, {Rule{"r", {}, "B1"}}),
                    std::invalid_argument);
    // arity mismatch
    CHECK_THROWS_AS(RuleBase({ex.ux1, ex.ux2}, ex.uy, {ex.A11, ex.B1},
                             {Rule{"r", {"A11"}, "B1"}}),
                    std::invalid_argument);
    // antecedent on the wrong universe
    CHECK_THROWS_AS(RuleBase({ex.ux1, ex.ux2}, ex.uy, {ex.A11, ex.A12, ex.B1},
                             {Rule{"r", {"A12", "A11"}, "B1"}}),
                    std::invalid_argument);
    // unknown set
    CHECK_THROWS_AS(RuleBase({ex.ux1, ex.ux2}, ex.uy, {ex.A11, ex.A12, ex.B1},
                             {Rule{"r", {"A11", "nope"}, "B1"}}),
                    std::invalid_argument);
}

TEST_CASE("forward sub-results, type 1", "[inference]") {
    const auto& ex = example2();
    PiecewiseLinear r1 =
        fmp_sub_result(ex.rb, ex.rb.rules()[0], ex.obs_star, ModificationType::Type1);
    CHECK(r1 == make_pl(Q(0), Q(1), {{Q(0), Q(3, 4)}, {Q(1), Q(0)}}));

    // observations identical to rule 2's antecedents: SMs are 1
    PiecewiseLinear r2 =
        fmp_sub_result(ex.rb, ex.rb.rules()[1], ex.obs_star, ModificationType::Type1);
    CHECK(r2 == ex.B2.membership);
}

TEST_CASE("forward sub-results, type 2", "[inference]") {
    const auto& ex = example2();
    PiecewiseLinear r1 =
        fmp_sub_result(ex.rb, ex.rb.rules()[0], ex.obs_star, ModificationType::Type2);
    CHECK(r1 == make_pl(Q(0), Q(1), {{Q(0), Q(1)}, {Q(13, 73), Q(1)}, {Q(1), Q(0)}}));

    PiecewiseLinear r2 =
        fmp_sub_result(ex.rb, ex.rb.rules()[1], ex.obs_star, ModificationType::Type2);
    CHECK(r2 == ex.B2.membership);
}

TEST_CASE("forward aggregates", "[inference]") {
    const auto& ex = example2();
    FmpResult t1 = fmp_infer(ex.rb, ex.obs_star, ModificationType::Type1);
    CHECK(t1.aggregate ==
          make_pl(Q(0), Q(1), {{Q(0), Q(3, 4)}, {Q(1, 5), Q(3, 5)}, {Q(1), Q(1)}}));
    REQUIRE(t1.rules.size() == 2);
    CHECK(t1.rules[0].similarities ==
          std::vector<Rational>{Q(3, 4), Q(60, 73)});
    CHECK(t1.rules[1].similarities == std::vector<Rational>{Q(1), Q(1)});
    CHECK(t1.rules[0].terms.size() == 2);

    FmpResult t2 = fmp_infer(ex.rb, ex.obs_star, ModificationType::Type2);
    CHECK(t2.aggregate == make_pl(Q(0), Q(1),
                                  {{Q(0), Q(1)},
                                   {Q(13, 73), Q(1)},
                                   {Q(43, 103), Q(73, 103)},
                                   {Q(1), Q(1)}}));
}

TEST_CASE("single rule with its own antecedents is the identity", "[inference]") {
    RuleBase rb = testutil::single_rule_base();
    Observations obs{{rb.set("A")}};
    for (ModificationType t : {ModificationType::Type1, ModificationType::Type2}) {
        FmpResult res = fmp_infer(rb, obs, t);
        CHECK(res.aggregate == rb.set("B").membership);
    }
}

TEST_CASE("backward sub-results, type 1", "[inference]") {
    const auto& ex = example2();
    CHECK(fmt_sub_result(ex.rb, ex.rb.rules()[0], ex.Bstar, 0, ModificationType::Type1) ==
          make_pl(Q(0), Q(3), {{Q(0), Q(4, 5)}, {Q(3), Q(0)}}));
    CHECK(fmt_sub_result(ex.rb, ex.rb.rules()[0], ex.Bstar, 1, ModificationType::Type1) ==
          make_pl(Q(0), Q(1), {{Q(0), Q(8, 15)}, {Q(1), Q(4, 5)}}));
    CHECK(fmt_sub_result(ex.rb, ex.rb.rules()[1], ex.Bstar, 0, ModificationType::Type1) ==
          make_pl(Q(0), Q(3), {{Q(0), Q(2, 3)}, {Q(1), Q(0)}, {Q(3), Q(0)}}));
    CHECK(fmt_sub_result(ex.rb, ex.rb.rules()[1], ex.Bstar, 1, ModificationType::Type1) ==
          make_pl(Q(0), Q(1), {{Q(0), Q(2, 3)}, {Q(1), Q(1, 3)}}));
    CHECK_THROWS_AS(fmt_sub_result(ex.rb, ex.rb.rules()[0], ex.Bstar, 2,
                                   ModificationType::Type1),
                    std::invalid_argument);
}

TEST_CASE("backward sub-results, type 2", "[inference]") {
    const auto& ex = example2();
    CHECK(fmt_sub_result(ex.rb, ex.rb.rules()[0], ex.Bstar, 0, ModificationType::Type2) ==
          make_pl(Q(0), Q(3), {{Q(0), Q(1)}, {Q(3, 5), Q(1)}, {Q(3), Q(0)}}));
    CHECK(fmt_sub_result(ex.rb, ex.rb.rules()[0], ex.Bstar, 1, ModificationType::Type2) ==
          make_pl(Q(0), Q(1), {{Q(0), Q(5, 6)}, {Q(2, 5), Q(1)}, {Q(1), Q(1)}}));
    CHECK(fmt_sub_result(ex.rb, ex.rb.rules()[1], ex.Bstar, 0, ModificationType::Type2) ==
          make_pl(Q(0), Q(3), {{Q(0), Q(1)}, {Q(1, 3), Q(1)}, {Q(1), Q(0)}, {Q(3), Q(0)}}));
    CHECK(fmt_sub_result(ex.rb, ex.rb.rules()[1], ex.Bstar, 1, ModificationType::Type2) ==
          make_pl(Q(0), Q(1), {{Q(0), Q(1)}, {Q(2, 3), Q(1)}, {Q(1), Q(3, 4)}}));
}

TEST_CASE("backward aggregates", "[inference]") {
    const auto& ex = example2();
    FmtResult t1 = fmt_infer(ex.rb, ex.Bstar, ModificationType::Type1);
    REQUIRE(t1.aggregates.size() == 2);
    CHECK(t1.aggregates[0] == make_pl(Q(0), Q(3), {{Q(0), Q(4, 5)}, {Q(3), Q(0)}}));
    CHECK(t1.aggregates[1] ==
          make_pl(Q(0), Q(1), {{Q(0), Q(2, 3)}, {Q(2, 9), Q(16, 27)}, {Q(1), Q(4, 5)}}));
    CHECK(t1.rules[0].similarity == Q(4, 5));
    CHECK(t1.rules[1].similarity == Q(2, 3));

    FmtResult t2 = fmt_infer(ex.rb, ex.Bstar, ModificationType::Type2);
    CHECK(t2.aggregates[0] ==
          make_pl(Q(0), Q(3), {{Q(0), Q(1)}, {Q(3, 5), Q(1)}, {Q(3), Q(0)}}));
    CHECK(t2.aggregates[1] == PiecewiseLinear::constant(testutil::unit(), Q(1)));
}

TEST_CASE("single-rule backward inference unfolds the definition", "[inference]") {
    RuleBase rb = testutil::single_rule_base();
    FuzzySet bstar{"bs", rb.output(), rb.set("B").membership.complement()};
    Rational sm = similarity(rb.set("B"), bstar);
    FmtResult res = fmt_infer(rb, bstar, ModificationType::Type1);
    CHECK(res.aggregates[0] == rb.set("A").membership.scale(sm));
}

TEST_CASE("rule order does not matter", "[inference]") {
    const auto& ex = example2();
    RuleBase swapped({ex.ux1, ex.ux2}, ex.uy,
                     {ex.A11, ex.A12, ex.A21, ex.A22, ex.B1, ex.B2},
                     {Rule{"r2", {"A21", "A22"}, "B2"}, Rule{"r1", {"A11", "A12"}, "B1"}});
    for (ModificationType t : {ModificationType::Type1, ModificationType::Type2}) {
        CHECK(fmp_infer(ex.rb, ex.obs_star, t).aggregate ==
              fmp_infer(swapped, ex.obs_star, t).aggregate);
        FmtResult a = fmt_infer(ex.rb, ex.Bstar, t);
        FmtResult b = fmt_infer(swapped, ex.Bstar, t);
        CHECK(a.aggregates[0] == b.aggregates[0]);
        CHECK(a.aggregates[1] == b.aggregates[1]);
    }
}

TEST_CASE("observation validation", "[inference]") {
    const auto& ex = example2();
    Observations wrong_count{{ex.A1star}};
    CHECK_THROWS_AS(fmp_infer(ex.rb, wrong_count, ModificationType::Type1),
                    std::invalid_argument);
    Observations wrong_universe{{ex.A2star, ex.A1star}};
    CHECK_THROWS_AS(fmp_infer(ex.rb, wrong_universe, ModificationType::Type1),
                    std::invalid_argument);
    CHECK_THROWS_AS(fmt_infer(ex.rb, ex.A1star, ModificationType::Type1),
                    std::invalid_argument);
}
