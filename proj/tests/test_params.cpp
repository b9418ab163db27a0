#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ehpack/params.hpp"

using namespace ehpack;

namespace {

bool has_rule(const std::vector<Violation>& v, const std::string& rule, int type = -1) {
    for (const auto& x : v)
        if (x.rule == rule && (type < 0 || x.type == type)) return true;
    return false;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
    CHECK(parse_rat("0.6475") == Rat(259, 400));
    CHECK(parse_rat("3/70") == Rat(3, 70));
    CHECK(parse_rat("-1.5") == Rat(-3, 2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat(".25") == Rat(1, 4));
    CHECK_THROWS_AS(parse_rat("3/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("0.1.2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("square set spot values") {
    auto p = builtin_paper_params(2);
    CHECK(p.N() == 151);
    CHECK(p.M() == 111);
    CHECK(p.t(1) == 1);
    CHECK(p.t(152) == Rat(1, 111));
    CHECK(p.alpha(19) == parse_rat("0.11526431542309074"));
    CHECK(p.t(18) == Rat(1, 2));
    CHECK(p.t(19) == Rat(2, 5));
    CHECK(p.beta(18) == 2);
    CHECK(p.gamma(18) == 0);
    CHECK(p.phi(18) == 0);
    CHECK(p.t(9) == Rat(2, 3));
    CHECK(p.rb.k() == 16);
    CHECK(p.derived.caseW.at(16) == parse_rat("0.872756492818088"));
    for (int i = 1; i <= 18; ++i) CHECK(p.alpha(i) == 0);
}

TEST_CASE("cube set spot values") {
    auto p = builtin_paper_params(3);
    CHECK(p.alpha(75) == 0);
    CHECK(p.d() == 3);
    CHECK_THROWS_AS(builtin_paper_params(4), std::invalid_argument);
}

TEST_CASE("validate flags only the two beta rows of the printed set") {
    for (int d : {2, 3}) {
        auto v = validate(builtin_paper_params(d));
        REQUIRE(v.size() == 2);
        CHECK(v[0].type == 134);
        CHECK(v[0].rule == "beta-floor");
        CHECK(v[1].type == 140);
        CHECK(v[1].rule == "beta-floor");
        CHECK(validate(builtin_paper_params(d, BetaVariant::Corrected)).empty());
    }
}

TEST_CASE("alpha set properties") {
    for (int d : {2, 3}) {
        auto p = builtin_paper_params(d);
        const Rat DeltaK = p.rb.Delta[p.rb.k()];
        for (int i = 1; i <= p.N(); ++i) {
            if (p.alpha(i) > 0) {
                CHECK(p.theta(i) >= 1);
                CHECK(p.t(i) <= DeltaK);
            }
            if (i >= 19 && p.gamma(i) > 0) {
                Int g = floor_int(Rat(Rat(3, 10) / p.t(i)));
                CHECK(p.gamma(i) == std::max<long>(1, g.get_si()));
            }
        }
    }
}

TEST_CASE("prior set") {
    auto p = builtin_prior_params();
    CHECK(validate(p).empty());
    CHECK(p.N() == 16);
    CHECK(p.t(10) == Rat(1, 4));
    CHECK(p.t(11) == Rat(1, 5));
    CHECK(p.beta(10) == 4);
    CHECK(p.gamma(10) == 1);
    CHECK(p.theta(10) == 7);
    CHECK(p.alpha(10) == parse_rat("0.2248"));
    CHECK(p.theta(16) == 36);
    CHECK(p.alpha(5) == 0);
    const long printed[17] = {0, 0, 0, 0, 0, 0, 3, 3, 0, 5, 7, 9, 11, 13, 15, 17, 36};
    for (int i = 1; i <= 16; ++i) CHECK(p.theta(i) == printed[i]);
}

TEST_CASE("illustration set") {
    auto p = builtin_example_params();
    CHECK(validate(p).empty());
    CHECK(p.theta(5) == 5);
    CHECK(p.theta(6) == 5);
}

TEST_CASE("derive") {
    IntervalTable it{2, 1, {Rat(0), Rat(1), Rat(1, 30)}, 30};
    RedBlueConfig rb{{Rat(0), Rat(0)}, {Rat(0)}, {0, 0}, {0, 5}, {0, 2}};
    auto dp = derive(it, rb);
    CHECK(dp.theta[1] == 16);
    CHECK(dp.delta[1] == 0);
    // gamma rule: t = 1/30, Delta_1 = 0.21 -> 6
    CHECK(floor_int(Rat(parse_rat("0.21") / Rat(1, 30))) == 6);
}

TEST_CASE("admissibility violation is reported") {
    auto p = builtin_prior_params();
    p.rb.phi[5] = 1;  // (0.4,0.5] with beta 2 leaves no strip
    p.derived = derive(p.intervals, p.rb);
    auto v = validate(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "admissibility");
    CHECK(v[0].type == 5);
}

TEST_CASE("text round trip") {
    for (auto p : {builtin_paper_params(2), builtin_paper_params(3, BetaVariant::Corrected),
                   builtin_prior_params(), builtin_example_params()}) {
        auto q = params_from_text(params_to_text(p));
        CHECK(q == p);
    }
    const char* path = "test_params_roundtrip.txt";
    save_params(builtin_paper_params(2), path);
    CHECK(load_params(path) == builtin_paper_params(2));
    std::remove(path);
}

TEST_CASE("parse errors carry the line") {
    std::string text = params_to_text(builtin_prior_params());
    auto pos = text.find("6 2/5 2 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 9, "6 3/ 2 1");
    int line = 1;
    for (size_t k = 0; k < pos; ++k) line += text[k] == '\n';
    try {
        params_from_text(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == line);
    }
}

TEST_CASE("non-monotone file is reported by validate") {
    std::string text = params_to_text(builtin_prior_params());
    auto pos = text.find("6 2/5 2 1");
    text.replace(pos, 9, "6 3/5 2 1");
    auto v = validate(params_from_text(text));
    CHECK(has_rule(v, "monotonicity"));
}
