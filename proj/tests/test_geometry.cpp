#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehpack/geometry.hpp"

using namespace ehpack;

namespace {

PlacedItem sq(const char* side, std::vector<const char*> at) {
    PlacedItem p;
    p.side = parse_rat(side);
    for (auto* a : at) p.anchor.push_back(parse_rat(a));
    return p;
}

std::vector<std::vector<int>> brute_red_cells(int beta, int gamma, int d) {
    std::vector<std::vector<int>> out;
    for (long s = 0; s < ipow(beta, d); ++s) {
        auto c = blue_cell(beta, d, s);  // lexicographic enumeration of the full grid
        for (int v : c)
            if (v >= beta - gamma) {
                out.push_back(c);
                break;
            }
    }
    return out;
}

}  // namespace

TEST_CASE("blue slots") {
    ParameterSet p = builtin_prior_params();
    // type 5 is (0.4, 0.5] with beta 2
    auto a = blue_slot(5, 3, p);
    CHECK(a[0] == Rat(1, 2));
    CHECK(a[1] == Rat(1, 2));
    CHECK(blue_slot(1, 0, p) == std::vector<Rat>{0, 0});
    CHECK(blue_cell(2, 3, 5) == std::vector<int>{1, 0, 1});
    CHECK(blue_cell(2, 2, 3) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(blue_slot(5, 4, p), std::out_of_range);
}

TEST_CASE("red cells") {
    CHECK(red_cell(2, 1, 2, 0) == std::vector<int>{0, 1});
    CHECK(red_cell(2, 1, 2, 1) == std::vector<int>{1, 0});
    CHECK(red_cell(2, 1, 2, 2) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(red_cell(2, 1, 2, 3), std::out_of_range);
    CHECK(brute_red_cells(5, 2, 2).size() == 16);
    CHECK(brute_red_cells(4, 4, 3).size() == 64);
    for (int d : {2, 3})
        for (int beta = 1; beta <= 7; ++beta)
            for (int gamma = 1; gamma <= beta; ++gamma) {
                auto all = brute_red_cells(beta, gamma, d);
                REQUIRE(static_cast<long>(all.size()) == ipow(beta, d) - ipow(beta - gamma, d));
                for (size_t s = 0; s < all.size(); ++s)
                    CHECK(red_cell(beta, gamma, d, s) == all[s]);
            }
}

TEST_CASE("red slots hug the far corner") {
    ParameterSet p = builtin_prior_params();
    // type 16 (1/11, 0.1]: beta 10, gamma 2
    for (long s = 0; s < p.theta(16); ++s) {
        auto a = red_slot(16, s, p);
        bool near = false;
        for (auto& x : a) near = near || x >= frac(4, 5);
        CHECK(near);
    }
}

TEST_CASE("verify") {
    BinLayout l{2, {sq("0.5", {"0", "0"}), sq("0.5", {"0.5", "0"})}};
    CHECK_FALSE(verify(l).has_value());
    l.items[1] = sq("0.5", {"0.4", "0"});
    auto v = verify(l);
    REQUIRE(v.has_value());
    CHECK(v->kind == LayoutViolation::Overlap);
    CHECK(v->first == 0);
    CHECK(v->second == 1);
    BinLayout c{2, {sq("0.6", {"0.5", "0"})}};
    auto w = verify(c);
    REQUIRE(w.has_value());
    CHECK(w->kind == LayoutViolation::Containment);
    BinLayout corner{3, {sq("1/2", {"0", "0", "0"}), sq("1/2", {"1/2", "1/2", "1/2"}), sq("1/2", {"1/2", "0", "0"})}};
    CHECK_FALSE(verify(corner).has_value());
    corner.items.push_back(sq("0.1", {"0.45", "0.45", "0.45"}));
    auto x = verify(corner);
    REQUIRE(x.has_value());
    CHECK(x->first == 0);
    CHECK(x->second == 3);
}

TEST_CASE("compatibility on a few host/guest pairs") {
    ParameterSet p = builtin_paper_params(2);
    for (int host : {2, 9, 17})
        for (int j : {19, 40, 100, 151}) {
            if (p.gamma(j) * p.t(j) > p.delta(host)) continue;
            BinLayout l{2, {}};
            for (long s = 0; s < p.blue_capacity(host); ++s)
                l.items.push_back({p.t(host), blue_slot(host, s, p), Color::Blue, host});
            for (long s = 0; s < p.theta(j); ++s)
                l.items.push_back({p.t(j), red_slot(j, s, p), Color::Red, j});
            CHECK_FALSE(verify(l).has_value());
        }
}
