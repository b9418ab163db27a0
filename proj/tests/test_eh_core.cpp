#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "ehpack/eh_core.hpp"

using namespace ehpack;

namespace {

std::vector<Rat> appendix_stream() {
    std::vector<Rat> s;
    s.push_back(parse_rat("0.9"));
    for (int k = 0; k < 2; ++k) s.push_back(Rat(2, 3));
    for (int k = 0; k < 2; ++k) s.push_back(parse_rat("0.3"));
    for (int k = 0; k < 14; ++k) s.push_back(Rat(1, 3));
    for (int k = 0; k < 12; ++k) s.push_back(parse_rat("0.3"));
    return s;
}

}  // namespace

TEST_CASE("classification") {
    Packer pk(builtin_paper_params(2));
    CHECK(pk.classify(parse_rat("0.9")) == 1);
    CHECK(pk.classify(Rat(2, 3)) == 9);
    CHECK(pk.classify(Rat(1, 111)) == 0);
    CHECK(pk.classify(Rat(1, 110)) == 151);
    CHECK(pk.classify(parse_rat("0.45")) == 18);
    CHECK(pk.classify(Rat(1)) == 1);
    CHECK_THROWS_AS(pk.classify(Rat(0)), std::out_of_range);
    CHECK_THROWS_AS(pk.classify(Rat(11, 10)), std::out_of_range);
}

TEST_CASE("coloring counter") {
    ParameterSet p = builtin_example_params();
    Packer pk(p);
    std::vector<Color> seen;
    for (int n = 1; n <= 20; ++n) {
        auto pl = pk.pack_item(Rat(1, 3));
        seen.push_back(pl.color);
        CHECK(pk.e(5) == floor_int(Rat(Rat(2, 5) * n)));
    }
    CHECK(seen[0] == Color::Blue);
    CHECK(seen[1] == Color::Blue);
    CHECK(seen[2] == Color::Red);
    CHECK(seen[3] == Color::Blue);
    CHECK(seen[4] == Color::Red);
}

TEST_CASE("alpha 0 and alpha 1") {
    ParameterSet p = builtin_example_params();
    p.rb.alpha[6] = 1;
    Packer pk(p);
    for (int n = 0; n < 5; ++n) {
        CHECK(pk.pack_item(Rat(1, 10) + Rat(1, 1000)).color == Color::Red);
        CHECK(pk.pack_item(Rat(1, 2)).color == Color::Blue);
    }
}

TEST_CASE("single large item and the beta grid") {
    Packer a(builtin_paper_params(2));
    auto pl = a.pack_item(parse_rat("0.9"));
    CHECK(pl.newBin);
    CHECK(a.bins().size() == 1);
    CHECK(a.bins()[0].kind == BinKind::Plain);
    CHECK(a.open_bin_count() == 0);
    Packer b(builtin_paper_params(2));
    for (int k = 0; k < 4; ++k) b.pack_item(parse_rat("0.45"));
    CHECK(b.bins().size() == 1);
    CHECK(b.stats().totalBins == 1);
}

TEST_CASE("empty stream") {
    Packer pk(builtin_paper_params(3));
    auto s = pk.stats();
    CHECK(s.totalBins == 0);
    CHECK(s.q == 1);
    CHECK(s.eIndex == 0);
}

TEST_CASE("illustration trace") {
    ParameterSet p = builtin_example_params();
    Packer pk = pack_stream(appendix_stream(), p);
    REQUIRE(pk.bins().size() == 5);
    using MS = std::multimap<std::pair<int, int>, std::string>;
    auto ms = [&](size_t b) {
        MS m;
        auto l = pk.layout(b);
        for (auto& it : l.items) m.emplace(std::pair(it.typeIndex, static_cast<int>(it.color)), rat_str(it.side));
        CHECK_FALSE(verify(l).has_value());
        return m;
    };
    CHECK(pk.bins()[0].kind == BinKind::Plain);
    CHECK(ms(0).size() == 1);
    CHECK(pk.bins()[1].kind == BinKind::Mixed);
    CHECK(pk.bins()[1].blueType == 3);
    CHECK(pk.bins()[1].redType == 5);
    CHECK(pk.bins()[1].redCount == 5);
    CHECK(pk.bins()[2].kind == BinKind::Mixed);
    CHECK(pk.bins()[2].redType == 6);
    CHECK(pk.bins()[2].redCount == 5);
    CHECK(pk.bins()[3].kind == BinKind::Plain);
    CHECK(pk.bins()[3].blueType == 6);
    CHECK(pk.bins()[3].blueCount == 9);
    CHECK(pk.bins()[4].blueType == 5);
    CHECK(pk.bins()[4].blueCount == 9);
    for (size_t b = 0; b < 5; ++b) ms(b);
    auto s = pk.stats();
    CHECK(s.totalBins == 5);
    CHECK(s.Y == 2);
}

TEST_CASE("q and e") {
    ParameterSet p = builtin_paper_params(2);
    {
        Packer pk(p);
        pk.pack_item(p.t(4));  // (4,?)
        CHECK(pk.compute_q_e().first == 4);
    }
    {
        Packer pk(p);
        // type 25 alone: blue-open with phi != 0 counts as q = 5
        REQUIRE(p.phi(25) != 0);
        pk.pack_item(p.t(25));
        CHECK(pk.compute_q_e() == std::pair(5, 0));
    }
}

TEST_CASE("random streams: counters, accounting, layouts") {
    std::mt19937_64 rng(11);
    for (int d : {2, 3}) {
        ParameterSet p = builtin_paper_params(d);
        Packer pk(p);
        std::uniform_int_distribution<long> num(1, 1000000);
        for (int n = 0; n < 20000; ++n) {
            Rat s(num(rng), 1000000);
            if (rng() % 4 == 0) s /= 50;
            pk.pack_item(s);
            if (n % 97 == 0)
                for (int i = 1; i <= p.N(); ++i) REQUIRE(pk.e(i) == floor_int(Rat(p.alpha(i) * Rat(pk.n(i)))));
            REQUIRE(pk.open_bin_count() <= 3 * p.N() + p.M());
        }
        auto st = pk.stats();
        long sum = 0;
        for (int i = 1; i <= p.N(); ++i) sum += st.B[i] + st.R[i];
        CHECK(st.totalBins == sum - st.Y + st.smallBins);
        CHECK(st.totalBins == static_cast<long>(pk.bins().size()));
        for (int i = 1; i <= p.N(); ++i) {
            Rat lam(pk.n(i));
            CHECK(abs(Rat(st.B[i] - (1 - p.alpha(i)) * lam / p.blue_capacity(i))) <= 2);
            if (p.theta(i) > 0) CHECK(abs(Rat(st.R[i] - p.alpha(i) * lam / p.theta(i))) <= 2);
        }
        auto [q, e] = pk.compute_q_e();
        if (q >= 2 && q <= 9) CHECK(e <= 37 - q);
        if (q >= 10 && q <= 16) CHECK(e <= 35 - q);
        for (size_t b = 0; b < pk.bins().size(); ++b) REQUIRE_FALSE(verify(pk.layout(b)).has_value());
    }
}
