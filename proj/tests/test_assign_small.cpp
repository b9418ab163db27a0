#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "ehpack/assign_small.hpp"

using namespace ehpack;

TEST_CASE("classification") {
    auto a = classify_small(parse_rat("0.004"), 111);
    CHECK(a.k == 1);
    CHECK(a.i == 125);
    auto b = classify_small(Rat(1, 111), 111);
    CHECK(b.k == 0);
    CHECK(b.i == 111);
    auto c = classify_small(Rat(1, 23), 11);
    CHECK(c.k == 1);
    CHECK(c.i == 11);
    CHECK_THROWS_AS(classify_small(Rat(1, 110), 111), std::out_of_range);
    CHECK_THROWS_AS(classify_small(Rat(0), 111), std::out_of_range);
}

TEST_CASE("one bin holds 22^2 items of side 1/23 for M=11") {
    AssignSmall as(2, 11);
    for (int k = 0; k < 484; ++k) {
        auto pl = as.place(Rat(1, 23));
        CHECK(pl.bin == 0);
        CHECK(pl.opened == (k == 0));
    }
    CHECK(as.bin_count() == 1);
    CHECK(as.bin(0).splits == 121);
    auto l = as.layout(0);
    CHECK(l.items.size() == 484);
    CHECK_FALSE(verify(l).has_value());
    auto pl = as.place(Rat(1, 23));
    CHECK(pl.bin == 1);
    REQUIRE(pl.closed.has_value());
    CHECK(*pl.closed == 0);
    CHECK(as.closed_volume_check(0) == Rat(484, 529));
}

TEST_CASE("k = 0 grid fills without splits") {
    AssignSmall as(2, 111);
    for (int k = 0; k < 111 * 111; ++k) as.place(Rat(1, 111));
    CHECK(as.bin_count() == 1);
    CHECK(as.bin(0).splits == 0);
    CHECK(as.bin(0).volume == 1);
    CHECK_FALSE(verify(as.layout(0)).has_value());
}

TEST_CASE("volume bound instances") {
    CHECK(AssignSmall::volume_bound(111, 2) == frac(12320, 12544));
    CHECK(AssignSmall::volume_bound(11, 2) == frac(120, 144));
}

TEST_CASE("random small streams keep the tiling and the volume bound") {
    std::mt19937_64 rng(7);
    for (int d : {2, 3}) {
        const int M = d == 2 ? 11 : 5;
        AssignSmall as(d, M);
        std::uniform_int_distribution<long> den(M, 8 * M);
        for (int n = 0; n < (d == 2 ? 20000 : 8000); ++n) {
            Rat s(1, den(rng));
            if (rng() % 2) s *= Rat(den(rng), den(rng) + 1);
            if (s > Rat(1, M)) s = Rat(1, M);
            as.place(s);
        }
        CHECK(as.active_count() <= static_cast<size_t>(M));
        for (size_t b = 0; b < as.bin_count(); ++b) {
            const auto& bin = as.bin(b);
            if (bin.closed) CHECK_NOTHROW(as.closed_volume_check(b));
            // Tiling: used leaves plus empty cells cover the bin exactly.
            Rat covered = frac(ipow(bin.i, d) - bin.nextCell, ipow(bin.i, d));
            for (size_t j = 1; j < bin.free.size(); ++j)
                covered += Rat(static_cast<long>(bin.free[j].size())) * pow_rat(Rat(1, (1L << j) * bin.i), d);
            for (const auto& it : bin.items) covered += pow_rat(Rat(1, (1L << it.k) * bin.i), d);
            CHECK(covered == 1);
            for (size_t j = 1; j < bin.free.size(); ++j) CHECK(bin.free[j].size() < (1u << d));
        }
        for (size_t b = 0; b < std::min<size_t>(as.bin_count(), 40); ++b) CHECK_FALSE(verify(as.layout(b)).has_value());
    }
}

TEST_CASE("adversarial sizes just above 1/(i+1) still meet the bound") {
    AssignSmall as(2, 111);
    for (int i = 111; i < 222; i += 10)
        for (int k = 0; k < 3; ++k) {
            Rat s = Rat(1, (i + 1) * (1 << k)) + Rat(1, 1000000000L);
            for (long n = 0; n < 2 * ipow(i << k, 2) + 5; ++n) as.place(s);
        }
    for (size_t b = 0; b < as.bin_count(); ++b)
        if (as.bin(b).closed) CHECK_NOTHROW(as.closed_volume_check(b));
}

TEST_CASE("dust accounting") {
    AssignSmall as(2, 11);
    as.place(Rat(1, 23));
    long opened = as.add_dust(Rat(1, 23), 484 * 3);
    CHECK(opened == 3);
    CHECK(as.bin(0).itemCount == 484);
    CHECK(as.bin(3).itemCount == 1);
    CHECK(as.bin_count() == 4);
}

TEST_CASE("dust fast path matches item-by-item placement") {
    auto state = [](const AssignSmall& as) {
        std::ostringstream o;
        for (const auto& b : as.bins()) {
            o << b.i << ' ' << b.closed << ' ' << b.itemCount << ' ' << b.volume << ' ' << b.nextCell << ' ' << b.splits << ':';
            for (auto f : b.free) {
                std::sort(f.begin(), f.end());
                for (const auto& c : f) o << c[0] << ',' << c[1] << ',' << c[2] << ' ';
                o << '|';
            }
            o << '\n';
        }
        return o.str();
    };
    std::mt19937_64 rng(3);
    for (int d : {2, 3})
        for (int trial = 0; trial < 40; ++trial) {
            AssignSmall fast(d, 11, false), slow(d, 11, false);
            for (int step = 0; step < 4; ++step) {
                const int k = static_cast<int>(rng() % 3);
                const Rat s = Rat(1, 12 * (1 << k)) + Rat(1, 1000000);
                const long n = 1 + static_cast<long>(rng() % (d == 2 ? 500 : 4000));
                if (rng() % 2 == 0) {
                    fast.place(s);
                    slow.place(s);
                }
                long a = fast.add_dust(s, n);
                long b = slow.place_many(s, n);
                CHECK(a == b);
            }
            REQUIRE(state(fast) == state(slow));
        }
}
