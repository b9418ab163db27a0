#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ehpack/weights.hpp"

using namespace ehpack;

TEST_CASE("case e pairing") {
    CHECK(case_e(2) == 35);
    CHECK(case_e(9) == 28);
    CHECK(case_e(10) == 25);
    CHECK(case_e(16) == 19);
    ParameterSet p = builtin_paper_params(2);
    // t_e = 1 - t_{q+1} except q = 9, where t_28 = 0.33335 sits just below 1 - 0.666
    for (int q = 2; q <= 16; ++q) {
        if (q == 9)
            CHECK(p.t(case_e(q)) < 1 - p.t(q + 1));
        else
            CHECK(p.t(case_e(q)) == 1 - p.t(q + 1));
    }
}

TEST_CASE("case 16 examples, d=2") {
    ParameterSet p = builtin_paper_params(2);
    WeightVector v = case_vector(16, p);
    CHECK(v.q == 16);
    CHECK(v.e == 19);
    CHECK(v.perType[1] == 1);
    CHECK(v.perType[17] == v.w);
    CHECK(to_double(v.w) == doctest::Approx(0.872756492818088).epsilon(1e-15));
    CHECK(p.alpha(20) == parse_rat("0.17175402209391144"));
    CHECK(p.theta(20) == 3);
    CHECK(p.rb.beta[20] == 2);
    CHECK(v.perType[20] == (1 - v.w) * p.alpha(20) / 3 + (1 - p.alpha(20)) / 4);
}

TEST_CASE("case 1 and case 17 branches") {
    for (int d : {2, 3}) {
        ParameterSet p = builtin_paper_params(d);
        WeightVector a = case_vector(1, p), z = case_vector(17, p);
        for (int i = 2; i <= 17; ++i) CHECK(a.perType[i] == 0);
        for (int i = 22; i <= 28; ++i) CHECK(a.perType[i] == p.alpha(i) / p.theta(i));
        CHECK(a.perType[1] == 1);
        CHECK(z.q == 17);
        for (int i = 1; i <= p.N(); ++i) CHECK(z.perType[i] == (1 - p.alpha(i)) / p.blue_capacity(i));
    }
    CHECK_THROWS_AS(case_vector(0, builtin_paper_params(2)), std::invalid_argument);
    CHECK_THROWS_AS(case_vector(18, builtin_paper_params(2)), std::invalid_argument);
}

TEST_CASE("vector invariants over all cases") {
    for (int d : {2, 3}) {
        ParameterSet p = builtin_paper_params(d);
        WeightVector z = case_vector(17, p);
        for (int c = 2; c <= 16; ++c) {
            WeightVector v = case_vector(c, p);
            CHECK(v.w >= 0);
            CHECK(v.w <= 1);
            for (int i = 1; i <= p.N(); ++i) {
                // types q+1..17 carry w alone, which is below their blue share 1
                if (i <= c || i >= 18) CHECK(v.perType[i] >= z.perType[i]);
                if (i >= 18 && p.alpha(i) == 0) CHECK(v.perType[i] == z.perType[i]);
                if (i > c && i <= 17) CHECK(v.perType[i] == v.w * z.perType[i]);
            }
        }
    }
}

TEST_CASE("weight of an item") {
    ParameterSet p = builtin_paper_params(2);
    WeightVector v = case_vector(9, p);
    CHECK(v.smallFactor == frac(12544, 12320));
    Rat s = frac(1, 200);
    CHECK(weight_of(s, v, p) == frac(12544, 12320) * s * s);
    CHECK(weight_of(parse_rat("0.9"), v, p) == 1);
    CHECK(weight_of(p.t(40), v, p) == v.perType[40]);
    CHECK_THROWS(weight_of(Rat(0), v, p));
    ParameterSet prior = builtin_prior_params();
    WeightVector pv = case_vector(17, prior);
    CHECK(pv.smallFactor == frac(144, 120));
    CHECK(weight_of(frac(1, 20), pv, prior) == frac(6, 5) * frac(1, 400));
    WeightVector z = case_vector(17, p);
    CHECK(weight_of(parse_rat("0.9"), z, p) == 1);
}

TEST_CASE("domination on packed streams") {
    {
        Packer pk(builtin_paper_params(2));
        auto r = check_domination(pk);
        CHECK(r.ok);
        CHECK(r.totalBins == 0);
        CHECK(r.realized == 1);
    }
    std::mt19937_64 rng(5);
    for (int d : {2, 3}) {
        ParameterSet p = builtin_paper_params(d);
        for (int run = 0; run < 6; ++run) {
            Packer pk(p);
            std::uniform_int_distribution<long> num(1, 1000000);
            // vary the mix so that different final cases are realized
            const int lowCut = 1 + run * 2;
            for (int n = 0; n < 10000; ++n) {
                Rat s(num(rng), 1000000);
                if (static_cast<int>(rng() % 16) < lowCut) s /= 40;
                pk.pack_item(s);
            }
            auto r = check_domination(pk);
            CHECK(r.ok);
            CHECK(r.realized >= 1);
            CHECK(r.realized <= 17);
            CHECK(r.totals[r.best] >= r.totals[r.realized]);
        }
    }
}
