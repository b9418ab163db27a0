#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ehpack/ip_bound.hpp"

using namespace ehpack;

TEST_CASE("instance structure") {
    ParameterSet p = builtin_paper_params(2);
    IpInstance inst = build_instance(1, p);
    CHECK(inst.F == frac(12544, 12320));
    CHECK(inst.vars() == 151);
    CHECK(inst.rows.size() == 1 + 220 + 2);
    CHECK(inst.rows[0].rhs == 1);
    CHECK(inst.rows[0].coeff[40] == pow_rat(p.t(42), 2));
    const IpRow& u1 = inst.rows[1];
    CHECK(u1.rhs == 1);
    for (int i = 1; i <= 151; ++i) CHECK(u1.coeff[i - 1] == (i <= 17 ? 1 : 0));
    const IpRow& u5 = inst.rows[5];
    CHECK(u5.rhs == 25);
    for (int i = 1; i <= 151; ++i) {
        Int f = floor_int(Rat(p.t(i + 1) * 6));
        CHECK(u5.coeff[i - 1] == Rat(f * f));
    }
    CHECK(inst.rows[221].name == "cut-57");
    CHECK(inst.rows[221].coeff[0] == 21);
    CHECK(inst.rows[221].coeff[20] == 11);
    CHECK(inst.rows[221].coeff[37] == 1);
    CHECK(inst.rows[221].coeff[38] == 0);
    CHECK(inst.rows[222].coeff[36] == 10);
    CHECK(inst.rows[222].coeff[37] == 1);
    CHECK(inst.rows[222].rhs == 190);
    IpInstance cube = build_instance(9, builtin_paper_params(3));
    CHECK(cube.rows.size() == 221);
    CHECK(cube.F == frac(112L * 112 * 112, 111L * 111 * 111 - 1));
    CHECK(cube.rows[2].coeff[0] == 8);
    std::vector<long> zero(inst.vars(), 0);
    CHECK(inst.feasible(zero));
    CHECK(inst.value(zero) == inst.F);
}

TEST_CASE("brute-force oracle on truncated programs") {
    for (int d : {2, 3}) {
        ParameterSet p = builtin_paper_params(d);
        for (int c : {1, 2, 5, 9, 12, 17}) {
            InstanceOptions io;
            io.maxType = 10;
            IpInstance inst = build_instance(c, p, io);
            auto brute = solve_brute(inst);
            REQUIRE(brute.has_value());
            BoundResult r = solve(inst);
            CHECK(r.incumbentValue == brute->first);
            CHECK(r.upperBound >= to_double(brute->first) - 1e-12);
            CHECK(inst.feasible(r.incumbent));
            CHECK_FALSE(r.budgetExhausted);
        }
    }
}

TEST_CASE("brute-force oracle on random type subsets") {
    std::mt19937_64 rng(3);
    ParameterSet p = builtin_paper_params(2);
    for (int trial = 0; trial < 12; ++trial) {
        IpInstance full = build_instance(1 + static_cast<int>(rng() % 17), p);
        // keep a few types, at least one mid-sized, and reduce the rows to a small grid
        IpInstance inst;
        inst.d = full.d;
        inst.caseId = full.caseId;
        inst.F = full.F;
        std::vector<size_t> pick;
        for (int k = 0; k < 4; ++k) pick.push_back(17 + rng() % 24);
        std::sort(pick.begin(), pick.end());
        pick.erase(std::unique(pick.begin(), pick.end()), pick.end());
        for (size_t j : pick) {
            inst.types.push_back(full.types[j]);
            inst.weight.push_back(full.weight[j]);
            inst.objective.push_back(full.objective[j]);
        }
        for (size_t r = 0; r < 30; ++r) {
            IpRow row{full.rows[r].name, {}, full.rows[r].rhs};
            for (size_t j : pick) row.coeff.push_back(full.rows[r].coeff[j]);
            inst.rows.push_back(row);
        }
        auto brute = solve_brute(inst);
        REQUIRE(brute.has_value());
        BoundResult r = solve(inst);
        CHECK(r.incumbentValue == brute->first);
        CHECK(r.upperBound >= to_double(brute->first));
    }
}

TEST_CASE("full programs: solved and sound against random feasible vectors") {
    std::mt19937_64 rng(17);
    for (int d : {2, 3}) {
        ParameterSet p = builtin_paper_params(d);
        std::vector<IpInstance> insts;
        std::vector<BoundResult> res;
        for (int c = 1; c <= kCases; ++c) {
            insts.push_back(build_instance(c, p));
            res.push_back(solve(insts.back()));
            const BoundResult& r = res.back();
            CHECK_FALSE(r.budgetExhausted);
            CHECK(insts.back().feasible(r.incumbent));
            CHECK(r.gap <= 1e-7);
            CHECK(r.upperBound >= to_double(r.incumbentValue));
        }
        // the rows do not depend on the case, so every sample is checked against all 17 programs
        FeasibleSampler sampler(insts[0]);
        for (int k = 0; k < 3000; ++k) {
            auto x = sampler.draw(rng, 120);
            REQUIRE(insts[0].feasible(x));
            for (int c = 0; c < kCases; ++c) CHECK(to_double(insts[c].value(x)) <= res[c].upperBound);
        }
    }
}

TEST_CASE("extra rows never raise the optimum") {
    ParameterSet p = builtin_paper_params(2);
    for (int c : {1, 9, 17}) {
        InstanceOptions plain;
        plain.extraRows = false;
        BoundResult with = solve(build_instance(c, p));
        BoundResult without = solve(build_instance(c, p, plain));
        CHECK(with.incumbentValue <= Rat(without.upperBound + 1e-12));
        CHECK(with.upperBound <= without.upperBound + 1e-7);
    }
}

TEST_CASE("cut validity report") {
    CutReport rep = validate_extra_cuts(builtin_paper_params(2), 20000, 7);
    CHECK(rep.ok);
    CHECK(rep.profilesChecked > 0);
    CHECK(rep.randomChecked == 20000);
    CHECK_THROWS(validate_extra_cuts(builtin_paper_params(3), 10));
}

TEST_CASE("budget exhaustion is flagged and stays sound") {
    ParameterSet p = builtin_paper_params(2);
    IpInstance inst = build_instance(1, p);
    SolveOptions o;
    o.nodeBudget = 3;
    BoundResult r = solve(inst, o);
    CHECK(r.budgetExhausted);
    CHECK(r.upperBound >= 2.088447879968511 - 1e-9);
    CHECK(inst.feasible(r.incumbent));
}
