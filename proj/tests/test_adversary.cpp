#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ehpack/adversary.hpp"
#include "ehpack/ip_bound.hpp"

using namespace ehpack;

TEST_CASE("input invariants") {
    AdversaryInput p1 = build_input(Counter::P1);
    CHECK(p1.ratioNM == frac(724609, 164696));
    CHECK(p1.dustA == frac(102944997, 4147360000));
    CHECK(p1.dustB == frac(55324197, 4147360000));
    CHECK(p1.lattice == 164696);
    CHECK(p1.eps == frac(1, 1000000));
    CHECK(p1.batches[6].count.a == 24);
    CHECK(p1.batches[6].count.b == 25);
    AdversaryInput p2 = build_input(Counter::P2);
    CHECK(p2.ratioNM == frac(724609, 119196));
    CHECK(p2.dustA == frac(25026427, 601200600));
    CHECK(p2.dustB == frac(903311, 27040000));
    CHECK(p2.lattice == 119196);
    CHECK(p2.batches[5].count.b == 1);
    CHECK(p2.batches[5].priorType == 2);
    // the full lattice is a multiple of the N lattice
    CHECK(p1.fullLattice % p1.lattice == 0);
    CHECK(p2.fullLattice % p2.lattice == 0);
}

TEST_CASE("sizes land in their prior types") {
    Packer pk(builtin_prior_params(), {false});
    const Rat eps = frac(1, 1000000);
    CHECK(pk.classify(parse_rat("0.3525") + eps) == 6);
    CHECK(pk.classify(parse_rat("0.6475") + eps) == 2);
    CHECK(pk.classify(parse_rat("0.6") + eps) == 3);
    CHECK(pk.classify(frac(1, 3) + eps) == 7);
    CHECK(pk.classify(frac(1, 7) + eps) == 12);
    for (Counter c : {Counter::P1, Counter::P2})
        for (const auto& b : build_input(c).batches)
            if (b.role == BatchRole::Large) CHECK(pk.classify(b.base + b.plusEps * eps) == b.priorType);
    // dust and grid classes stay apart
    CHECK(classify_small(frac(1, 23) + eps, 11).i == 11);
    CHECK(classify_small(frac(1, 13) + eps, 11).i == 12);
    CHECK(classify_small(frac(1, 12) + eps, 11).i == 11);
    CHECK(classify_small(frac(1, 22) + eps, 11).i == 21);
    CHECK(classify_small(build_input(Counter::P1).dustSide, 11).i == 15);
}

TEST_CASE("stream instantiation") {
    AdversaryStream s = build_stream(Counter::P1, 1);
    CHECK(s.M == 164696);
    CHECK(s.N == 724609);
    CHECK(s.batches[0].count == 5 * s.M + 4 * s.N);
    CHECK(s.batches[6].count == 24 * s.M + 25 * s.N);
    CHECK(s.batches[6].size == frac(1, 23) + frac(1, 1000000));
    AdversaryStream t = build_stream(Counter::P2, 2);
    CHECK(t.M == 2 * 119196);
    CHECK(t.batches[6].count == 8 * t.M + 8 * t.N);
    CHECK(t.batches[8].count == 10 * t.M);
    CHECK_THROWS_AS(build_stream(Counter::P1, 0), std::invalid_argument);
}

TEST_CASE("analytic costs") {
    CostBreakdown a = analytic_cost(Counter::P1);
    CHECK(std::fabs(to_double(a.total) - 11.4632218067166) < 1e-12);
    CHECK(std::fabs(to_double(a.ratio) - 2.12294632176699) < 1e-13);
    CHECK(a.opt == frac(889305, 164696));
    CostBreakdown b = analytic_cost(Counter::P2);
    CHECK(std::fabs(to_double(b.ratio) - 2.120087899087498) < 1e-13);
    CHECK(b.opt == frac(843805, 119196));
    // the printed expression evaluates to 15.00839600..., not the printed 15.0187...
    CHECK(std::fabs(to_double(b.total) - 15.008396000616852) < 1e-12);
    // red bins of the first three P1 batches add up to exactly M
    Rat red;
    for (const auto& t : a.terms)
        if (t.label.find("red") != std::string::npos && t.batch <= 3) red += t.perM + t.perN * frac(724609, 164696);
    CHECK(red == 1);
}

TEST_CASE("simulation at the smallest lattice point") {
    for (Counter c : {Counter::P1, Counter::P2}) {
        SimulationReport r = simulate(c, 1);
        CostBreakdown a = analytic_cost(c);
        CHECK(std::fabs(r.ratio - to_double(a.ratio)) < 1e-3);
        CHECK(std::fabs(static_cast<double>(r.bins) - r.analyticBins) <= 10);
        for (size_t k = 0; k < r.binsPerBatch.size(); ++k)
            CHECK(std::fabs(static_cast<double>(r.binsPerBatch[k]) - r.analyticPerBatch[k]) <= 4);
        REQUIRE(r.redOpenTypes.size() == 1);
        CHECK(r.redOpenTypes[0] == (c == Counter::P1 ? 6 : 7));
        if (c == Counter::P1) CHECK(r.acceptingAfterBatch4 <= 3);
    }
}

TEST_CASE("prior weight functions") {
    WeightedBin a = w21_bin();
    CHECK(a.smallArea == frac(475093, 7840000));
    CHECK(std::fabs(to_double(prior_weight_eval(a.types, a.smallArea, PriorWeight::W21)) - 2.277619932488147) < 1e-9);
    WeightedBin b = w22_bin();
    CHECK(b.smallArea == parse_rat("0.17223125"));
    CHECK(std::fabs(to_double(prior_weight_eval(b.types, b.smallArea, PriorWeight::W22)) - 2.240699722) < 1e-9);
    CHECK(prior_weight_eval({}, Rat(0), PriorWeight::W21) == 0);
    CHECK(prior_weight_eval({}, Rat(0), PriorWeight::W22) == 0);
    CHECK_THROWS_AS(prior_weight_eval({{5, 1}}, Rat(0), PriorWeight::W21), std::invalid_argument);
}

TEST_CASE("optimal bins are feasible") {
    auto bins = reference_bins();
    REQUIRE(bins.size() == 4);
    for (const auto& b : bins) {
        INFO(b.name);
        CHECK_FALSE(verify(b.layout).has_value());
        std::map<Rat, long> got;
        for (const auto& it : b.layout.items) got[it.side]++;
        CHECK(got == b.wanted);
        // the dust area of the optimal bin is what is left
        Rat area(1);
        for (const auto& it : b.layout.items) area -= it.side * it.side;
        CHECK(area > 0);
    }
}

TEST_CASE("generic lower bound") {
    CHECK(std::fabs(generic_lower_bound(1) - 1.5833333) < 1e-7);
    CHECK(std::fabs(generic_lower_bound(2) - 2.0208333) < 1e-7);
    CHECK(std::fabs(generic_lower_bound(3) - 2.34085648) < 1e-7);
    CHECK(generic_lower_bound_exact(1) == frac(19, 12));
    for (int d = 1; d <= 4; ++d)
        for (Rat beta : {Rat(0), frac(1, 7), frac(1, 2), Rat(1)}) CHECK(generic_combined(d, beta) == generic_lower_bound_exact(d));
    CHECK_THROWS_AS(generic_lower_bound_exact(0), std::invalid_argument);
}

TEST_CASE("generic adversary on the paper sets") {
    for (int d : {2, 3}) {
        ParameterSet p = builtin_paper_params(d);
        GenericInput g = generic_adversary(p, 1000);
        CHECK(p.t(g.third + 1) == frac(1, 3));
        CHECK(g.twoThirds != g.third);
        CHECK(g.beta == p.alpha(g.third));
        CHECK(g.first[0].second == (ipow(2, d) - 1) * 1000);
        GenericRun r = simulate_generic(p, 20000);
        // the algorithm never beats the proof's accounting by more than O(1) bins
        CHECK(r.ratio1 >= r.bound1 - 5.0 / 20000);
        CHECK(r.ratio2 >= r.bound2 - 5.0 / 20000);
        CHECK(r.ratio1 - r.bound1 < 1e-3);
        CHECK(r.ratio2 - r.bound2 < 1e-3);
    }
    // the prior set has 1/3 as the right end of type 8, so the next type up is used
    ParameterSet q = builtin_prior_params();
    GenericInput g = generic_adversary(q, 10);
    CHECK(g.third == 7);
}

TEST_CASE("lower bound below the certified upper bounds") {
    for (int d : {2, 3}) {
        OverallBound ob = overall_bound(builtin_paper_params(d));
        CHECK(generic_lower_bound(d) < ob.bound);
    }
}
