#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ehpack/params.hpp"
#include "ehpack/weights.hpp"

namespace ehpack {

struct IpRow {
    std::string name;
    std::vector<Rat> coeff;  // one per variable
    Rat rhs;
};

// maximize F + sum_i objective[i] * x_i over nonnegative integers, subject to rows (all coefficients >= 0).
// Variable i stands for type types[i].
struct IpInstance {
    int d = 2;
    int caseId = 1;
    std::vector<int> types;
    std::vector<Rat> weight;     // w_i
    std::vector<Rat> objective;  // w_i - F t_{i+1}^d
    Rat F;
    std::vector<IpRow> rows;

    size_t vars() const { return types.size(); }
    Rat value(const std::vector<long>& x) const;
    bool feasible(const std::vector<long>& x) const;
};

struct InstanceOptions {
    int maxType = 0;        // 0: all N types
    int gridRows = 220;     // u = 1..gridRows
    bool extraRows = true;  // the two d=2 cuts; ignored for d != 2
};

IpInstance build_instance(int c, const ParameterSet& p, const InstanceOptions& opt = {});
// The two d=2 cut rows (coefficients over types 1..38) for an instance over the given types.
std::vector<IpRow> extra_cut_rows(const std::vector<int>& types);

struct SolveOptions {
    double tol = 1e-7;
    long nodeBudget = 20'000'000;
    double timeBudget = 0;  // seconds, 0 = unlimited
    double margin = 1e-9;   // added to every floating relaxation bound
};

struct BoundResult {
    int caseId = 0;
    double upperBound = 0;   // sound: never below the integer optimum
    Rat incumbentValue;      // exact objective of the incumbent
    std::vector<long> incumbent;
    double gap = 0;
    long nodes = 0;
    double seconds = 0;
    bool budgetExhausted = false;
    int presolvedVars = 0;
    int presolvedRows = 0;
};

BoundResult solve(const IpInstance& inst, const SolveOptions& opt = {});

// Exhaustive enumeration; returns nothing when the box has more than maxPoints candidate nodes.
std::optional<std::pair<Rat, std::vector<long>>> solve_brute(const IpInstance& inst, long maxPoints = 50'000'000);

// Random feasible points: repeatedly adds one unit of a random type while every row stays satisfied.
// Half of the draws come from the first `largeBias` variables so that the binding rows are exercised.
class FeasibleSampler {
public:
    explicit FeasibleSampler(const IpInstance& inst, size_t largeBias = 45);
    std::vector<long> draw(std::mt19937_64& rng, int attempts) const;

private:
    size_t n_ = 0, bias_ = 1;
    std::vector<std::vector<long>> intCoeff_;  // per integer row
    std::vector<long> intRhs_;
    std::vector<std::vector<Rat>> ratCoeff_;
    std::vector<Rat> ratRhs_;
};

struct OverallBound {
    std::vector<BoundResult> cases;  // index 0 unused
    double bound = 0;
    int argmax = 0;
    bool budgetExhausted = false;
};

OverallBound overall_bound(const ParameterSet& p, const SolveOptions& opt = {}, const std::vector<int>& cases = {});

struct CutReport {
    bool ok = true;
    long profilesChecked = 0;
    long excludedViolations = 0;  // violations inside the profiles the geometric argument rules out
    long randomChecked = 0;
    std::vector<long> counterexample;  // G16, G28, H37, H38 of the first unexplained violation
    std::string detail;
};

// Checks that rows u = 1..4 imply both d=2 cuts outside the geometrically excluded profiles.
CutReport validate_extra_cuts(const ParameterSet& p, long randomSamples = 100000, unsigned seed = 1);

}  // namespace ehpack
