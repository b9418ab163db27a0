#pragma once

#include <vector>

#include "ehpack/eh_core.hpp"
#include "ehpack/params.hpp"

namespace ehpack {

constexpr int kCases = 17;

struct WeightVector {
    int caseId = 1;
    std::vector<Rat> perType;  // 1-based
    Rat smallFactor;           // (M+1)^d / (M^d - 1)
    Rat w;                     // cases 2..16 only
    int q = 1;
    int e = 0;
};

// e paired with q in cases 2..16: the largest value allowed by the q/e lemma.
int case_e(int q);

// Throws std::invalid_argument for c outside 1..17 or a missing w value.
WeightVector case_vector(int c, const ParameterSet& p);
Rat weight_of(const Rat& size, const WeightVector& v, const ParameterSet& p);
Rat small_factor(const ParameterSet& p);

struct DominationReport {
    std::vector<Rat> totals;  // index 1..17
    int best = 1;             // case with the largest total
    int realized = 1;         // case selected by the final q
    long totalBins = 0;
    long slackAllowed = 0;    // 3N + M
    bool ok = true;
};

// Checks bins <= max_c total_c + 3N + M using the packer's per-type counts and small volume.
DominationReport check_domination(const Packer& pk);

}  // namespace ehpack
