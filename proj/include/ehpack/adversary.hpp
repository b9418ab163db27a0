#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "ehpack/eh_core.hpp"
#include "ehpack/geometry.hpp"
#include "ehpack/params.hpp"

namespace ehpack {

enum class Counter { P1, P2 };
const char* counter_name(Counter c);

// a*M + b*N
struct LinearCount {
    long a = 0;
    long b = 0;
    long at(long M, long N) const { return a * M + b * N; }
};

enum class BatchRole { Large, SmallGrid, Dust };

struct BatchSpec {
    LinearCount count;  // unused for dust
    Rat base;           // size without the +eps
    bool plusEps = true;
    BatchRole role = BatchRole::Large;
    int priorType = 0;  // 0 for small items
};

struct AdversaryInput {
    Counter which = Counter::P1;
    std::vector<BatchSpec> batches;
    Rat ratioNM;
    Rat dustA, dustB;  // dust volume per bin of each optimal bin class
    long lattice = 1;      // smallest M with N integral
    long fullLattice = 1;  // smallest M with every analytic bin count integral as well
    Rat eps;
    Rat dustSide;
};

AdversaryInput build_input(Counter which);

// A concrete instance at M = lattice * scale. Sizes are exact; dust is a count of items of dustSide.
struct AdversaryStream {
    long M = 0, N = 0;
    struct Batch {
        Rat size;
        long count;
        BatchRole role;
    };
    std::vector<Batch> batches;
};
// Throws std::invalid_argument for scale < 1.
AdversaryStream build_stream(Counter which, long scale);

struct CostTerm {
    std::string label;
    int batch;   // 1-based batch that opens these bins
    Rat perM;    // coefficient of M
    Rat perN;    // coefficient of N
};
struct CostBreakdown {
    std::vector<CostTerm> terms;
    Rat total;   // per M, at the exact N/M
    Rat opt;     // (M+N)/M
    Rat ratio;
};
CostBreakdown analytic_cost(Counter which);

struct SimulationReport {
    long M = 0, N = 0;
    long bins = 0;
    double analyticBins = 0;  // analytic total at this M
    double ratio = 0;         // bins / (M+N)
    std::vector<long> binsPerBatch;
    std::vector<double> analyticPerBatch;
    long acceptingAfterBatch4 = 0;  // red-open bins left once the type-4 items of P1 are in
    std::vector<int> redOpenTypes;  // red types of red-open bins at the end
    long dustItems = 0;
    double seconds = 0;
};
SimulationReport simulate(Counter which, long scale);

// Prior-work case-2 weight functions.
enum class PriorWeight { W21, W22 };
// Throws std::invalid_argument for a type outside {3,4,6,9,10,12}.
Rat prior_weight_eval(const std::map<int, long>& typeCounts, const Rat& smallArea, PriorWeight w);

// The two bins the prior weight functions are evaluated on.
struct WeightedBin {
    std::map<int, long> types;
    Rat smallArea;
};
WeightedBin w21_bin();
WeightedBin w22_bin();

// Bins of the optimal solutions, with explicit coordinates.
struct ReferenceBin {
    std::string name;  // "P1A", "P1B", "P2A", "P2B"
    BinLayout layout;
    std::map<Rat, long> wanted;  // side -> count demanded by the optimal solution
};
std::vector<ReferenceBin> reference_bins();

// Generic lower bound for Extended Harmonic algorithms.
Rat generic_lower_bound_exact(int d);
double generic_lower_bound(int d);
Rat generic_first(int d, const Rat& beta);
Rat generic_second(int d, const Rat& beta);
// (first + (2^d - 1) * second) / 2^d
Rat generic_combined(int d, const Rat& beta);

struct GenericInput {
    int third = 0;       // type holding 1/3 + eps
    int twoThirds = 0;   // type holding 2/3 - eps
    int half = 0;        // type holding 1/2 + eps
    Rat eps;
    Rat beta;            // alpha of the 1/3 type
    Rat dustSide;
    long N = 0;
    // sizes and counts of the two inputs; the last entry of each is dust
    std::vector<std::pair<Rat, long>> first, second;
};
// Throws std::invalid_argument when no eps keeps the sizes inside their intervals.
GenericInput generic_adversary(const ParameterSet& p, long N);

struct GenericRun {
    long bins1 = 0, bins2 = 0;
    double ratio1 = 0, ratio2 = 0;  // against N, the optimum up to one bin
    double bound1 = 0, bound2 = 0;  // generic_first / generic_second at beta
    double seconds = 0;
};
GenericRun simulate_generic(const ParameterSet& p, long N);

}  // namespace ehpack
