#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehpack/rational.hpp"

namespace ehpack {

// Per-type arrays below are 1-based: index 0 is unused so that entry i is type i.

struct IntervalTable {
    int d = 2;
    int N = 0;
    std::vector<Rat> t;  // t[1] = 1 > t[2] > ... > t[N+1] = 1/M
    int M = 0;

    bool operator==(const IntervalTable&) const = default;
};

struct RedBlueConfig {
    std::vector<Rat> alpha;
    std::vector<Rat> Delta;  // Delta[0] = 0, then Delta[1] < ... < Delta[k]
    std::vector<int> phi;
    std::vector<int> beta;
    std::vector<int> gamma;

    int k() const { return static_cast<int>(Delta.size()) - 1; }
    bool operator==(const RedBlueConfig&) const = default;
};

struct DerivedParams {
    std::vector<Rat> delta;
    std::vector<long> theta;
    std::map<int, Rat> caseW;  // analysis cases 2..16

    bool operator==(const DerivedParams&) const = default;
};

struct ParameterSet {
    IntervalTable intervals;
    RedBlueConfig rb;
    DerivedParams derived;
    std::string label;

    int d() const { return intervals.d; }
    int N() const { return intervals.N; }
    int M() const { return intervals.M; }
    const Rat& t(int i) const { return intervals.t[i]; }
    const Rat& alpha(int i) const { return rb.alpha[i]; }
    int beta(int i) const { return rb.beta[i]; }
    int gamma(int i) const { return rb.gamma[i]; }
    int phi(int i) const { return rb.phi[i]; }
    const Rat& delta(int i) const { return derived.delta[i]; }
    long theta(int i) const { return derived.theta[i]; }
    long blue_capacity(int i) const { return ipow(rb.beta[i], intervals.d); }

    bool operator==(const ParameterSet&) const = default;
};

enum class BetaVariant { AsPrinted, Corrected };

struct Violation {
    int type;  // 0 when the rule is not tied to one type
    std::string rule;
    std::string detail;
};

// The 151-type square (d=2) or cube (d=3) set. Throws std::invalid_argument for other d.
ParameterSet builtin_paper_params(int d, BetaVariant variant = BetaVariant::AsPrinted);
// The 16-type square packing set of the earlier algorithm (small threshold 1/11).
ParameterSet builtin_prior_params();
// The 6-type illustration set with small threshold 1/10.
ParameterSet builtin_example_params();
// "paper2", "paper3", "prior2", "example2"; anything else is read as a file path.
ParameterSet params_by_name(const std::string& name, BetaVariant variant = BetaVariant::AsPrinted);

DerivedParams derive(const IntervalTable& intervals, const RedBlueConfig& rb,
                     const std::map<int, Rat>& caseW = {});

std::vector<Violation> validate(const ParameterSet& p);

std::string params_to_text(const ParameterSet& p);
// Throws ParseError.
ParameterSet params_from_text(const std::string& text);
void save_params(const ParameterSet& p, const std::string& path);
ParameterSet load_params(const std::string& path);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
};

}  // namespace ehpack
