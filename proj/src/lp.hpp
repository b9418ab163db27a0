#pragma once

#include <vector>

namespace ehpack {

// Dense bounded dual simplex for  max c'x  s.t.  A x <= b,  lo <= x <= hi  (finite boxes).
// Any basis is dual feasible once nonbasic boxed columns sit at the bound matching the sign of
// their reduced cost, so bound changes never require a phase 1: the current basis is reused.
class DualSimplex {
public:
    enum Status { Optimal, Infeasible, IterLimit };

    DualSimplex(int m, int n, std::vector<double> A, std::vector<double> b, std::vector<double> c);

    void set_bounds(const std::vector<double>& lo, const std::vector<double>& hi);
    void set_bound(int j, double lo, double hi);
    Status solve(long maxIter);
    // Recompute the tableau from the current basis (falls back to the slack basis if singular).
    void refactor();
    void reset_to_slack_basis();

    std::vector<double> x() const;
    // Row multipliers y >= 0 implied by the current basis.
    std::vector<double> duals() const;
    long iterations() const { return iters_; }
    int rows() const { return m_; }
    int cols() const { return n_; }

private:
    double lower(int j) const { return j < n_ ? lo_[j] : 0.0; }
    double upper(int j) const;
    void recompute_primal();
    void place_nonbasic(int j);
    bool repair_statuses();
    void pivot(int r, int q);

    int m_, n_, w_;  // w_ = n_ + m_ columns in the tableau
    std::vector<double> A_, b_, c_;
    std::vector<double> lo_, hi_;
    std::vector<double> T_;    // m_ x (w_ + 1); last column is B^{-1} b
    std::vector<double> d_;    // reduced costs, w_
    std::vector<double> xB_;   // basic values, m_
    std::vector<int> head_;    // basic column of each row
    std::vector<int> pos_;     // row of a basic column, -1 if nonbasic
    std::vector<char> atUp_;   // nonbasic column sits at its upper bound
    long iters_ = 0;
    long sinceRefactor_ = 0;
};

}  // namespace ehpack
