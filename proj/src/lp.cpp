#include "lp.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace ehpack {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-9;
constexpr double kPrimalTol = 1e-9;
}  // namespace

DualSimplex::DualSimplex(int m, int n, std::vector<double> A, std::vector<double> b, std::vector<double> c)
    : m_(m), n_(n), w_(n + m), A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {
    lo_.assign(n_, 0.0);
    hi_.assign(n_, 0.0);
    reset_to_slack_basis();
}

double DualSimplex::upper(int j) const { return j < n_ ? hi_[j] : kInf; }

void DualSimplex::reset_to_slack_basis() {
    head_.resize(m_);
    pos_.assign(w_, -1);
    atUp_.assign(w_, 0);
    for (int r = 0; r < m_; ++r) {
        head_[r] = n_ + r;
        pos_[n_ + r] = r;
    }
    refactor();
}

void DualSimplex::refactor() {
    const int W = w_ + 1;
    T_.assign(static_cast<size_t>(m_) * W, 0.0);
    for (int r = 0; r < m_; ++r) {
        double* row = &T_[static_cast<size_t>(r) * W];
        for (int j = 0; j < n_; ++j) row[j] = A_[static_cast<size_t>(r) * n_ + j];
        row[n_ + r] = 1.0;
        row[w_] = b_[r];
    }
    // Gauss-Jordan on the basic columns with partial pivoting; rows get reassigned.
    std::vector<int> cols = head_;
    std::vector<char> used(m_, 0);
    std::vector<int> newHead(m_, -1);
    bool singular = false;
    for (int col : cols) {
        int best = -1;
        double bv = kPivotTol;
        for (int r = 0; r < m_; ++r)
            if (!used[r] && std::fabs(T_[static_cast<size_t>(r) * W + col]) > bv) {
                bv = std::fabs(T_[static_cast<size_t>(r) * W + col]);
                best = r;
            }
        if (best < 0) {
            singular = true;
            break;
        }
        used[best] = 1;
        newHead[best] = col;
        double* pr = &T_[static_cast<size_t>(best) * W];
        const double inv = 1.0 / pr[col];
        for (int j = 0; j < W; ++j) pr[j] *= inv;
        pr[col] = 1.0;
        for (int r = 0; r < m_; ++r) {
            if (r == best) continue;
            double* rr = &T_[static_cast<size_t>(r) * W];
            const double f = rr[col];
            if (f == 0.0) continue;
            for (int j = 0; j < W; ++j) rr[j] -= f * pr[j];
            rr[col] = 0.0;
        }
    }
    if (singular) {
        for (int r = 0; r < m_; ++r) head_[r] = n_ + r;
        pos_.assign(w_, -1);
        for (int r = 0; r < m_; ++r) pos_[n_ + r] = r;
        refactor();
        return;
    }
    head_ = newHead;
    pos_.assign(w_, -1);
    for (int r = 0; r < m_; ++r) pos_[head_[r]] = r;
    d_.assign(w_, 0.0);
    for (int j = 0; j < w_; ++j) {
        double v = j < n_ ? c_[j] : 0.0;
        for (int r = 0; r < m_; ++r) {
            int h = head_[r];
            if (h < n_ && c_[h] != 0.0) v -= c_[h] * T_[static_cast<size_t>(r) * W + j];
        }
        d_[j] = pos_[j] >= 0 ? 0.0 : v;
    }
    for (int j = 0; j < w_; ++j)
        if (pos_[j] < 0) place_nonbasic(j);
    sinceRefactor_ = 0;
    recompute_primal();
}

void DualSimplex::place_nonbasic(int j) {
    if (j >= n_) {
        // Slack: only a lower bound. A tiny positive reduced cost is rounding noise.
        atUp_[j] = 0;
        if (d_[j] > 0) d_[j] = 0;
        return;
    }
    if (d_[j] > 0)
        atUp_[j] = 1;
    else if (d_[j] < 0)
        atUp_[j] = 0;
}

// Put every free-to-move nonbasic column at the bound its reduced cost prefers. Columns that were
// fixed while pivoting may have drifted, so this runs after bound changes and before declaring optimality.
bool DualSimplex::repair_statuses() {
    bool changed = false;
    for (int j = 0; j < n_; ++j) {
        if (pos_[j] >= 0) continue;
        const char want = d_[j] > 1e-11 ? 1 : d_[j] < -1e-11 ? 0 : atUp_[j];
        if (want != atUp_[j]) {
            atUp_[j] = want;
            changed = true;
        }
    }
    for (int j = n_; j < w_; ++j)
        if (pos_[j] < 0 && d_[j] > 0) d_[j] = 0;
    return changed;
}

void DualSimplex::set_bounds(const std::vector<double>& lo, const std::vector<double>& hi) {
    lo_ = lo;
    hi_ = hi;
    repair_statuses();
    recompute_primal();
}

void DualSimplex::set_bound(int j, double lo, double hi) {
    lo_[j] = lo;
    hi_[j] = hi;
    repair_statuses();
    recompute_primal();
}

void DualSimplex::recompute_primal() {
    const int W = w_ + 1;
    xB_.assign(m_, 0.0);
    std::vector<double> val(w_, 0.0);
    for (int j = 0; j < w_; ++j)
        if (pos_[j] < 0) val[j] = atUp_[j] ? upper(j) : lower(j);
    for (int r = 0; r < m_; ++r) {
        const double* row = &T_[static_cast<size_t>(r) * W];
        double v = row[w_];
        for (int j = 0; j < w_; ++j)
            if (pos_[j] < 0 && val[j] != 0.0) v -= row[j] * val[j];
        xB_[r] = v;
    }
}

void DualSimplex::pivot(int r, int q) {
    const int W = w_ + 1;
    double* pr = &T_[static_cast<size_t>(r) * W];
    const double inv = 1.0 / pr[q];
    for (int j = 0; j < W; ++j) pr[j] *= inv;
    pr[q] = 1.0;
    for (int i = 0; i < m_; ++i) {
        if (i == r) continue;
        double* ri = &T_[static_cast<size_t>(i) * W];
        const double f = ri[q];
        if (f == 0.0) continue;
        for (int j = 0; j < W; ++j) ri[j] -= f * pr[j];
        ri[q] = 0.0;
    }
    const double dq = d_[q];
    if (dq != 0.0)
        for (int j = 0; j < w_; ++j) d_[j] -= dq * pr[j];
    d_[q] = 0.0;
    const int leave = head_[r];
    pos_[leave] = -1;
    pos_[q] = r;
    head_[r] = q;
}

DualSimplex::Status DualSimplex::solve(long maxIter) {
    const int W = w_ + 1;
    for (long it = 0; it < maxIter; ++it) {
        if (sinceRefactor_ >= 200) refactor();
        const bool bland = it > 50L * (m_ + 1);
        int r = -1;
        double worst = 0;
        for (int i = 0; i < m_; ++i) {
            const int h = head_[i];
            const double lo = lower(h), hi = upper(h);
            double inf = 0;
            if (xB_[i] < lo - kPrimalTol * (1 + std::fabs(lo)))
                inf = lo - xB_[i];
            else if (xB_[i] > hi + kPrimalTol * (1 + std::fabs(hi)))
                inf = xB_[i] - hi;
            if (inf > 0 && (r < 0 || (bland ? h < head_[r] : inf > worst))) {
                r = i;
                worst = inf;
            }
        }
        if (r < 0) {
            if (!repair_statuses()) return Optimal;
            recompute_primal();
            continue;
        }
        const int h = head_[r];
        const bool toLower = xB_[r] < lower(h);
        const double* pr = &T_[static_cast<size_t>(r) * W];
        int q = -1;
        double bestRatio = kInf, bestAbs = 0;
        for (int j = 0; j < w_; ++j) {
            if (pos_[j] >= 0) continue;
            const double a = pr[j];
            if (std::fabs(a) < kPivotTol) continue;
            if (j < n_ && lo_[j] == hi_[j]) continue;
            const bool up = atUp_[j];
            const bool ok = toLower ? ((!up && a < 0) || (up && a > 0)) : ((!up && a > 0) || (up && a < 0));
            if (!ok) continue;
            const double ratio = std::fabs(d_[j]) / std::fabs(a);
            if (ratio < bestRatio - 1e-12 || (ratio <= bestRatio + 1e-12 && !bland && std::fabs(a) > bestAbs)) {
                bestRatio = ratio;
                bestAbs = std::fabs(a);
                q = j;
            }
        }
        if (q < 0) return Infeasible;
        const double target = toLower ? lower(h) : upper(h);
        const double theta = (xB_[r] - target) / pr[q];
        const double enterVal = (atUp_[q] ? upper(q) : lower(q)) + theta;
        for (int i = 0; i < m_; ++i)
            if (i != r) xB_[i] -= T_[static_cast<size_t>(i) * W + q] * theta;
        pivot(r, q);
        xB_[r] = enterVal;
        atUp_[h] = toLower ? 0 : 1;
        // Keep the leaving column's reduced cost sign consistent with its bound.
        if (toLower && d_[h] > 0) d_[h] = 0;
        if (!toLower && d_[h] < 0) d_[h] = 0;
        ++iters_;
        ++sinceRefactor_;
    }
    return IterLimit;
}

std::vector<double> DualSimplex::x() const {
    std::vector<double> out(n_);
    for (int j = 0; j < n_; ++j) out[j] = pos_[j] >= 0 ? xB_[pos_[j]] : (atUp_[j] ? hi_[j] : lo_[j]);
    return out;
}

std::vector<double> DualSimplex::duals() const {
    std::vector<double> y(m_);
    for (int r = 0; r < m_; ++r) {
        const int j = n_ + r;
        y[r] = pos_[j] >= 0 ? 0.0 : std::max(0.0, -d_[j]);
    }
    return y;
}

}  // namespace ehpack
