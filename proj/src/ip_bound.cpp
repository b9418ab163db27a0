#include "ehpack/ip_bound.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

#include "lp.hpp"

namespace ehpack {

Rat IpInstance::value(const std::vector<long>& x) const {
    Rat v = F;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i]) v += objective[i] * Rat(x[i]);
    return v;
}

bool IpInstance::feasible(const std::vector<long>& x) const {
    for (long v : x)
        if (v < 0) return false;
    for (const auto& row : rows) {
        bool integral = row.rhs.get_den() == 1;
        for (size_t i = 0; i < x.size() && integral; ++i)
            if (x[i] && row.coeff[i].get_den() != 1) integral = false;
        if (integral) {
            Int lhs;
            for (size_t i = 0; i < x.size(); ++i)
                if (x[i]) mpz_addmul_ui(lhs.get_mpz_t(), row.coeff[i].get_num_mpz_t(), static_cast<unsigned long>(x[i]));
            if (lhs > row.rhs.get_num()) return false;
            continue;
        }
        Rat lhs;
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i] && row.coeff[i] != 0) lhs += row.coeff[i] * Rat(x[i]);
        if (lhs > row.rhs) return false;
    }
    return true;
}

std::vector<IpRow> extra_cut_rows(const std::vector<int>& types) {
    IpRow r5{"cut-57", {}, Rat(57)}, r6{"cut-190", {}, Rat(190)};
    for (int i : types) {
        int a5 = i <= 16 ? 21 : i <= 28 ? 11 : i <= 38 ? 1 : 0;
        int a6 = i <= 16 ? 80 : i <= 28 ? 30 : i <= 37 ? 10 : i == 38 ? 1 : 0;
        r5.coeff.emplace_back(a5);
        r6.coeff.emplace_back(a6);
    }
    return {r5, r6};
}

IpInstance build_instance(int c, const ParameterSet& p, const InstanceOptions& opt) {
    const int d = p.d();
    const int N = opt.maxType > 0 ? std::min(opt.maxType, p.N()) : p.N();
    IpInstance inst;
    inst.d = d;
    inst.caseId = c;
    const long M = p.M();
    inst.F = frac(ipow(M + 1, d), ipow(M, d) - 1);
    WeightVector wv = case_vector(c, p);
    for (int i = 1; i <= N; ++i) {
        inst.types.push_back(i);
        inst.weight.push_back(wv.perType[i]);
        inst.objective.push_back(wv.perType[i] - inst.F * pow_rat(p.t(i + 1), d));
    }
    IpRow vol{"volume", {}, Rat(1)};
    for (int i = 1; i <= N; ++i) vol.coeff.push_back(pow_rat(p.t(i + 1), d));
    inst.rows.push_back(std::move(vol));
    for (int u = 1; u <= opt.gridRows; ++u) {
        IpRow g{"grid-" + std::to_string(u), {}, Rat(ipow(u, d))};
        for (int i = 1; i <= N; ++i) {
            Int f = floor_int(Rat(p.t(i + 1) * (u + 1)));
            g.coeff.emplace_back(Int(f * f * (d == 3 ? f : Int(1))));
        }
        inst.rows.push_back(std::move(g));
    }
    if (d == 2 && opt.extraRows)
        for (auto& r : extra_cut_rows(inst.types)) inst.rows.push_back(std::move(r));
    return inst;
}

namespace {

// Exact data of the presolved problem; integer rows use machine integers.
struct Reduced {
    std::vector<int> var;  // original variable of each reduced column
    std::vector<Rat> c;
    std::vector<long> ub;
    std::vector<std::vector<long>> intA;
    std::vector<long> intB;
    std::vector<std::vector<Rat>> ratA;
    std::vector<Rat> ratB;
    // scaled double copy for the relaxation (rows divided by their rhs)
    std::vector<double> A;
    std::vector<double> cd;
    int m = 0;
};

bool is_integer_row(const IpRow& r, const std::vector<int>& cols) {
    if (r.rhs.get_den() != 1 || !r.rhs.get_num().fits_slong_p()) return false;
    for (int j : cols)
        if (r.coeff[j].get_den() != 1 || !r.coeff[j].get_num().fits_slong_p()) return false;
    return true;
}

Reduced presolve(const IpInstance& inst) {
    const int n = static_cast<int>(inst.vars());
    std::vector<int> alive;
    for (int i = 0; i < n; ++i)
        if (inst.objective[i] > 0) alive.push_back(i);
    // Column dominance: a column with no larger objective and no smaller coefficients is never needed.
    auto dominates = [&](int a, int b) {
        if (inst.objective[a] < inst.objective[b]) return false;
        bool equal = inst.objective[a] == inst.objective[b];
        for (const auto& r : inst.rows) {
            if (r.coeff[a] > r.coeff[b]) return false;
            if (r.coeff[a] != r.coeff[b]) equal = false;
        }
        return !equal || a < b;
    };
    std::vector<int> keep;
    for (int b : alive) {
        bool dom = false;
        for (int a : alive)
            if (a != b && dominates(a, b)) {
                dom = true;
                break;
            }
        if (!dom) keep.push_back(b);
    }
    Reduced R;
    R.var = keep;
    for (int j : keep) {
        R.c.push_back(inst.objective[j]);
        bool bounded = false;
        Int best;
        for (const auto& r : inst.rows)
            if (r.coeff[j] > 0) {
                Int f = floor_int(Rat(r.rhs / r.coeff[j]));
                if (!bounded || f < best) best = f;
                bounded = true;
            }
        if (!bounded) throw std::invalid_argument("unbounded variable in the program");
        R.ub.push_back(best.get_si());
    }
    // Drop rows that cannot bind under the bounds, and rows implied by another row.
    std::vector<int> rowsKept;
    const int nr = static_cast<int>(inst.rows.size());
    std::vector<char> active(nr, 1);
    for (int r = 0; r < nr; ++r) {
        Rat maxLhs;
        for (size_t k = 0; k < keep.size(); ++k) maxLhs += inst.rows[r].coeff[keep[k]] * Rat(R.ub[k]);
        if (maxLhs <= inst.rows[r].rhs) active[r] = 0;
    }
    auto implies = [&](int s, int r) {
        // s implies r when a_r / b_r <= a_s / b_s componentwise (all data nonnegative)
        bool equal = true;
        for (int j : keep) {
            Rat lhs = inst.rows[r].coeff[j] * inst.rows[s].rhs, rhs = inst.rows[s].coeff[j] * inst.rows[r].rhs;
            if (lhs > rhs) return false;
            if (lhs != rhs) equal = false;
        }
        return !equal || s < r;
    };
    for (int r = 0; r < nr; ++r) {
        if (!active[r]) continue;
        bool implied = false;
        for (int s = 0; s < nr && !implied; ++s)
            if (s != r && active[s] && implies(s, r)) implied = true;
        if (!implied) rowsKept.push_back(r);
    }
    R.m = static_cast<int>(rowsKept.size());
    const int nk = static_cast<int>(keep.size());
    R.A.assign(static_cast<size_t>(R.m) * nk, 0.0);
    for (int k = 0; k < R.m; ++k) {
        const IpRow& row = inst.rows[rowsKept[k]];
        for (int j = 0; j < nk; ++j) R.A[static_cast<size_t>(k) * nk + j] = to_double(Rat(row.coeff[keep[j]] / row.rhs));
        if (is_integer_row(row, keep)) {
            std::vector<long> a;
            for (int j : keep) a.push_back(row.coeff[j].get_num().get_si());
            R.intA.push_back(std::move(a));
            R.intB.push_back(row.rhs.get_num().get_si());
        } else {
            std::vector<Rat> a;
            for (int j : keep) a.push_back(row.coeff[j]);
            R.ratA.push_back(std::move(a));
            R.ratB.push_back(row.rhs);
        }
    }
    for (const auto& v : R.c) R.cd.push_back(to_double(v));
    return R;
}

// Exact slack bookkeeping for candidate integer points of the reduced problem.
struct Slack {
    std::vector<long> s;
    std::vector<Rat> q;
};

bool exact_slack(const Reduced& R, const std::vector<long>& x, Slack& out) {
    out.s = R.intB;
    out.q = R.ratB;
    for (size_t r = 0; r < R.intA.size(); ++r) {
        __int128 lhs = 0;
        for (size_t j = 0; j < x.size(); ++j) lhs += static_cast<__int128>(R.intA[r][j]) * x[j];
        if (lhs > R.intB[r]) return false;
        out.s[r] = R.intB[r] - static_cast<long>(lhs);
    }
    for (size_t r = 0; r < R.ratA.size(); ++r) {
        Rat lhs;
        for (size_t j = 0; j < x.size(); ++j)
            if (x[j]) lhs += R.ratA[r][j] * Rat(x[j]);
        if (lhs > R.ratB[r]) return false;
        out.q[r] = R.ratB[r] - lhs;
    }
    return true;
}

// Largest k such that adding k units of column j keeps every row feasible.
long room(const Reduced& R, const Slack& sl, int j, long cap) {
    long k = cap;
    for (size_t r = 0; r < R.intA.size() && k > 0; ++r)
        if (R.intA[r][j] > 0) k = std::min(k, sl.s[r] / R.intA[r][j]);
    for (size_t r = 0; r < R.ratA.size() && k > 0; ++r)
        if (R.ratA[r][j] > 0) {
            Int f = floor_int(Rat(sl.q[r] / R.ratA[r][j]));
            if (f < k) k = f.get_si();
        }
    return std::max(0L, k);
}

void add_units(const Reduced& R, Slack& sl, int j, long k) {
    for (size_t r = 0; r < R.intA.size(); ++r) sl.s[r] -= R.intA[r][j] * k;
    for (size_t r = 0; r < R.ratA.size(); ++r)
        if (R.ratA[r][j] > 0) sl.q[r] -= R.ratA[r][j] * Rat(k);
}

struct Change {
    int var;
    long lo, hi;
};

struct OpenNode {
    double bound;
    long seq;
    std::vector<Change> changes;
    bool operator<(const OpenNode& o) const { return bound != o.bound ? bound < o.bound : seq > o.seq; }
};

}  // namespace

BoundResult solve(const IpInstance& inst, const SolveOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
    BoundResult res;
    res.caseId = inst.caseId;
    const Reduced R = presolve(inst);
    const int n = static_cast<int>(R.var.size());
    res.presolvedVars = n;
    res.presolvedRows = R.m;

    std::vector<long> best(n, 0);
    Rat bestVal = 0;  // objective without F
    double bestD = 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return R.c[a] > R.c[b]; });

    auto consider = [&](std::vector<long> x) {
        Slack sl;
        if (!exact_slack(R, x, sl)) return;
        for (int j : order) {
            long k = room(R, sl, j, R.ub[j] - x[j]);
            if (k > 0) {
                x[j] += k;
                add_units(R, sl, j, k);
            }
        }
        Rat v;
        for (int j = 0; j < n; ++j)
            if (x[j]) v += R.c[j] * Rat(x[j]);
        if (v > bestVal) {
            bestVal = v;
            bestD = to_double(v);
            best = std::move(x);
        }
    };
    consider(std::vector<long>(n, 0));

    double maxClosed = -std::numeric_limits<double>::infinity();
    bool exhausted = false;
    if (n > 0 && R.m > 0) {
        std::vector<double> ones(R.m, 1.0);
        DualSimplex lp(R.m, n, R.A, ones, R.cd);
        std::vector<double> rootLo(n, 0.0), rootHi(n);
        for (int j = 0; j < n; ++j) rootHi[j] = static_cast<double>(R.ub[j]);
        std::vector<double> lo = rootLo, hi = rootHi;

        std::vector<double> red(n);
        double lagValue = 0;  // bound from the multipliers that produced red
        auto lagrange = [&](const std::vector<double>& y) {
            long double v = 0;
            for (int r = 0; r < R.m; ++r) v += y[r];
            for (int j = 0; j < n; ++j) {
                long double rj = R.cd[j];
                for (int r = 0; r < R.m; ++r) rj -= static_cast<long double>(y[r]) * R.A[static_cast<size_t>(r) * n + j];
                red[j] = static_cast<double>(rj);
                v += rj > 0 ? rj * hi[j] : rj * lo[j];
            }
            lagValue = static_cast<double>(v) + opt.margin * (1 + std::fabs(static_cast<double>(v)));
            return lagValue;
        };

        std::priority_queue<OpenNode> pool;
        long seq = 0;
        pool.push({std::numeric_limits<double>::infinity(), seq++, {}});
        while (!pool.empty()) {
            OpenNode node = pool.top();
            pool.pop();
            if (node.bound <= bestD + opt.tol) {
                maxClosed = std::max(maxClosed, node.bound);
                continue;
            }
            lo = rootLo;
            hi = rootHi;
            for (const auto& ch : node.changes) {
                lo[ch.var] = static_cast<double>(ch.lo);
                hi[ch.var] = static_cast<double>(ch.hi);
            }
            lp.set_bounds(lo, hi);
            std::vector<Change> path = node.changes;
            double parentBound = node.bound;
            while (true) {
                if (res.nodes >= opt.nodeBudget || (opt.timeBudget > 0 && elapsed() > opt.timeBudget)) {
                    exhausted = true;
                    maxClosed = std::max(maxClosed, parentBound);
                    break;
                }
                ++res.nodes;
                auto st = lp.solve(20000);
                if (st == DualSimplex::IterLimit) {
                    lp.reset_to_slack_basis();
                    st = lp.solve(200000);
                }
                double bound = std::min(parentBound, lagrange(lp.duals()));
                if (st == DualSimplex::Infeasible) {
                    // The multipliers of an infeasible dual ray still give a valid (usually very low) bound.
                    if (bound > bestD + opt.tol) {
                        // Rare numerical trouble: fall back to a fresh basis once.
                        lp.reset_to_slack_basis();
                        st = lp.solve(200000);
                        bound = std::min(parentBound, lagrange(lp.duals()));
                        if (st == DualSimplex::Infeasible) bound = std::min(bound, -1e300);
                    } else {
                        maxClosed = std::max(maxClosed, bound);
                        break;
                    }
                    if (st == DualSimplex::Infeasible) break;
                }
                if (bound <= bestD + opt.tol) {
                    maxClosed = std::max(maxClosed, bound);
                    break;
                }
                std::vector<double> x = lp.x();
                std::vector<long> fl(n);
                for (int j = 0; j < n; ++j)
                    fl[j] = std::clamp(static_cast<long>(std::floor(x[j] + 1e-9)), static_cast<long>(lo[j]),
                                       static_cast<long>(hi[j]));
                consider(fl);
                if (bound <= bestD + opt.tol) {
                    maxClosed = std::max(maxClosed, bound);
                    break;
                }
                // Reduced-cost fixing: moving x_j away from its bound by more than room/|red_j| cannot beat the incumbent.
                const double roomLeft = lagValue - bestD;
                bool fixed = false;
                for (int j = 0; j < n; ++j) {
                    if (std::fabs(red[j]) < 1e-12 || hi[j] == lo[j]) continue;
                    const double k = std::floor(roomLeft / std::fabs(red[j]) + 1e-9);
                    if (k >= hi[j] - lo[j]) continue;
                    Change ch{j, static_cast<long>(lo[j]), static_cast<long>(hi[j])};
                    if (red[j] > 0) ch.lo = static_cast<long>(hi[j] - k);
                    else ch.hi = static_cast<long>(lo[j] + k);
                    path.push_back(ch);
                    lo[j] = static_cast<double>(ch.lo);
                    hi[j] = static_cast<double>(ch.hi);
                    lp.set_bound(j, lo[j], hi[j]);
                    fixed = true;
                }
                if (fixed) {
                    parentBound = bound;
                    continue;
                }
                int bj = -1;
                double bf = 0;
                for (int j = 0; j < n; ++j) {
                    double f = x[j] - std::floor(x[j]);
                    double dist = std::min(f, 1 - f);
                    if (dist <= 1e-7) continue;
                    double score = dist * std::fabs(R.cd[j]);
                    if (score > bf) {
                        bf = score;
                        bj = j;
                    }
                }
                if (bj < 0) {
                    if (st != DualSimplex::Optimal) {
                        // Not solved to optimality: split the widest domain instead.
                        double wmax = 0;
                        for (int j = 0; j < n; ++j)
                            if (hi[j] - lo[j] > wmax) {
                                wmax = hi[j] - lo[j];
                                bj = j;
                            }
                        if (bj < 0) {
                            maxClosed = std::max(maxClosed, bound);
                            break;
                        }
                        x[bj] = (lo[bj] + hi[bj]) / 2 + 0.25;
                    } else {
                        // Integral relaxation: the node is solved (its point was offered to consider()).
                        maxClosed = std::max(maxClosed, bound);
                        break;
                    }
                }
                const long down = static_cast<long>(std::floor(x[bj]));
                const bool upFirst = x[bj] - down >= 0.5;
                Change dn{bj, static_cast<long>(lo[bj]), down};
                Change up{bj, down + 1, static_cast<long>(hi[bj])};
                Change first = upFirst ? up : dn, second = upFirst ? dn : up;
                std::vector<Change> other = path;
                other.push_back(second);
                pool.push({bound, seq++, std::move(other)});
                path.push_back(first);
                lo[bj] = static_cast<double>(first.lo);
                hi[bj] = static_cast<double>(first.hi);
                lp.set_bound(bj, lo[bj], hi[bj]);
                parentBound = bound;
            }
            if (exhausted) {
                while (!pool.empty()) {
                    maxClosed = std::max(maxClosed, pool.top().bound);
                    pool.pop();
                }
                break;
            }
        }
    }
    const double Fd = to_double(inst.F);
    res.incumbentValue = bestVal + inst.F;
    res.incumbent.assign(inst.vars(), 0);
    for (int j = 0; j < n; ++j) res.incumbent[R.var[j]] = best[j];
    res.upperBound = std::max(bestD, maxClosed) + Fd;
    res.gap = res.upperBound - to_double(res.incumbentValue);
    if (res.gap < 0) res.gap = 0;
    res.budgetExhausted = exhausted;
    res.seconds = elapsed();
    return res;
}

std::optional<std::pair<Rat, std::vector<long>>> solve_brute(const IpInstance& inst, long maxPoints) {
    const int n = static_cast<int>(inst.vars());
    const int m = static_cast<int>(inst.rows.size());
    std::vector<long> x(n, 0), bestX(n, 0);
    std::vector<Rat> slack(m);
    for (int r = 0; r < m; ++r) slack[r] = inst.rows[r].rhs;
    Rat bestV = inst.value(x);
    long visited = 0;
    bool aborted = false;
    // Depth-first over variables; each level tries every count that keeps all rows feasible.
    auto rec = [&](auto&& self, int j) -> void {
        if (aborted) return;
        if (++visited > maxPoints) {
            aborted = true;
            return;
        }
        if (j == n) {
            Rat v = inst.value(x);
            if (v > bestV) {
                bestV = v;
                bestX = x;
            }
            return;
        }
        self(self, j + 1);
        while (true) {
            bool ok = true;
            for (int r = 0; r < m; ++r)
                if (inst.rows[r].coeff[j] > slack[r]) ok = false;
            if (!ok) break;
            for (int r = 0; r < m; ++r) slack[r] -= inst.rows[r].coeff[j];
            ++x[j];
            self(self, j + 1);
            if (aborted) break;
        }
        for (int r = 0; r < m; ++r) slack[r] += inst.rows[r].coeff[j] * Rat(x[j]);
        x[j] = 0;
    };
    rec(rec, 0);
    if (aborted) return std::nullopt;
    return std::pair{bestV, bestX};
}

FeasibleSampler::FeasibleSampler(const IpInstance& inst, size_t largeBias) : n_(inst.vars()) {
    bias_ = std::max<size_t>(1, std::min(n_, largeBias));
    std::vector<int> all(n_);
    std::iota(all.begin(), all.end(), 0);
    for (const auto& row : inst.rows) {
        if (is_integer_row(row, all)) {
            std::vector<long> a;
            for (const auto& v : row.coeff) a.push_back(v.get_num().get_si());
            intCoeff_.push_back(std::move(a));
            intRhs_.push_back(row.rhs.get_num().get_si());
        } else {
            ratCoeff_.push_back(row.coeff);
            ratRhs_.push_back(row.rhs);
        }
    }
}

std::vector<long> FeasibleSampler::draw(std::mt19937_64& rng, int attempts) const {
    std::vector<long> x(n_, 0);
    if (n_ == 0) return x;
    std::vector<long> islack = intRhs_;
    std::vector<Rat> rslack = ratRhs_;
    for (int k = 0; k < attempts; ++k) {
        size_t j = rng() % n_;
        if (rng() % 2) j = rng() % bias_;
        bool ok = true;
        for (size_t a = 0; a < islack.size() && ok; ++a)
            if (intCoeff_[a][j] > islack[a]) ok = false;
        for (size_t a = 0; a < rslack.size() && ok; ++a)
            if (ratCoeff_[a][j] > rslack[a]) ok = false;
        if (!ok) continue;
        for (size_t a = 0; a < islack.size(); ++a) islack[a] -= intCoeff_[a][j];
        for (size_t a = 0; a < rslack.size(); ++a) rslack[a] -= ratCoeff_[a][j];
        ++x[j];
    }
    return x;
}

OverallBound overall_bound(const ParameterSet& p, const SolveOptions& opt, const std::vector<int>& cases) {
    OverallBound out;
    out.cases.resize(kCases + 1);
    std::vector<int> which = cases;
    if (which.empty())
        for (int c = 1; c <= kCases; ++c) which.push_back(c);
    for (int c : which) {
        out.cases[c] = solve(build_instance(c, p), opt);
        if (out.argmax == 0 || out.cases[c].upperBound > out.bound) {
            out.bound = out.cases[c].upperBound;
            out.argmax = c;
        }
        out.budgetExhausted = out.budgetExhausted || out.cases[c].budgetExhausted;
    }
    return out;
}

CutReport validate_extra_cuts(const ParameterSet& p, long randomSamples, unsigned seed) {
    CutReport rep;
    if (p.d() != 2) throw std::invalid_argument("the extra cuts are defined for d=2");
    auto excluded = [](long g16, long g28, long h37, long h38) {
        return g16 == 1 && g28 == 3 && (h37 + h38 >= 4 || h37 >= 3 || (h37 == 2 && h38 >= 1));
    };
    auto cut5 = [](long g16, long g28, long h37, long h38) { return 21 * g16 + 11 * g28 + h37 + h38 <= 57; };
    auto cut6 = [](long g16, long g28, long h37, long h38) { return 80 * g16 + 30 * g28 + 10 * h37 + h38 <= 190; };
    // Aggregated profiles under the u = 1..4 consequences used by the argument.
    for (long g16 = 0; g16 <= 1; ++g16)
        for (long g28 = 0; g28 <= 4; ++g28)
            for (long h37 = 0; h37 <= 16; ++h37)
                for (long h38 = 0; h38 <= 16; ++h38) {
                    if (g16 + g28 > 4 || 4 * g16 + g28 + h37 > 9 || 9 * g16 + g28 + h37 + h38 > 16) continue;
                    ++rep.profilesChecked;
                    if (cut5(g16, g28, h37, h38) && cut6(g16, g28, h37, h38)) continue;
                    if (excluded(g16, g28, h37, h38)) {
                        ++rep.excludedViolations;
                        continue;
                    }
                    if (rep.ok) {
                        rep.ok = false;
                        rep.counterexample = {g16, g28, h37, h38};
                        rep.detail = "aggregated profile violates a cut";
                    }
                }
    // Random integer points over all types satisfying rows u = 1..4 of the real program.
    InstanceOptions io;
    io.gridRows = 4;
    io.extraRows = false;
    IpInstance inst = build_instance(1, p, io);
    const int n = static_cast<int>(inst.vars());
    std::mt19937_64 rng(seed);
    std::vector<int> candidates;
    for (int j = 0; j < n && inst.types[j] <= 40; ++j) candidates.push_back(j);
    for (long s = 0; s < randomSamples; ++s) {
        std::vector<long> x(n, 0);
        std::vector<Rat> slack;
        for (const auto& r : inst.rows) slack.push_back(r.rhs);
        const int tries = 1 + static_cast<int>(rng() % 24);
        for (int k = 0; k < tries; ++k) {
            int j = candidates[rng() % candidates.size()];
            bool ok = true;
            for (size_t r = 0; r < inst.rows.size(); ++r)
                if (inst.rows[r].coeff[j] > slack[r]) ok = false;
            if (!ok) continue;
            for (size_t r = 0; r < inst.rows.size(); ++r) slack[r] -= inst.rows[r].coeff[j];
            ++x[j];
        }
        long g16 = 0, g28 = 0, h37 = 0, h38 = 0;
        for (int j = 0; j < n; ++j) {
            int i = inst.types[j];
            if (i <= 16) g16 += x[j];
            else if (i <= 28) g28 += x[j];
            else if (i <= 37) h37 += x[j];
            else if (i == 38) h38 += x[j];
        }
        ++rep.randomChecked;
        if (cut5(g16, g28, h37, h38) && cut6(g16, g28, h37, h38)) continue;
        if (excluded(g16, g28, h37, h38)) continue;
        if (rep.ok) {
            rep.ok = false;
            rep.counterexample = {g16, g28, h37, h38};
            rep.detail = "sampled point violates a cut";
        }
    }
    return rep;
}

}  // namespace ehpack
