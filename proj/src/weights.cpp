#include "ehpack/weights.hpp"

#include <stdexcept>

namespace ehpack {

int case_e(int q) { return q <= 9 ? 37 - q : 35 - q; }

Rat small_factor(const ParameterSet& p) {
    const long M = p.M();
    return frac(ipow(M + 1, p.d()), ipow(M, p.d()) - 1);
}

WeightVector case_vector(int c, const ParameterSet& p) {
    if (c < 1 || c > kCases) throw std::invalid_argument("case must be in 1..17");
    const int N = p.N();
    WeightVector v;
    v.caseId = c;
    v.smallFactor = small_factor(p);
    v.perType.assign(N + 1, Rat(0));
    // alpha/theta is read as 0 whenever alpha is 0
    auto red = [&](int i) { return p.alpha(i) == 0 ? Rat(0) : Rat(p.alpha(i) / p.theta(i)); };
    auto blue = [&](int i) { return Rat((1 - p.alpha(i)) / p.blue_capacity(i)); };
    if (c == 1) {
        for (int i = 1; i <= N; ++i) {
            if (i >= 2 && i <= 17)
                v.perType[i] = 0;
            else if (i >= 22 && i <= 28)
                v.perType[i] = red(i);
            else
                v.perType[i] = red(i) + blue(i);
        }
        return v;
    }
    if (c == kCases) {
        v.q = 17;
        for (int i = 1; i <= N; ++i) v.perType[i] = blue(i);
        return v;
    }
    auto it = p.derived.caseW.find(c);
    if (it == p.derived.caseW.end()) throw std::invalid_argument("no w value for case " + std::to_string(c));
    v.w = it->second;
    v.q = c;
    v.e = case_e(c);
    for (int i = 1; i <= N; ++i) {
        if (i <= v.q)
            v.perType[i] = 1;
        else if (i <= 17)
            v.perType[i] = v.w;
        else if (i <= v.e)
            v.perType[i] = red(i) + blue(i);
        else
            v.perType[i] = (1 - v.w) * red(i) + blue(i);
    }
    return v;
}

Rat weight_of(const Rat& size, const WeightVector& v, const ParameterSet& p) {
    if (size <= 0 || size > 1) throw std::out_of_range("item size outside (0,1]");
    if (size <= p.t(p.N() + 1)) return v.smallFactor * pow_rat(size, p.d());
    const auto& t = p.intervals.t;
    int lo = 1, hi = p.N();
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (size <= t[mid])
            lo = mid;
        else
            hi = mid - 1;
    }
    return v.perType[lo];
}

DominationReport check_domination(const Packer& pk) {
    const ParameterSet& p = pk.params();
    DominationReport r;
    r.totals.assign(kCases + 1, Rat(0));
    Rat smallVolume;
    for (const auto& b : pk.small().bins()) smallVolume += b.volume;
    const bool hasW = p.derived.caseW.size() == 15;
    for (int c = 1; c <= kCases; ++c) {
        if (c >= 2 && c <= 16 && !hasW) continue;
        WeightVector v = case_vector(c, p);
        Rat total = v.smallFactor * smallVolume;
        for (int i = 1; i <= p.N(); ++i) total += v.perType[i] * Rat(pk.n(i));
        r.totals[c] = total;
        if (total > r.totals[r.best]) r.best = c;
    }
    auto st = pk.stats();
    r.realized = st.q;
    r.totalBins = st.totalBins;
    r.slackAllowed = 3L * p.N() + p.M();
    r.ok = Rat(r.totalBins) <= r.totals[r.best] + r.slackAllowed;
    return r;
}

}  // namespace ehpack
