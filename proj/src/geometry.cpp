#include "ehpack/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace ehpack {

const char* color_name(Color c) {
    switch (c) {
        case Color::Blue: return "blue";
        case Color::Red: return "red";
        case Color::Small: return "small";
    }
    return "?";
}

std::string LayoutViolation::describe() const {
    if (kind == Containment) return "item " + std::to_string(first) + " leaves the bin";
    return "items " + std::to_string(first) + " and " + std::to_string(second) + " overlap";
}

std::vector<int> blue_cell(int beta, int d, long slot) {
    if (beta < 1 || slot < 0 || slot >= ipow(beta, d)) throw std::out_of_range("blue slot out of range");
    std::vector<int> c(d);
    for (int a = d - 1; a >= 0; --a) {
        c[a] = static_cast<int>(slot % beta);
        slot /= beta;
    }
    return c;
}

std::vector<int> red_cell(int beta, int gamma, int d, long slot) {
    const long total = ipow(beta, d) - ipow(beta - gamma, d);
    if (gamma < 1 || gamma > beta || slot < 0 || slot >= total) throw std::out_of_range("red slot out of range");
    const int lo = beta - gamma;  // digits >= lo lie in the reserved strip
    std::vector<int> c(d);
    bool inStrip = false;
    for (int a = 0; a < d; ++a) {
        const int rest = d - a - 1;
        for (int v = 0; v < beta; ++v) {
            bool s = inStrip || v >= lo;
            long count = s ? ipow(beta, rest) : ipow(beta, rest) - ipow(lo, rest);
            if (slot < count) {
                c[a] = v;
                inStrip = s;
                break;
            }
            slot -= count;
        }
    }
    return c;
}

std::vector<Rat> blue_slot(int i, long slot, const ParameterSet& p) {
    auto c = blue_cell(p.beta(i), p.d(), slot);
    std::vector<Rat> a(p.d());
    for (int k = 0; k < p.d(); ++k) a[k] = c[k] * p.t(i);
    return a;
}

std::vector<Rat> red_slot(int j, long slot, const ParameterSet& p) {
    auto c = red_cell(p.beta(j), p.gamma(j), p.d(), slot);
    std::vector<Rat> a(p.d());
    for (int k = 0; k < p.d(); ++k) a[k] = 1 - (p.beta(j) - c[k]) * p.t(j);
    return a;
}

std::optional<LayoutViolation> verify(const BinLayout& layout) {
    const auto& items = layout.items;
    const int d = layout.d;
    for (size_t k = 0; k < items.size(); ++k) {
        const auto& it = items[k];
        if (static_cast<int>(it.anchor.size()) != d || it.side <= 0)
            return LayoutViolation{LayoutViolation::Containment, k, k};
        for (int a = 0; a < d; ++a)
            if (it.anchor[a] < 0 || it.anchor[a] + it.side > 1)
                return LayoutViolation{LayoutViolation::Containment, k, k};
    }
    // Sweep along axis 0. Doubles only prune candidates (with a margin); the decision is exact.
    const double eps = 1e-9;
    struct Box {
        std::vector<double> lo;
        double side;
    };
    std::vector<Box> box(items.size());
    double maxSide = 0;
    for (size_t k = 0; k < items.size(); ++k) {
        box[k].side = to_double(items[k].side);
        for (const auto& x : items[k].anchor) box[k].lo.push_back(to_double(x));
        maxSide = std::max(maxSide, box[k].side);
    }
    std::vector<size_t> order(items.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return box[x].lo[0] < box[y].lo[0]; });

    auto overlap = [&](size_t x, size_t y) {
        for (int a = 0; a < d; ++a) {
            if (box[x].lo[a] >= box[y].lo[a] + box[y].side + eps) return false;
            if (box[y].lo[a] >= box[x].lo[a] + box[x].side + eps) return false;
        }
        for (int a = 0; a < d; ++a) {
            if (!(items[x].anchor[a] < items[y].anchor[a] + items[y].side)) return false;
            if (!(items[y].anchor[a] < items[x].anchor[a] + items[x].side)) return false;
        }
        return true;
    };

    const int ax = d > 1 ? 1 : 0;
    std::multimap<double, size_t> active;  // keyed by the axis-1 lower corner
    using Exp = std::pair<double, std::multimap<double, size_t>::iterator>;
    auto later = [](const Exp& x, const Exp& y) { return x.first > y.first; };
    std::priority_queue<Exp, std::vector<Exp>, decltype(later)> expiry(later);
    std::optional<LayoutViolation> found;
    for (size_t k : order) {
        const Box& b = box[k];
        while (!expiry.empty() && expiry.top().first < b.lo[0] - eps) {
            active.erase(expiry.top().second);
            expiry.pop();
        }
        auto lo = active.lower_bound(b.lo[ax] - maxSide - eps);
        auto hi = active.upper_bound(b.lo[ax] + b.side + eps);
        for (auto it = lo; it != hi; ++it) {
            if (overlap(it->second, k)) {
                LayoutViolation v{LayoutViolation::Overlap, std::min(it->second, k), std::max(it->second, k)};
                if (!found || std::pair(v.first, v.second) < std::pair(found->first, found->second)) found = v;
            }
        }
        auto pos = active.emplace(b.lo[ax], k);
        expiry.emplace(b.lo[0] + b.side, pos);
    }
    return found;
}

}  // namespace ehpack
