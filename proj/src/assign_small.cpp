#include "ehpack/assign_small.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehpack {

SmallType classify_small(const Rat& s, int M) {
    const Rat limit(1, M);
    if (s <= 0 || s > limit) throw std::out_of_range("size " + rat_str(s) + " is not small");
    int k = 0;
    Rat x = s;
    while (2 * x <= limit) {
        x *= 2;
        ++k;
    }
    Int i = floor_int(Rat(1 / x));
    return {static_cast<int>(i.get_si()), k};
}

AssignSmall::AssignSmall(int d, int M, bool keepItems) : d_(d), M_(M), keep_(keepItems), active_(M, -1) {
    if (d < 1 || d > 3) throw std::invalid_argument("AssignSmall supports d <= 3");
}

size_t AssignSmall::active_count() const {
    return std::count_if(active_.begin(), active_.end(), [](long b) { return b >= 0; });
}

size_t AssignSmall::open_bin(int i) {
    SmallBin b;
    b.i = i;
    bins_.push_back(std::move(b));
    active_[i - M_] = static_cast<long>(bins_.size() - 1);
    return bins_.size() - 1;
}

SmallPlacement AssignSmall::place(const Rat& s) { return place_typed(s, classify_small(s, M_), pow_rat(s, d_)); }

long AssignSmall::place_many(const Rat& s, long count) {
    const SmallType ty = classify_small(s, M_);
    const Rat vol = pow_rat(s, d_);
    long opened = 0;
    for (long c = 0; c < count; ++c)
        if (place_typed(s, ty, vol).opened) ++opened;
    return opened;
}

SmallPlacement AssignSmall::place_typed(const Rat& s, const SmallType& ty, const Rat& vol) {
    const int k = ty.k;
    const long cells0 = ipow(ty.i, d_);
    SmallPlacement out{0, ty, {0, 0, 0}, false, std::nullopt};

    long id = active_[ty.i - M_];
    auto usable = [&](const SmallBin& b) {
        if (k == 0) return b.nextCell < cells0;
        if (static_cast<int>(b.free.size()) > k && !b.free[k].empty()) return true;
        if (b.nextCell < cells0) return true;
        for (int j = 1; j < k && j < static_cast<int>(b.free.size()); ++j)
            if (!b.free[j].empty()) return true;
        return false;
    };
    if (id < 0 || !usable(bins_[id])) {
        if (id >= 0) {
            bins_[id].closed = true;
            out.closed = static_cast<size_t>(id);
        }
        id = static_cast<long>(open_bin(ty.i));
        out.opened = true;
    }
    SmallBin& b = bins_[id];
    if (static_cast<int>(b.free.size()) <= k) b.free.resize(k + 1);

    auto take = [](std::vector<Cell>& v) {
        auto it = std::min_element(v.begin(), v.end());
        Cell c = *it;
        v.erase(it);
        return c;
    };
    Cell cell{0, 0, 0};
    if (k > 0 && !b.free[k].empty()) {
        cell = take(b.free[k]);
    } else {
        // Deepest level above k that still has an empty sub-bin; level 0 is the counter.
        int j = -1;
        for (int l = k - 1; l >= 1; --l)
            if (!b.free[l].empty()) {
                j = l;
                break;
            }
        if (j < 0) {
            j = 0;
            long n = b.nextCell++;
            for (int a = d_ - 1; a >= 0; --a) {
                cell[a] = n % ty.i;
                n /= ty.i;
            }
        } else {
            cell = take(b.free[j]);
        }
        for (int l = j; l < k; ++l) {
            for (int m = 1; m < (1 << d_); ++m) {
                Cell c{0, 0, 0};
                for (int a = 0; a < d_; ++a) c[a] = 2 * cell[a] + ((m >> (d_ - 1 - a)) & 1);
                b.free[l + 1].push_back(c);
            }
            for (int a = 0; a < d_; ++a) cell[a] *= 2;
            ++b.splits;
        }
    }
    b.itemCount++;
    b.volume += vol;
    if (keep_) b.items.push_back({s, k, cell});
    out.bin = static_cast<size_t>(id);
    out.cell = cell;
    return out;
}

void AssignSmall::fill_partial(SmallBin& b, Cell cell, int j, int k, long r) {
    // r items go into a level-j cell in depth-first lex order; untouched children become free.
    ++b.splits;
    const long sub = ipow(2, d_ * (k - j - 1));
    const long q = r / sub, rem = r % sub;
    for (int m = 0; m < (1 << d_); ++m) {
        Cell c{0, 0, 0};
        for (int a = 0; a < d_; ++a) c[a] = 2 * cell[a] + ((m >> (d_ - 1 - a)) & 1);
        if (m < q) {
            b.splits += (sub - 1) / ((1 << d_) - 1);
        } else if (m == q && rem > 0) {
            fill_partial(b, c, j + 1, k, rem);
        } else {
            b.free[j + 1].push_back(c);
        }
    }
}

long AssignSmall::add_dust(const Rat& s, long count) {
    if (count <= 0) return 0;
    if (keep_) return place_many(s, count);
    const SmallType ty = classify_small(s, M_);
    const int k = ty.k;
    if (d_ * k > 60) throw std::overflow_error("dust too fine for 64-bit cell counts");
    const Rat vol = pow_rat(s, d_);
    const long cells0 = ipow(ty.i, d_);
    const long per = ipow(2, d_ * k);
    long opened = 0;
    // Same end state as placing the items one at a time, but whole sub-bins are consumed at once.
    while (count > 0) {
        long id = active_[ty.i - M_];
        int j = 0;
        if (id >= 0) {
            const SmallBin& b = bins_[id];
            for (int l = std::min<int>(k, static_cast<int>(b.free.size()) - 1); l >= 1; --l)
                if (!b.free[l].empty()) {
                    j = l;
                    break;
                }
        }
        if (id < 0 || (j == 0 && bins_[id].nextCell == cells0)) {
            if (id >= 0) bins_[id].closed = true;
            id = static_cast<long>(open_bin(ty.i));
            ++opened;
        }
        SmallBin& b = bins_[id];
        if (static_cast<int>(b.free.size()) <= k) b.free.resize(k + 1);
        const long cap = ipow(2, d_ * (k - j));
        long used;
        if (j == 0 && count >= per) {
            long whole = std::min(count / per, cells0 - b.nextCell);
            b.nextCell += whole;
            b.splits += whole * ((per - 1) / ((1 << d_) - 1));
            used = whole * per;
        } else {
            Cell cell{0, 0, 0};
            if (j == 0) {
                long n = b.nextCell++;
                for (int a = d_ - 1; a >= 0; --a) {
                    cell[a] = n % ty.i;
                    n /= ty.i;
                }
            } else {
                auto it = std::min_element(b.free[j].begin(), b.free[j].end());
                cell = *it;
                b.free[j].erase(it);
            }
            used = std::min(count, cap);
            if (used == cap)
                b.splits += (cap - 1) / ((1 << d_) - 1);
            else
                fill_partial(b, cell, j, k, used);
        }
        b.itemCount += used;
        b.volume += Rat(Int(used)) * vol;
        count -= used;
    }
    return opened;
}

Rat AssignSmall::volume_bound(int i, int d) { return frac(ipow(i, d) - 1, ipow(i + 1, d)); }

Rat AssignSmall::closed_volume_check(size_t id) const {
    const SmallBin& b = bins_.at(id);
    if (!b.closed) throw std::logic_error("small bin " + std::to_string(id) + " is still active");
    Rat bound = volume_bound(b.i, d_);
    if (b.volume < bound)
        throw std::logic_error("small bin " + std::to_string(id) + " volume deficit " + rat_str(Rat(bound - b.volume)));
    return b.volume;
}

BinLayout AssignSmall::layout(size_t id) const {
    const SmallBin& b = bins_.at(id);
    BinLayout out;
    out.d = d_;
    for (const auto& it : b.items) {
        PlacedItem p;
        p.side = it.side;
        p.color = Color::Small;
        p.typeIndex = b.i;
        Rat unit = frac(1, ipow(2, it.k) * b.i);
        for (int a = 0; a < d_; ++a) p.anchor.push_back(Rat(Int(it.cell[a])) * unit);
        out.items.push_back(std::move(p));
    }
    return out;
}

}  // namespace ehpack
