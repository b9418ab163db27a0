#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ehpack/geometry.hpp"
#include "ehpack/rational.hpp"

namespace ehpack {

struct SmallType {
    int i;  // in [M, 2M-1]
    int k;  // scale exponent
};

// Largest k with 2^k s <= 1/M, and i with 2^k s in (1/(i+1), 1/i]. Throws std::out_of_range unless 0 < s <= 1/M.
SmallType classify_small(const Rat& s, int M);

using Cell = std::array<long, 3>;

struct SmallItem {
    Rat side;
    int k;
    Cell cell;  // anchor = cell / (2^k i)
};

struct SmallBin {
    int i = 0;
    bool closed = false;
    long itemCount = 0;
    Rat volume;
    std::vector<SmallItem> items;
    // Depth-0 cells are handed out in lexicographic order, so a counter suffices.
    long nextCell = 0;
    // free[j]: empty sub-bins of side 1/(2^j i), j >= 1, sorted lexicographically.
    std::vector<std::vector<Cell>> free;
    long splits = 0;
};

struct SmallPlacement {
    size_t bin;
    SmallType type;
    Cell cell;
    bool opened;                  // a new bin was opened for this item
    std::optional<size_t> closed;  // bin closed to make room
};

class AssignSmall {
public:
    AssignSmall(int d, int M, bool keepItems = true);

    SmallPlacement place(const Rat& s);
    // Same as `count` calls of place(s); returns the number of bins opened.
    long place_many(const Rat& s, long count);
    // `count` identical items of side s. Same end state as placing them one by one; whole sub-bins
    // are consumed at once and, without keepItems, no per-item records are made.
    // Returns the number of bins opened.
    long add_dust(const Rat& s, long count);

    int d() const { return d_; }
    int M() const { return M_; }
    size_t bin_count() const { return bins_.size(); }
    const SmallBin& bin(size_t id) const { return bins_.at(id); }
    const std::vector<SmallBin>& bins() const { return bins_; }
    size_t active_count() const;

    // Volume of a closed bin; throws std::logic_error when it is below (i^d-1)/(i+1)^d.
    Rat closed_volume_check(size_t id) const;
    static Rat volume_bound(int i, int d);

    BinLayout layout(size_t id) const;

private:
    size_t open_bin(int i);
    SmallPlacement place_typed(const Rat& s, const SmallType& ty, const Rat& vol);
    void fill_partial(SmallBin& b, Cell cell, int j, int k, long r);

    int d_, M_;
    bool keep_;
    std::vector<SmallBin> bins_;
    std::vector<long> active_;  // per i - M, bin id or -1
};

}  // namespace ehpack
