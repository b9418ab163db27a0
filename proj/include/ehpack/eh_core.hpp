#pragma once

#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "ehpack/assign_small.hpp"
#include "ehpack/geometry.hpp"
#include "ehpack/params.hpp"

namespace ehpack {

enum class BinKind { Plain, BlueOpen, RedOpen, Mixed, Small };

const char* kind_name(BinKind k);

struct BinRecord {
    size_t id = 0;
    BinKind kind = BinKind::Plain;
    int blueType = 0;  // 0 when the bin has no blue type
    int redType = 0;   // 0 when the bin has no red type
    long blueCount = 0;
    long redCount = 0;
    size_t smallIndex = 0;  // for BinKind::Small, index into the AssignSmall bins
    std::vector<Rat> blueSides;  // kept only when layouts are recorded
    std::vector<Rat> redSides;
};

struct PackingStats {
    std::vector<long> n, e;  // arrivals and red arrivals per type (1-based)
    std::vector<long> B, R;  // bins holding blue / red items of each type
    long Y = 0;              // mixed bins
    long smallBins = 0;
    long totalBins = 0;
    int q = 1;
    int eIndex = 0;
    const std::vector<long>& lambda() const { return n; }
};

struct Placement {
    size_t bin;
    int type;  // 0 for small items
    Color color;
    long slot;  // blue/red slot index, or small-bin item ordinal
    bool newBin;
};

struct PackerOptions {
    bool keepLayout = true;
};

class Packer {
public:
    explicit Packer(ParameterSet p, PackerOptions opt = {});

    // Type index, or 0 for a small item. Throws std::out_of_range unless 0 < size <= 1.
    int classify(const Rat& size) const;
    // Requires n_i to have been incremented for the arriving item; increments e_i on red.
    Color color_next(int i);
    Placement pack_item(const Rat& size);
    // Same as `count` calls of pack_item(size).
    void pack_many(const Rat& size, long count);
    // `count` dust items of side s, accounted by capacity (see AssignSmall::add_dust).
    long add_dust(const Rat& s, long count);

    PackingStats stats() const;
    std::pair<int, int> compute_q_e() const;
    // Bins that still have a free slot for their own type/color, plus active small bins.
    long open_bin_count() const;

    const ParameterSet& params() const { return p_; }
    const std::vector<BinRecord>& bins() const { return bins_; }
    const AssignSmall& small() const { return small_; }
    long n(int i) const { return n_[i]; }
    long e(int i) const { return e_[i]; }
    long items_packed() const { return packed_; }
    BinLayout layout(size_t bin) const;

private:
    size_t new_bin(BinKind kind, int blue, int red);
    bool red_below_threshold(int i) const;
    void sync_small_bins();

    ParameterSet p_;
    PackerOptions opt_;
    AssignSmall small_;
    std::vector<BinRecord> bins_;
    std::vector<long> n_, e_;
    std::vector<long> B_, R_;
    long Y_ = 0;
    long packed_ = 0;

    std::vector<long> plainOpen_;      // per type, plain bin with room or -1
    std::vector<long> blueRoom_;       // per type, bin with a free blue slot or -1
    std::vector<long> redRoom_;        // per type, bin with a free red slot or -1
    std::vector<std::set<size_t>> waitBlue_;  // BlueOpen bins keyed by phi of their blue type
    std::vector<std::set<size_t>> waitRed_;   // RedOpen bins keyed by red type
    std::vector<long> blueOpenCount_, redOpenCount_;
    std::vector<int> redHostMinPhi_;           // smallest phi whose strip fits a type-i red grid
    std::vector<std::vector<int>> blueGuests_; // red types whose grid fits in a type-i strip
    std::vector<size_t> smallToBin_;

    // alpha_i as p/q in 64 bits when possible, for the per-item threshold test
    std::vector<long> aNum_, aDen_;
    std::vector<bool> aFast_;

    mutable Rat lastSize_;
    mutable int lastType_ = -1;
};

// Packs every size in order. Throws std::runtime_error naming the offending item index.
Packer pack_stream(const std::vector<Rat>& sizes, const ParameterSet& p, PackerOptions opt = {});

// One size per line, '#' comments. Throws ParseError.
std::vector<Rat> read_stream(const std::string& path);
std::vector<Rat> parse_stream(const std::string& text);

}  // namespace ehpack
