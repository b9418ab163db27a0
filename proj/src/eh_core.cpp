#include "ehpack/eh_core.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ehpack {

const char* kind_name(BinKind k) {
    switch (k) {
        case BinKind::Plain: return "plain";
        case BinKind::BlueOpen: return "blue-open";
        case BinKind::RedOpen: return "red-open";
        case BinKind::Mixed: return "mixed";
        case BinKind::Small: return "small";
    }
    return "?";
}

Packer::Packer(ParameterSet p, PackerOptions opt)
    : p_(std::move(p)), opt_(opt), small_(p_.d(), p_.M(), opt.keepLayout) {
    const int N = p_.N();
    n_.assign(N + 1, 0);
    e_.assign(N + 1, 0);
    B_.assign(N + 1, 0);
    R_.assign(N + 1, 0);
    plainOpen_.assign(N + 1, -1);
    blueRoom_.assign(N + 1, -1);
    redRoom_.assign(N + 1, -1);
    waitBlue_.resize(p_.rb.k() + 1);
    waitRed_.resize(N + 1);
    blueOpenCount_.assign(N + 1, 0);
    redOpenCount_.assign(N + 1, 0);
    redHostMinPhi_.assign(N + 1, -1);
    blueGuests_.resize(N + 1);
    aNum_.assign(N + 1, 0);
    aDen_.assign(N + 1, 1);
    aFast_.assign(N + 1, false);
    for (int i = 1; i <= N; ++i) {
        const Rat need = p_.gamma(i) * p_.t(i);
        for (int f = 1; f <= p_.rb.k(); ++f)
            if (p_.rb.Delta[f] >= need) {
                redHostMinPhi_[i] = f;
                break;
            }
        if (p_.phi(i) != 0)
            for (int j = 1; j <= N; ++j)
                if (p_.gamma(j) > 0 && p_.gamma(j) * p_.t(j) <= p_.delta(i)) blueGuests_[i].push_back(j);
        const Rat& a = p_.alpha(i);
        if (a.get_num().fits_slong_p() && a.get_den().fits_slong_p()) {
            aNum_[i] = a.get_num().get_si();
            aDen_[i] = a.get_den().get_si();
            aFast_[i] = true;
        }
    }
}

int Packer::classify(const Rat& size) const {
    if (lastType_ >= 0 && size == lastSize_) return lastType_;
    if (size <= 0 || size > 1) throw std::out_of_range("item size " + rat_str(size) + " outside (0,1]");
    const auto& t = p_.intervals.t;
    const int N = p_.N();
    int type = 0;
    if (size > t[N + 1]) {
        // t is decreasing: find the largest i with size <= t[i].
        int lo = 1, hi = N;
        while (lo < hi) {
            int mid = (lo + hi + 1) / 2;
            if (size <= t[mid])
                lo = mid;
            else
                hi = mid - 1;
        }
        type = lo;
    }
    lastSize_ = size;
    lastType_ = type;
    return type;
}

bool Packer::red_below_threshold(int i) const {
    if (aFast_[i]) {
        __int128 prod = static_cast<__int128>(aNum_[i]) * n_[i];
        long fl = prod / aDen_[i];
        return e_[i] < fl;
    }
    Int fl = floor_int(Rat(p_.alpha(i) * Rat(Int(n_[i]))));
    return Int(e_[i]) < fl;
}

Color Packer::color_next(int i) {
    if (red_below_threshold(i)) {
        ++e_[i];
        return Color::Red;
    }
    return Color::Blue;
}

size_t Packer::new_bin(BinKind kind, int blue, int red) {
    BinRecord b;
    b.id = bins_.size();
    b.kind = kind;
    b.blueType = blue;
    b.redType = red;
    bins_.push_back(std::move(b));
    return bins_.size() - 1;
}

void Packer::sync_small_bins() {
    while (smallToBin_.size() < small_.bin_count()) {
        size_t id = new_bin(BinKind::Small, 0, 0);
        bins_[id].smallIndex = smallToBin_.size();
        smallToBin_.push_back(id);
    }
}

Placement Packer::pack_item(const Rat& size) {
    const int i = classify(size);
    ++packed_;
    if (i == 0) {
        auto sp = small_.place(size);
        sync_small_bins();
        return {smallToBin_[sp.bin], 0, Color::Small, small_.bin(sp.bin).itemCount - 1, sp.opened};
    }
    ++n_[i];
    const Color color = color_next(i);
    const bool keep = opt_.keepLayout;
    if (color == Color::Red) {
        const long cap = p_.theta(i);
        if (cap < 1) throw std::logic_error("type " + std::to_string(i) + " colored red without red capacity");
        long id = redRoom_[i];
        bool fresh = false;
        if (id < 0) {
            // Convert a blue bin still waiting for reds: smallest fitting strip, then lowest id.
            if (redHostMinPhi_[i] > 0)
                for (int f = redHostMinPhi_[i]; f <= p_.rb.k(); ++f)
                    if (!waitBlue_[f].empty()) {
                        id = static_cast<long>(*waitBlue_[f].begin());
                        waitBlue_[f].erase(waitBlue_[f].begin());
                        BinRecord& b = bins_[id];
                        b.kind = BinKind::Mixed;
                        b.redType = i;
                        --blueOpenCount_[b.blueType];
                        ++R_[i];
                        ++Y_;
                        break;
                    }
            if (id < 0) {
                id = static_cast<long>(new_bin(BinKind::RedOpen, 0, i));
                waitRed_[i].insert(static_cast<size_t>(id));
                ++redOpenCount_[i];
                ++R_[i];
                fresh = true;
            }
            redRoom_[i] = id;
        }
        BinRecord& b = bins_[id];
        long slot = b.redCount++;
        if (keep) b.redSides.push_back(size);
        if (b.redCount == cap) redRoom_[i] = -1;
        return {static_cast<size_t>(id), i, Color::Red, slot, fresh};
    }

    const long cap = p_.blue_capacity(i);
    if (p_.phi(i) == 0) {
        long id = plainOpen_[i];
        bool fresh = false;
        if (id < 0) {
            id = static_cast<long>(new_bin(BinKind::Plain, i, 0));
            plainOpen_[i] = id;
            ++B_[i];
            fresh = true;
        }
        BinRecord& b = bins_[id];
        long slot = b.blueCount++;
        if (keep) b.blueSides.push_back(size);
        if (b.blueCount == cap) plainOpen_[i] = -1;
        return {static_cast<size_t>(id), i, Color::Blue, slot, fresh};
    }
    long id = blueRoom_[i];
    bool fresh = false;
    if (id < 0) {
        // Convert a red-only bin whose red grid fits in this type's strip: lowest id.
        size_t best = std::numeric_limits<size_t>::max();
        int bestJ = 0;
        for (int j : blueGuests_[i])
            if (!waitRed_[j].empty() && *waitRed_[j].begin() < best) {
                best = *waitRed_[j].begin();
                bestJ = j;
            }
        if (bestJ > 0) {
            waitRed_[bestJ].erase(waitRed_[bestJ].begin());
            --redOpenCount_[bestJ];
            BinRecord& b = bins_[best];
            b.kind = BinKind::Mixed;
            b.blueType = i;
            ++B_[i];
            ++Y_;
            id = best;
        } else {
            id = static_cast<long>(new_bin(BinKind::BlueOpen, i, 0));
            waitBlue_[p_.phi(i)].insert(static_cast<size_t>(id));
            ++blueOpenCount_[i];
            ++B_[i];
            fresh = true;
        }
        blueRoom_[i] = id;
    }
    BinRecord& b = bins_[id];
    long slot = b.blueCount++;
    if (keep) b.blueSides.push_back(size);
    if (b.blueCount == cap) blueRoom_[i] = -1;
    return {static_cast<size_t>(id), i, Color::Blue, slot, fresh};
}

void Packer::pack_many(const Rat& size, long count) {
    if (count <= 0) return;
    if (classify(size) == 0) {
        packed_ += count;
        small_.place_many(size, count);
        sync_small_bins();
        return;
    }
    for (long c = 0; c < count; ++c) pack_item(size);
}

long Packer::add_dust(const Rat& s, long count) {
    if (classify(s) != 0) throw std::invalid_argument("dust must be small");
    packed_ += count;
    long opened = small_.add_dust(s, count);
    sync_small_bins();
    return opened;
}

std::pair<int, int> Packer::compute_q_e() const {
    const int N = p_.N();
    int q = 1;
    for (int i = 2; i <= std::min(17, N); ++i) {
        bool hit = blueOpenCount_[i] > 0;
        if (i <= 8 && 20 + i <= N) hit = hit || blueOpenCount_[20 + i] > 0;
        if (hit) q = i;
    }
    int e = 0;
    for (int j = 1; j <= N; ++j)
        if (redOpenCount_[j] > 0) e = j;
    return {q, e};
}

PackingStats Packer::stats() const {
    PackingStats s;
    s.n = n_;
    s.e = e_;
    s.B = B_;
    s.R = R_;
    s.Y = Y_;
    s.smallBins = static_cast<long>(small_.bin_count());
    long sum = 0;
    for (int i = 1; i <= p_.N(); ++i) sum += B_[i] + R_[i];
    s.totalBins = sum - Y_ + s.smallBins;
    std::tie(s.q, s.eIndex) = compute_q_e();
    return s;
}

long Packer::open_bin_count() const {
    long c = static_cast<long>(small_.active_count());
    for (int i = 1; i <= p_.N(); ++i) c += (plainOpen_[i] >= 0) + (blueRoom_[i] >= 0) + (redRoom_[i] >= 0);
    return c;
}

BinLayout Packer::layout(size_t bin) const {
    const BinRecord& b = bins_.at(bin);
    if (b.kind == BinKind::Small) return small_.layout(b.smallIndex);
    BinLayout out;
    out.d = p_.d();
    for (size_t k = 0; k < b.blueSides.size(); ++k)
        out.items.push_back({b.blueSides[k], blue_slot(b.blueType, k, p_), Color::Blue, b.blueType});
    for (size_t k = 0; k < b.redSides.size(); ++k)
        out.items.push_back({b.redSides[k], red_slot(b.redType, k, p_), Color::Red, b.redType});
    return out;
}

Packer pack_stream(const std::vector<Rat>& sizes, const ParameterSet& p, PackerOptions opt) {
    Packer pk(p, opt);
    for (size_t k = 0; k < sizes.size(); ++k) {
        try {
            pk.pack_item(sizes[k]);
        } catch (const std::out_of_range& e) {
            throw std::runtime_error("item " + std::to_string(k) + ": " + e.what());
        }
    }
    return pk;
}

std::vector<Rat> parse_stream(const std::string& text) {
    std::vector<Rat> out;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ls(raw);
        std::string tok, extra;
        if (!(ls >> tok)) continue;
        if (ls >> extra) throw ParseError(line, "one size per line expected");
        try {
            out.push_back(parse_rat(tok));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, e.what());
        }
    }
    return out;
}

std::vector<Rat> read_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_stream(ss.str());
}

}  // namespace ehpack
