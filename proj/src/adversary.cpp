#include "ehpack/adversary.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace ehpack {

const char* counter_name(Counter c) { return c == Counter::P1 ? "p1" : "p2"; }

namespace {

Rat dec(const char* s) { return parse_rat(s); }

// Prior-work alpha of type i.
Rat prior_alpha(int i) {
    static const ParameterSet p = builtin_prior_params();
    return p.alpha(i);
}

// Largest eps = 10^-k below 10^-5 that keeps every large size in its prior type and
// every grid size in its small class.
Rat choose_eps(const std::vector<BatchSpec>& batches) {
    static const ParameterSet p = builtin_prior_params();
    Packer pk(p, {false});
    for (int k = 6; k <= 30; ++k) {
        Rat eps(1);
        for (int j = 0; j < k; ++j) eps /= 10;
        bool ok = true;
        for (const auto& b : batches) {
            if (b.role == BatchRole::Dust) continue;
            Rat s = b.base + eps;
            if (b.role == BatchRole::Large) {
                ok = ok && pk.classify(s) == b.priorType;
            } else {
                // same small class as the bare size nudged upward: (1/(i+1), 1/i] interior
                ok = ok && pk.classify(s) == 0 && classify_small(s, p.M()).i == classify_small(b.base + eps / 2, p.M()).i &&
                     classify_small(s, p.M()).k == classify_small(b.base + eps / 2, p.M()).k;
            }
        }
        if (ok) return eps;
    }
    throw std::logic_error("no admissible eps");
}

BatchSpec large(long a, long b, const Rat& base, int type) { return {{a, b}, base, true, BatchRole::Large, type}; }
BatchSpec grid(long a, long b, const Rat& base) { return {{a, b}, base, true, BatchRole::SmallGrid, 0}; }
BatchSpec dust() { return {{0, 0}, Rat(0), false, BatchRole::Dust, 0}; }

Rat side_area_left(const std::vector<std::pair<Rat, long>>& items) {
    Rat a(1);
    for (const auto& [s, c] : items) a -= c * s * s;
    return a;
}

long lcm_den(long acc, const Rat& r) {
    Int l;
    mpz_lcm(l.get_mpz_t(), Int(acc).get_mpz_t(), r.get_den_mpz_t());
    if (!l.fits_slong_p()) throw std::overflow_error("lattice does not fit in 64 bits");
    return l.get_si();
}

}  // namespace

AdversaryInput build_input(Counter which) {
    AdversaryInput in;
    in.which = which;
    const Rat a9 = prior_alpha(9), a10 = prior_alpha(10), a12 = prior_alpha(12);
    const Rat q3 = frac(1, 3), q4 = frac(1, 4), q5 = frac(1, 5), q7 = frac(1, 7);
    if (which == Counter::P1) {
        in.batches = {large(5, 4, q7, 12),         large(2, 0, q5, 10),       large(2, 2, q4, 9),
                      large(1, 0, frac(1, 2), 4),  large(0, 1, dec("0.6"), 3), large(3, 3, dec("0.3525"), 6),
                      grid(24, 25, frac(1, 23)),   dust()};
        // N (4 a12/11 + 2 a9/5) = M (1 - 2 a9/5 - 2 a10/7 - 5 a12/11)
        in.ratioNM = (1 - 2 * a9 / 5 - 2 * a10 / 7 - 5 * a12 / 11) / (4 * a12 / 11 + 2 * a9 / 5);
        in.dustA = side_area_left({{frac(1, 23), 24}, {q7, 5}, {q5, 2}, {q4, 2}, {dec("0.3525"), 3}, {frac(1, 2), 1}});
        in.dustB = side_area_left({{frac(1, 23), 25}, {q7, 4}, {q4, 2}, {dec("0.3525"), 3}, {dec("0.6"), 1}});
    } else {
        in.batches = {large(1, 0, frac(1, 2), 4), large(5, 0, q7, 12),          large(2, 0, q5, 10),
                      large(2, 2, q4, 9),         large(3, 3, q3, 7),           large(0, 1, dec("0.6475"), 2),
                      grid(8, 8, frac(1, 13)),    grid(0, 6, frac(1, 12)),      grid(10, 0, frac(1, 22)),
                      dust()};
        // N (2 a9/5) = M (1 - 5 a12/11 - 2 a10/7 - 2 a9/5)
        in.ratioNM = (1 - 5 * a12 / 11 - 2 * a10 / 7 - 2 * a9 / 5) / (2 * a9 / 5);
        in.dustA = side_area_left({{frac(1, 22), 10}, {frac(1, 13), 8}, {q7, 5}, {q5, 2}, {q4, 2}, {q3, 3}, {frac(1, 2), 1}});
        in.dustB = side_area_left({{frac(1, 13), 8}, {frac(1, 12), 6}, {q4, 2}, {q3, 3}, {dec("0.6475"), 1}});
    }
    in.eps = choose_eps(in.batches);
    // small class i = 15 at k = 17: clear of the classes 11, 12 and 21 used by the grid batches
    in.dustSide = frac(1, 15L << 17);
    in.lattice = Int(in.ratioNM.get_den()).get_si();
    long mult = 1;
    for (const auto& t : analytic_cost(which).terms) {
        if (t.label == "dust") continue;
        mult = lcm_den(mult, t.perM * in.lattice + t.perN * in.ratioNM * in.lattice);
    }
    Int full = Int(mult) * in.lattice;
    in.fullLattice = full.fits_slong_p() ? full.get_si() : 0;
    return in;
}

AdversaryStream build_stream(Counter which, long scale) {
    if (scale < 1) throw std::invalid_argument("scale must be positive");
    const AdversaryInput in = build_input(which);
    AdversaryStream s;
    s.M = in.lattice * scale;
    Rat n = in.ratioNM * s.M;
    s.N = Int(n.get_num()).get_si();
    for (const auto& b : in.batches) {
        if (b.role == BatchRole::Dust) {
            Rat perItem = in.dustSide * in.dustSide;
            Int cA = floor_int(in.dustA * s.M / perItem), cB = floor_int(in.dustB * s.N / perItem);
            Int c = cA + cB;
            if (!c.fits_slong_p()) throw std::overflow_error("dust count does not fit in 64 bits");
            s.batches.push_back({in.dustSide, c.get_si(), b.role});
        } else {
            s.batches.push_back({b.plusEps ? b.base + in.eps : b.base, b.count.at(s.M, s.N), b.role});
        }
    }
    return s;
}

CostBreakdown analytic_cost(Counter which) {
    const Rat a6 = prior_alpha(6), a7 = prior_alpha(7), a9 = prior_alpha(9), a10 = prior_alpha(10), a12 = prior_alpha(12);
    CostBreakdown c;
    Rat r;
    if (which == Counter::P1) {
        r = (1 - 2 * a9 / 5 - 2 * a10 / 7 - 5 * a12 / 11) / (4 * a12 / 11 + 2 * a9 / 5);
        c.terms = {
            {"type-12 red", 1, 5 * a12 / 11, 4 * a12 / 11},
            {"type-12 blue", 1, 5 * (1 - a12) / 36, 4 * (1 - a12) / 36},
            {"type-10 red", 2, 2 * a10 / 7, Rat(0)},
            {"type-10 blue", 2, 2 * (1 - a10) / 16, Rat(0)},
            {"type-9 red", 3, 2 * a9 / 5, 2 * a9 / 5},
            {"type-9 blue", 3, 2 * (1 - a9) / 9, 2 * (1 - a9) / 9},
            {"type-3 plain", 5, Rat(0), Rat(1)},
            {"type-6 red", 6, 3 * a6 / 3, 3 * a6 / 3},
            {"type-6 blue", 6, 3 * (1 - a6) / 4, 3 * (1 - a6) / 4},
            {"1/23 grid", 7, frac(24, 484), frac(25, 484)},
            {"dust", 8, frac(102944997, 4147360000), frac(55324197, 4147360000)},
        };
    } else {
        r = (1 - 5 * a12 / 11 - 2 * a10 / 7 - 2 * a9 / 5) / (2 * a9 / 5);
        c.terms = {
            {"type-4 blue-open", 1, Rat(1), Rat(0)},
            {"type-12 blue", 2, 5 * (1 - a12) / 36, Rat(0)},
            {"type-10 blue", 3, 2 * (1 - a10) / 16, Rat(0)},
            {"type-9 blue", 4, 2 * (1 - a9) / 9, 2 * (1 - a9) / 9},
            {"type-7 red", 5, 3 * a7 / 3, 3 * a7 / 3},
            {"type-7 blue", 5, 3 * (1 - a7) / 4, 3 * (1 - a7) / 4},
            {"type-2 plain", 6, Rat(0), Rat(1)},
            {"1/13 grid", 7, frac(8, 144), frac(8, 144)},
            {"1/12 grid", 8, Rat(0), frac(6, 121)},
            {"1/22 grid", 9, frac(10, 441), Rat(0)},
            {"dust", 10, frac(25026427, 601200600), frac(903311, 27040000)},
        };
    }
    for (const auto& t : c.terms) c.total += t.perM + t.perN * r;
    c.opt = 1 + r;
    c.ratio = c.total / c.opt;
    return c;
}

SimulationReport simulate(Counter which, long scale) {
    const auto t0 = std::chrono::steady_clock::now();
    const AdversaryStream s = build_stream(which, scale);
    const CostBreakdown cost = analytic_cost(which);
    SimulationReport rep;
    rep.M = s.M;
    rep.N = s.N;
    rep.binsPerBatch.assign(s.batches.size(), 0);
    rep.analyticPerBatch.assign(s.batches.size(), 0);
    for (const auto& t : cost.terms) {
        double v = to_double(t.perM * s.M + t.perN * s.N);
        rep.analyticPerBatch[t.batch - 1] += v;
        rep.analyticBins += v;
    }
    Packer pk(builtin_prior_params(), {false});
    long before = 0;
    for (size_t k = 0; k < s.batches.size(); ++k) {
        const auto& b = s.batches[k];
        if (b.role == BatchRole::Dust) {
            pk.add_dust(b.size, b.count);
            rep.dustItems = b.count;
        } else {
            pk.pack_many(b.size, b.count);
        }
        long now = pk.stats().totalBins;
        rep.binsPerBatch[k] = now - before;
        before = now;
        if (which == Counter::P1 && k == 3)
            for (const auto& bin : pk.bins()) rep.acceptingAfterBatch4 += bin.kind == BinKind::RedOpen;
    }
    rep.bins = pk.stats().totalBins;
    rep.ratio = static_cast<double>(rep.bins) / static_cast<double>(s.M + s.N);
    std::vector<int> types;
    for (const auto& bin : pk.bins())
        if (bin.kind == BinKind::RedOpen) types.push_back(bin.redType);
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    rep.redOpenTypes = types;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Rat prior_weight_eval(const std::map<int, long>& typeCounts, const Rat& smallArea, PriorWeight w) {
    const Rat a6 = prior_alpha(6), a9 = prior_alpha(9), a10 = prior_alpha(10), a12 = prior_alpha(12);
    std::map<int, Rat> wt;
    if (w == PriorWeight::W21) {
        wt = {{3, Rat(1)},
              {4, Rat(0)},
              {6, (1 - a6) / 4 + a6 / 3},
              {9, (1 - a9) / 9 + a9 / 5},
              {10, (1 - a10) / 16 + a10 / 7},
              {12, (1 - a12) / 36 + a12 / 11}};
    } else {
        wt = {{3, Rat(1)},
              {4, Rat(1)},
              {6, (1 - a6) / 4 + a6 / 3},
              {9, (1 - a9) / 9},
              {10, (1 - a10) / 16},
              {12, (1 - a12) / 36}};
    }
    Rat total = frac(6, 5) * smallArea;
    for (const auto& [type, count] : typeCounts) {
        auto it = wt.find(type);
        if (it == wt.end()) throw std::invalid_argument("no prior weight for type " + std::to_string(type));
        total += count * it->second;
    }
    return total;
}

WeightedBin w21_bin() {
    // type-B bin of P1 with its 1/23 items counted as small area
    WeightedBin b;
    b.types = {{3, 1}, {6, 3}, {9, 2}, {12, 4}};
    b.smallArea = 1 - dec("0.36") - 3 * dec("0.3525") * dec("0.3525") - frac(2, 16) - frac(4, 49);
    return b;
}

WeightedBin w22_bin() {
    // type-A bin of P1 with the type-12 items replaced by small area
    WeightedBin b;
    b.types = {{4, 1}, {6, 3}, {9, 2}, {10, 2}};
    b.smallArea = 1 - frac(1, 4) - 3 * dec("0.3525") * dec("0.3525") - frac(2, 16) - frac(2, 25);
    return b;
}

namespace {

// Places squares at explicit corners, then fills tiny ones bottom-left in exact integer coordinates.
class LayoutBuilder {
public:
    explicit LayoutBuilder(Rat eps) : eps_(std::move(eps)) {}
    Rat s(const Rat& base) const { return base + eps_; }
    void put(const Rat& side, const Rat& x, const Rat& y) { lay_.items.push_back({side, {x, y}, Color::Blue, 0}); }
    // Bottom-left placement of `count` squares; returns how many fit.
    long fill(const Rat& side, long count) {
        long D = 1;
        D = lcm_den(D, side);
        for (const auto& it : lay_.items) {
            D = lcm_den(D, it.side);
            D = lcm_den(D, it.anchor[0]);
            D = lcm_den(D, it.anchor[1]);
        }
        auto sc = [&](const Rat& r) { return Int(r * D).get_si(); };
        struct Sq {
            long x, y, s;
        };
        std::vector<Sq> sq;
        for (const auto& it : lay_.items) sq.push_back({sc(it.anchor[0]), sc(it.anchor[1]), sc(it.side)});
        const long t = sc(side);
        long placed = 0;
        while (placed < count) {
            std::vector<long> xs{0}, ys{0};
            for (const auto& q : sq) {
                xs.push_back(q.x + q.s);
                ys.push_back(q.y + q.s);
            }
            std::sort(xs.begin(), xs.end());
            xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
            std::sort(ys.begin(), ys.end());
            ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
            bool found = false;
            for (long y : ys) {
                if (y + t > D) break;
                for (long x : xs) {
                    if (x + t > D) break;
                    bool clear = true;
                    for (const auto& q : sq)
                        if (x < q.x + q.s && q.x < x + t && y < q.y + q.s && q.y < y + t) {
                            clear = false;
                            break;
                        }
                    if (clear) {
                        sq.push_back({x, y, t});
                        put(side, Rat(Int(x), Int(D)), Rat(Int(y), Int(D)));
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) break;
            ++placed;
        }
        return placed;
    }
    BinLayout layout() const { return lay_; }

private:
    Rat eps_;
    BinLayout lay_;
};

}  // namespace

std::vector<ReferenceBin> reference_bins() {
    const Rat eps = build_input(Counter::P1).eps;
    std::vector<ReferenceBin> out;
    auto demand = [&](std::initializer_list<std::pair<Rat, long>> l) {
        std::map<Rat, long> m;
        for (const auto& [b, c] : l) m[b + eps] += c;
        return m;
    };
    const Rat h = frac(1, 2), S0 = dec("0.3525"), q = frac(1, 4), f = frac(1, 5), g = frac(1, 7), t = frac(1, 23);
    {
        LayoutBuilder b(eps);
        const Rat S = b.s(S0), Q = b.s(q), F = b.s(f), G = b.s(g), L = b.s(h);
        b.put(S, 0, 0);
        b.put(Q, S, 0);
        b.put(S, S + Q, 0);
        b.put(F, S, Q);
        b.put(S, 0, S);
        for (int k = 0; k < 3; ++k) b.put(G, S + F + k * G, S);
        b.put(G, S, Q + F);
        b.put(G, S, Q + F + G);
        b.put(L, S + G, S + G);
        b.put(Q, 0, 2 * S);
        b.put(F, Q, Q + F + 2 * G);
        b.fill(b.s(t), 24);
        out.push_back({"P1A", b.layout(), demand({{h, 1}, {S0, 3}, {q, 2}, {f, 2}, {g, 5}, {t, 24}})});
    }
    {
        LayoutBuilder b(eps);
        const Rat S = b.s(S0), Q = b.s(q), G = b.s(g), B = b.s(dec("0.6"));
        b.put(S, 0, 0);
        b.put(S, S, 0);
        b.put(Q, 2 * S, 0);
        b.put(G, 2 * S, Q);
        b.put(G, 2 * S + G, Q);
        b.put(B, 1 - B, 1 - B);
        b.put(S, 0, S);
        b.put(Q, 0, 2 * S);
        b.put(G, Q, 2 * S);
        b.put(G, Q, 2 * S + G);
        b.fill(b.s(t), 25);
        out.push_back({"P1B", b.layout(), demand({{dec("0.6"), 1}, {S0, 3}, {q, 2}, {g, 4}, {t, 25}})});
    }
    const Rat th = frac(1, 3), h13 = frac(1, 13), h12 = frac(1, 12), h22 = frac(1, 22);
    {
        LayoutBuilder b(eps);
        const Rat T = b.s(th), Q = b.s(q), F = b.s(f), G = b.s(g), L = b.s(h), H = b.s(h13);
        b.put(L, 0, 0);
        b.put(T, 1 - T, 0);
        b.put(T, 1 - T, T);
        b.put(T, 0, L);
        for (int k = 0; k < 3; ++k) b.put(G, L, k * G);
        b.put(G, 0, L + T);
        b.put(G, G, L + T);
        b.put(Q, T, L);
        b.put(F, T, L + Q);
        b.put(Q, 1 - Q, 2 * T);
        b.put(F, 1 - Q - F, L + Q);
        for (int k = 0; k < 3; ++k) b.put(H, 1 - Q + k * H, 2 * T + Q);
        for (int k = 0; k < 4; ++k) b.put(H, T + Q, 3 * G + k * H);
        b.put(H, 1 - T, 2 * T);
        b.fill(b.s(h22), 10);
        out.push_back({"P2A", b.layout(),
                       demand({{h, 1}, {g, 5}, {f, 2}, {q, 2}, {th, 3}, {h13, 8}, {h22, 10}})});
    }
    {
        // corners found by a skyline search over the same multiset
        static const char* rows[][3] = {
            {"647501/1000000", "0", "0"},
            {"1000003/3000000", "647501/1000000", "0"},
            {"1000003/3000000", "647501/1000000", "1000003/3000000"},
            {"1000003/3000000", "0", "647501/1000000"},
            {"250001/1000000", "1000003/3000000", "647501/1000000"},
            {"250003/3000000", "875003/1500000", "1000003/1500000"},
            {"1000013/13000000", "2000009/3000000", "1000003/1500000"},
            {"250001/1000000", "7250039/9750000", "1000003/1500000"},
            {"1000013/13000000", "2000009/3000000", "29000117/39000000"},
            {"250003/3000000", "875003/1500000", "750003/1000000"},
            {"1000013/13000000", "2000009/3000000", "8000039/9750000"},
            {"1000013/13000000", "875003/1500000", "625003/750000"},
            {"250003/3000000", "1000003/3000000", "448751/500000"},
            {"250003/3000000", "625003/1500000", "448751/500000"},
            {"250003/3000000", "500003/1000000", "7100039/7800000"},
            {"250003/3000000", "437503/750000", "7100039/7800000"},
            {"1000013/13000000", "400003/600000", "2750009/3000000"},
            {"1000013/13000000", "14500117/19500000", "2750009/3000000"},
            {"1000013/13000000", "32000273/39000000", "2750009/3000000"},
            {"1000013/13000000", "4375039/4875000", "2750009/3000000"},
        };
        LayoutBuilder b(eps);
        for (const auto& r : rows) b.put(parse_rat(r[0]), parse_rat(r[1]), parse_rat(r[2]));
        out.push_back({"P2B", b.layout(), demand({{dec("0.6475"), 1}, {th, 3}, {q, 2}, {h13, 8}, {h12, 6}})});
    }
    return out;
}

Rat generic_lower_bound_exact(int d) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    const Rat two = pow_rat(Rat(2), d), three = pow_rat(Rat(3), d), four = pow_rat(Rat(4), d);
    return 3 - 1 / two - 1 / four - 2 * two / three + 2 / three;
}

double generic_lower_bound(int d) { return to_double(generic_lower_bound_exact(d)); }

Rat generic_first(int d, const Rat& beta) {
    const Rat two = pow_rat(Rat(2), d), three = pow_rat(Rat(3), d);
    return 3 + 1 / three - 2 / two - two / three - beta * (1 - 1 / two);
}

Rat generic_second(int d, const Rat& beta) {
    const Rat two = pow_rat(Rat(2), d), three = pow_rat(Rat(3), d);
    return 3 - 2 * two / three + 1 / three - 1 / two + beta / two;
}

Rat generic_combined(int d, const Rat& beta) {
    const Rat two = pow_rat(Rat(2), d);
    return (generic_first(d, beta) + (two - 1) * generic_second(d, beta)) / two;
}

namespace {

// Type j with t[j+1] < x <= t[j], 0 when x is at most 1/M.
int type_of(const ParameterSet& p, const Rat& x) {
    for (int j = 1; j <= p.N(); ++j)
        if (x <= p.t(j) && x > p.t(j + 1)) return j;
    return 0;
}

}  // namespace

GenericInput generic_adversary(const ParameterSet& p, long N) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    GenericInput g;
    g.N = N;
    const Rat third = frac(1, 3), half = frac(1, 2), twoThirds = frac(2, 3);
    g.third = type_of(p, third);
    if (g.third == 0) throw std::invalid_argument("1/3 is not a large size");
    if (p.t(g.third) == third) --g.third;
    g.twoThirds = type_of(p, twoThirds);
    g.half = type_of(p, half + Rat(1, 1000000000));
    bool found = false;
    for (int k = 3; k <= 30 && !found; ++k) {
        Rat eps(1);
        for (int j = 0; j < k; ++j) eps /= 10;
        if (type_of(p, third + eps) == g.third && type_of(p, twoThirds - eps) == g.twoThirds &&
            type_of(p, half + eps) == g.half) {
            g.eps = eps;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("no eps keeps 1/3+eps, 1/2+eps and 2/3-eps inside their types");
    if (g.third == g.twoThirds || g.third == g.half) throw std::invalid_argument("the 1/3 type is degenerate");
    g.beta = p.alpha(g.third);
    const int d = p.d();
    // side 1/(2M) tiles its small bins exactly and keeps the count in 64 bits for d = 3
    g.dustSide = Rat(1) / (Int(p.M()) * 2);
    const Rat two = pow_rat(Rat(2), d), three = pow_rat(Rat(3), d);
    const long nThird = (ipow(2, d) - 1) * N;
    auto dustCount = [&](const Rat& perN) {
        Int c = floor_int(perN * N / pow_rat(g.dustSide, d));
        if (!c.fits_slong_p()) throw std::overflow_error("dust count does not fit in 64 bits");
        return c.get_si();
    };
    g.first = {{third + g.eps, nThird}, {half + g.eps, N}, {g.dustSide, dustCount(1 - (two - 1) / three - 1 / two)}};
    g.second = {{third + g.eps, nThird}, {twoThirds - g.eps, N}, {g.dustSide, dustCount(1 - (2 * two - 1) / three)}};
    return g;
}

GenericRun simulate_generic(const ParameterSet& p, long N) {
    const auto t0 = std::chrono::steady_clock::now();
    const GenericInput g = generic_adversary(p, N);
    auto run = [&](const std::vector<std::pair<Rat, long>>& in) {
        Packer pk(p, {false});
        for (size_t k = 0; k + 1 < in.size(); ++k) pk.pack_many(in[k].first, in[k].second);
        pk.add_dust(in.back().first, in.back().second);
        return pk.stats().totalBins;
    };
    GenericRun r;
    r.bins1 = run(g.first);
    r.bins2 = run(g.second);
    r.ratio1 = static_cast<double>(r.bins1) / N;
    r.ratio2 = static_cast<double>(r.bins2) / N;
    r.bound1 = to_double(generic_first(p.d(), g.beta));
    r.bound2 = to_double(generic_second(p.d(), g.beta));
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace ehpack
