#include "ehpack/params.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tables.hpp"

namespace ehpack {

namespace {

struct RowSpec {
    const char* upper;
    int beta, gamma, phi;
    const char* alpha;
};

ParameterSet assemble(int d, int M, const std::vector<RowSpec>& rows, const std::vector<const char*>& Delta,
                      std::string label) {
    ParameterSet p;
    const int N = static_cast<int>(rows.size());
    p.label = std::move(label);
    p.intervals.d = d;
    p.intervals.N = N;
    p.intervals.M = M;
    p.intervals.t.assign(N + 2, Rat(0));
    p.rb.alpha.assign(N + 1, Rat(0));
    p.rb.beta.assign(N + 1, 0);
    p.rb.gamma.assign(N + 1, 0);
    p.rb.phi.assign(N + 1, 0);
    for (int i = 1; i <= N; ++i) {
        const auto& r = rows[i - 1];
        p.intervals.t[i] = parse_rat(r.upper);
        p.rb.beta[i] = r.beta;
        p.rb.gamma[i] = r.gamma;
        p.rb.phi[i] = r.phi;
        p.rb.alpha[i] = parse_rat(r.alpha);
    }
    p.intervals.t[N + 1] = Rat(1, M);
    p.rb.Delta.assign(1, Rat(0));
    for (const char* s : Delta) p.rb.Delta.push_back(parse_rat(s));
    return p;
}

}  // namespace

ParameterSet builtin_paper_params(int d, BetaVariant variant) {
    if (d != 2 && d != 3) throw std::invalid_argument("built-in set exists for d=2 and d=3 only");
    std::vector<RowSpec> rows;
    const char* const* alpha = d == 2 ? tables::kBaseAlpha2 : tables::kBaseAlpha3;
    for (int i = 1; i <= 151; ++i) {
        const auto& r = tables::kBaseRows[i - 1];
        rows.push_back({r.upper, r.beta, r.gamma, r.phi, i >= 19 ? alpha[i - 19] : "0"});
    }
    if (variant == BetaVariant::Corrected) {
        // Two rows of the printed beta column disagree with floor(1/t_i).
        rows[133].beta = 93;
        rows[139].beta = 99;
    }
    std::vector<const char*> Delta(tables::kBaseDelta, tables::kBaseDelta + 16);
    std::string label = "paper" + std::to_string(d);
    if (variant == BetaVariant::Corrected) label += "/corrected";
    ParameterSet p = assemble(d, 111, rows, Delta, label);
    const char* const* w = d == 2 ? tables::kBaseW2 : tables::kBaseW3;
    std::map<int, Rat> caseW;
    for (int c = 2; c <= 16; ++c) caseW[c] = parse_rat(w[c - 2]);
    p.derived = derive(p.intervals, p.rb, caseW);
    return p;
}

ParameterSet builtin_prior_params() {
    const std::vector<RowSpec> rows = {
        {"1", 1, 0, 0, "0"},           {"0.705", 1, 0, 2, "0"},     {"0.6475", 1, 0, 3, "0"},
        {"0.6", 1, 0, 4, "0"},         {"0.5", 2, 0, 0, "0"},       {"0.4", 2, 1, 1, "0.1348"},
        {"0.3525", 2, 1, 2, "0.2"},    {"1/3", 3, 0, 0, "0"},       {"0.295", 3, 1, 0, "0.3096"},
        {"1/4", 4, 1, 0, "0.2248"},    {"1/5", 5, 1, 0, "0.16"},    {"1/6", 6, 1, 0, "0.13"},
        {"1/7", 7, 1, 0, "0.1"},       {"1/8", 8, 1, 0, "0.1"},     {"1/9", 9, 1, 0, "0.1"},
        {"0.1", 10, 2, 0, "0.05"},
    };
    ParameterSet p = assemble(2, 11, rows, {"0.2", "0.295", "0.3525", "0.4"}, "prior2");
    p.derived = derive(p.intervals, p.rb);
    return p;
}

ParameterSet builtin_example_params() {
    // The printed alpha column lists 1 for types 1..4; those types cannot be red, so alpha is 0.
    const std::vector<RowSpec> rows = {
        {"1", 1, 0, 0, "0"},   {"0.7", 1, 0, 1, "0"}, {"2/3", 1, 0, 2, "0"},
        {"1/2", 2, 0, 0, "0"}, {"1/3", 3, 1, 0, "0.4"}, {"0.3", 3, 1, 0, "0.4"},
    };
    ParameterSet p = assemble(2, 10, rows, {"0.3", "1/3"}, "example2");
    p.derived = derive(p.intervals, p.rb);
    return p;
}

ParameterSet params_by_name(const std::string& name, BetaVariant variant) {
    if (name == "paper2") return builtin_paper_params(2, variant);
    if (name == "paper3") return builtin_paper_params(3, variant);
    if (name == "prior2") return builtin_prior_params();
    if (name == "example2") return builtin_example_params();
    return load_params(name);
}

DerivedParams derive(const IntervalTable& intervals, const RedBlueConfig& rb, const std::map<int, Rat>& caseW) {
    DerivedParams out;
    const int N = intervals.N;
    out.delta.assign(N + 1, Rat(0));
    out.theta.assign(N + 1, 0);
    for (int i = 1; i <= N; ++i) {
        int f = rb.phi[i];
        if (f > 0 && f <= rb.k()) out.delta[i] = rb.Delta[f];
        long b = rb.beta[i], g = rb.gamma[i];
        out.theta[i] = ipow(b, intervals.d) - ipow(b - g, intervals.d);
    }
    out.caseW = caseW;
    return out;
}

std::vector<Violation> validate(const ParameterSet& p) {
    std::vector<Violation> v;
    auto add = [&](int i, const char* rule, std::string detail) { v.push_back({i, rule, std::move(detail)}); };
    const int N = p.N();
    const auto& t = p.intervals.t;
    const auto& rb = p.rb;
    if (p.d() < 2) add(0, "dimension", "d must be at least 2");
    if (N < 1 || p.M() < 1) {
        add(0, "size", "N and M must be positive");
        return v;
    }
    if (static_cast<int>(t.size()) != N + 2 || static_cast<int>(rb.alpha.size()) != N + 1 ||
        static_cast<int>(rb.beta.size()) != N + 1 || static_cast<int>(rb.gamma.size()) != N + 1 ||
        static_cast<int>(rb.phi.size()) != N + 1 || rb.Delta.empty()) {
        add(0, "size", "per-type arrays do not match N");
        return v;
    }
    if (t[1] != 1) add(1, "endpoints", "t_1 must be 1");
    if (t[N + 1] != Rat(1, p.M())) add(N + 1, "endpoints", "t_{N+1} must be 1/M");
    for (int i = 1; i <= N; ++i)
        if (!(t[i] > t[i + 1])) add(i, "monotonicity", "t_" + std::to_string(i) + " <= t_" + std::to_string(i + 1));

    const int k = rb.k();
    for (int j = 1; j <= k; ++j) {
        if (rb.Delta[j] <= rb.Delta[j - 1]) add(0, "delta-order", "Delta_" + std::to_string(j) + " not increasing");
        if (rb.Delta[j] >= Rat(1, 2)) add(0, "delta-range", "Delta_" + std::to_string(j) + " >= 1/2");
    }
    const Rat DeltaK = k > 0 ? rb.Delta[k] : Rat(0);
    for (int i = 1; i <= N; ++i) {
        const std::string ti = rat_str(t[i]);
        if (rb.alpha[i] < 0 || rb.alpha[i] > 1) add(i, "alpha-range", "alpha outside [0,1]");
        if (rb.beta[i] < 1) {
            add(i, "beta-positive", "beta must be positive");
            continue;
        }
        if (rb.phi[i] < 0 || rb.phi[i] > k) {
            add(i, "phi-range", "phi outside 0.." + std::to_string(k));
        } else if (rb.phi[i] > 0 && rb.Delta[rb.phi[i]] > 1 - rb.beta[i] * t[i]) {
            add(i, "admissibility", "Delta_phi = " + rat_str(rb.Delta[rb.phi[i]]) + " > 1 - beta*t = " +
                                        rat_str(Rat(1 - rb.beta[i] * t[i])));
        }
        if (t[i] > DeltaK && rb.alpha[i] != 0) add(i, "alpha-zero", "t_i > Delta_k but alpha != 0");
        Int fl = floor_int(Rat(1 / t[i]));
        if (fl != rb.beta[i])
            add(i, "beta-floor", "beta = " + std::to_string(rb.beta[i]) + ", floor(1/t_i) = " + fl.get_str());
        int expect = 0;
        if (t[i] <= DeltaK && k > 0) {
            Int g = floor_int(Rat(rb.Delta[1] / t[i]));
            expect = g < 1 ? 1 : static_cast<int>(g.get_si());
        }
        // A type that is never colored red needs no red capacity.
        bool exempt = rb.gamma[i] == 0 && rb.alpha[i] == 0;
        if (rb.gamma[i] != expect && !exempt)
            add(i, "gamma-rule", "gamma = " + std::to_string(rb.gamma[i]) + ", expected " + std::to_string(expect));
        if (rb.gamma[i] < 0 || rb.gamma[i] > rb.beta[i]) add(i, "gamma-range", "gamma outside 0..beta");
        if (rb.alpha[i] > 0 && (i >= static_cast<int>(p.derived.theta.size()) || p.derived.theta[i] < 1))
            add(i, "red-capacity", "alpha > 0 but theta = 0");
    }
    for (const auto& [c, w] : p.derived.caseW)
        if (w < 0 || w > 1) add(0, "w-range", "w for case " + std::to_string(c) + " outside [0,1]");
    return v;
}

std::string params_to_text(const ParameterSet& p) {
    std::ostringstream os;
    const int N = p.N();
    os << "[meta]\n";
    os << "label " << p.label << "\n";
    os << "d " << p.d() << "\nN " << N << "\nM " << p.M() << "\n";
    os << "[intervals]\n# i  t_i  beta  gamma   (t_{N+1} = 1/M)\n";
    for (int i = 1; i <= N; ++i)
        os << i << " " << rat_str(p.t(i)) << " " << p.beta(i) << " " << p.gamma(i) << "\n";
    os << "[alpha]\n";
    for (int i = 1; i <= N; ++i) os << i << " " << rat_str(p.alpha(i)) << "\n";
    os << "[delta]\n";
    for (int j = 1; j <= p.rb.k(); ++j) os << j << " " << rat_str(p.rb.Delta[j]) << "\n";
    os << "[phi]\n";
    for (int i = 1; i <= N; ++i) os << i << " " << p.phi(i) << "\n";
    os << "[w]\n";
    for (const auto& [c, w] : p.derived.caseW) os << c << " " << rat_str(w) << "\n";
    return os.str();
}

namespace {

int parse_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + s + "'");
    }
}

Rat parse_field(const std::string& s, int line) {
    try {
        return parse_rat(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

}  // namespace

ParameterSet params_from_text(const std::string& text) {
    ParameterSet p;
    std::istringstream in(text);
    std::string raw, section;
    int line = 0, N = -1;
    struct Entry {
        int line;
        std::vector<std::string> f;
    };
    std::map<std::string, std::vector<Entry>> sec;
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ls(raw);
        std::vector<std::string> f;
        for (std::string tok; ls >> tok;) f.push_back(tok);
        if (f.empty()) continue;
        if (f[0].front() == '[') {
            if (f.size() != 1 || f[0].back() != ']') throw ParseError(line, "bad section header");
            section = f[0].substr(1, f[0].size() - 2);
            static const char* known[] = {"meta", "intervals", "alpha", "delta", "phi", "w"};
            bool ok = false;
            for (auto* k : known) ok = ok || section == k;
            if (!ok) throw ParseError(line, "unknown section [" + section + "]");
            continue;
        }
        if (section.empty()) throw ParseError(line, "record outside any section");
        if (section == "meta") {
            if (f[0] == "label") {
                auto pos = raw.find("label") + 5;
                auto s = raw.substr(pos);
                s.erase(0, s.find_first_not_of(" \t"));
                s.erase(s.find_last_not_of(" \t\r") + 1);
                p.label = s;
            } else if (f.size() == 2 && (f[0] == "d" || f[0] == "N" || f[0] == "M")) {
                int v = parse_int(f[1], line);
                if (f[0] == "d") p.intervals.d = v;
                if (f[0] == "N") N = v;
                if (f[0] == "M") p.intervals.M = v;
            } else {
                throw ParseError(line, "unknown meta key '" + f[0] + "'");
            }
            continue;
        }
        sec[section].push_back({line, f});
    }
    if (N < 1) throw ParseError(line, "missing or invalid N in [meta]");
    if (p.intervals.M < 1) throw ParseError(line, "missing or invalid M in [meta]");
    p.intervals.N = N;
    p.intervals.t.assign(N + 2, Rat(0));
    p.intervals.t[N + 1] = Rat(1, p.intervals.M);
    p.rb.alpha.assign(N + 1, Rat(0));
    p.rb.beta.assign(N + 1, 0);
    p.rb.gamma.assign(N + 1, 0);
    p.rb.phi.assign(N + 1, 0);
    auto index = [&](const Entry& e, int lo, int hi) {
        int i = parse_int(e.f[0], e.line);
        if (i < lo || i > hi) throw ParseError(e.line, "index " + e.f[0] + " out of range");
        return i;
    };
    std::vector<bool> seen(N + 1, false);
    for (const auto& e : sec["intervals"]) {
        if (e.f.size() != 4) throw ParseError(e.line, "expected 'i t_i beta gamma'");
        int i = index(e, 1, N);
        seen[i] = true;
        p.intervals.t[i] = parse_field(e.f[1], e.line);
        p.rb.beta[i] = parse_int(e.f[2], e.line);
        p.rb.gamma[i] = parse_int(e.f[3], e.line);
    }
    for (int i = 1; i <= N; ++i)
        if (!seen[i]) throw ParseError(line, "type " + std::to_string(i) + " missing from [intervals]");
    for (const auto& e : sec["alpha"]) {
        if (e.f.size() != 2) throw ParseError(e.line, "expected 'i alpha_i'");
        p.rb.alpha[index(e, 1, N)] = parse_field(e.f[1], e.line);
    }
    std::map<int, Rat> Delta;
    for (const auto& e : sec["delta"]) {
        if (e.f.size() != 2) throw ParseError(e.line, "expected 'j Delta_j'");
        Delta[index(e, 1, 1 << 20)] = parse_field(e.f[1], e.line);
    }
    p.rb.Delta.assign(1, Rat(0));
    for (const auto& [j, v] : Delta) {
        if (j != static_cast<int>(p.rb.Delta.size())) throw ParseError(line, "[delta] indices must be 1..k");
        p.rb.Delta.push_back(v);
    }
    for (const auto& e : sec["phi"]) {
        if (e.f.size() != 2) throw ParseError(e.line, "expected 'i phi_i'");
        p.rb.phi[index(e, 1, N)] = parse_int(e.f[1], e.line);
    }
    std::map<int, Rat> caseW;
    for (const auto& e : sec["w"]) {
        if (e.f.size() != 2) throw ParseError(e.line, "expected 'case w'");
        caseW[index(e, 2, 16)] = parse_field(e.f[1], e.line);
    }
    p.derived = derive(p.intervals, p.rb, caseW);
    return p;
}

void save_params(const ParameterSet& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << params_to_text(p);
}

ParameterSet load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return params_from_text(ss.str());
}

}  // namespace ehpack
