#include "ehpack/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace ehpack {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    Rat r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        Int den(std::string(q), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        r = Rat(Int(std::string(p), 10), den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        std::string digits = std::string(ip) + std::string(fp);
        Int den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        r = Rat(Int(digits.empty() ? std::string("0") : digits, 10), den);
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        r = Rat(Int(std::string(s), 10));
    }
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

Rat frac(long n, long d) {
    Rat r{Int(n), Int(d)};
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

double to_double(const Rat& r) { return r.get_d(); }

Int floor_int(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int ceil_int(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rat pow_rat(const Rat& r, int e) {
    Rat out(1);
    for (int k = 0; k < e; ++k) out *= r;
    return out;
}

long ipow(long b, int e) {
    long out = 1;
    for (int k = 0; k < e; ++k) out *= b;
    return out;
}

std::string fmt(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

std::string fmt(const Rat& r, int sig) { return fmt(r.get_d(), sig); }

}  // namespace ehpack
