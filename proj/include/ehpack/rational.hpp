#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ehpack {

using Rat = mpq_class;
using Int = mpz_class;

// Accepts "p/q", integers and decimal literals such as "0.6475" or "-1.5".
// The value is exact. Throws std::invalid_argument on malformed text.
Rat parse_rat(std::string_view text);

// Canonical "p/q" (or "p" when q == 1).
// n/d in canonical form.
Rat frac(long n, long d);

std::string rat_str(const Rat& r);

double to_double(const Rat& r);
Int floor_int(const Rat& r);
Int ceil_int(const Rat& r);
Rat pow_rat(const Rat& r, int e);
long ipow(long b, int e);

// %.{sig}g formatting used for every decimal the tools print.
std::string fmt(double v, int sig = 15);
std::string fmt(const Rat& r, int sig = 15);

}  // namespace ehpack
