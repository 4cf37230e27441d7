#pragma once

#include <gmpxx.h>

#include <string>

namespace l1hom {

// Exact rational scalar. All arithmetic in this library is exact; there is
// no floating point anywhere in the core.
using Rat = mpq_class;

// Canonical string form "p/q" in lowest terms, sign on the numerator.
// The denominator is always printed, so integers read "4/1".
std::string rat_str(const Rat& q);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or
// a zero denominator.
Rat rat_parse(const std::string& s);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline int rat_sign(const Rat& q) { return sgn(q); }

}  // namespace l1hom
