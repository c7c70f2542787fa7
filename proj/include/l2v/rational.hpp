#pragma once

#include <gmpxx.h>

#include <string>

namespace l2v {

/// Exact rational scalar. Backed by GMP; always kept in canonical form
/// (coprime numerator/denominator, positive denominator).
using Rat = mpq_class;

/// Parse "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat rat_parse(const std::string& s);

/// Canonical rendering: "p" for integers, "p/q" otherwise ("-3/2", "0", "7").
std::string rat_str(const Rat& r);

inline Rat rat_int(long v) { return Rat(v); }

} // namespace l2v
