#pragma once

#include <gmpxx.h>

#include <string>

namespace jordanlab {

// Exact rational scalar used everywhere in the core; no floating point.
using Rat = mpq_class;

inline bool rat_is_zero(const Rat& r) { return mpq_sgn(r.get_mpq_t()) == 0; }

// mpq_class(num, den) keeps the fraction as written; this always reduces.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parses "p" or "p/q" in base 10. Returns false on malformed input.
bool rat_parse(const std::string& text, Rat& out);

}  // namespace jordanlab
