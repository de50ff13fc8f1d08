#pragma once

#include <gmpxx.h>

#include <string>

#include "cremona/error.hpp"

namespace cremona {

/// Exact rational scalar. All class arithmetic is done in Rat; floating
/// point appears only in display helpers.
using Rat = mpq_class;

/// Canonical "p/q" (or "p" when the denominator is 1) representation.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

/// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed input.
inline Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  mpq_class value;
  if (value.set_str(text, 10) != 0)
    throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
  if (value.get_den() == 0)
    throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  value.canonicalize();
  return value;
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

}  // namespace cremona
