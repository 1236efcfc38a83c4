#pragma once

#include <gmpxx.h>

#include <string>

#include "triag/errors.hpp"

namespace triag {

// Exact rational scalar. All arithmetic in the engine is over Q; there is
// no floating point on any verification path.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q" with arbitrary-precision parts.
Rat rat_from_string(const std::string& s);

// q^e for integer e; e < 0 requires q != 0.
Rat rat_pow(const Rat& q, long e);

inline bool rat_is_int(const Rat& q) { return q.get_den() == 1; }

} // namespace triag
