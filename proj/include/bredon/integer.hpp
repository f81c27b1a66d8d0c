#pragma once

#include <gmpxx.h>

#include <string>

namespace bredon {

/// Arbitrary-precision integer.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace bredon
