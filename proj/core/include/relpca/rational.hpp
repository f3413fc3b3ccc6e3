#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace relpca {

// Exact rational scalar. All arithmetic in the library is over these;
// there are no tolerances anywhere, equality to zero is the only test.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with arbitrary-precision integer parts. Rejects
// anything else (floats, empty strings, zero denominators).
inline Rat rat_from_string(const std::string& s) {
  auto bad = [&]() { return std::invalid_argument("bad rational literal: " + s); };
  size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) throw bad();
  if (i < s.size()) {
    if (s[i] != '/') throw bad();
    ++i;
    digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
    if (digits == 0 || i != s.size()) throw bad();
  }
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    throw bad();
  }
}

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rat_to_string(const Rat& r) { return r.str(); }

}  // namespace relpca
