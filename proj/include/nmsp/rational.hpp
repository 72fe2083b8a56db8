#ifndef NMSP_RATIONAL_HPP
#define NMSP_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nmsp {

// Exact rational numbers. All arithmetic in the engine is exact; there is
// deliberately no floating-point mode.
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SpecError : Error {
  using Error::Error;
};
struct SingularValue : Error {
  using Error::Error;
};
struct OracleMissing : Error {
  using Error::Error;
};
struct UnsupportedGraph : Error {
  using Error::Error;
};

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a", "a/b", or "-a/b" with arbitrary-precision integers.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw SpecError("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline long rat_to_long(const Rat& r) {
  if (r.get_den() != 1) throw Error("expected integer, got " + to_string(r));
  if (!r.get_num().fits_slint_p()) throw Error("integer overflow: " + to_string(r));
  return r.get_num().get_si();
}

}  // namespace nmsp

#endif
