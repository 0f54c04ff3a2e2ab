#ifndef WARING_RATIONAL_HPP
#define WARING_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace waring {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" or "p"; denominator must be positive after canonicalization.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0 || s.find_first_of(".eE") != std::string::npos)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) {
  return r.get_str();
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  if (!b.fits_slong_p()) throw std::overflow_error("binomial overflow");
  return b.get_si();
}

// dim of the degree-d graded piece of a polynomial ring in n variables
inline long graded_dim(int nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars <= 0) return degree == 0 ? 1 : 0;
  return binomial(nvars + degree - 1, nvars - 1);
}

}  // namespace waring

#endif
