#ifndef WARING_DECOMPOSE_HPP
#define WARING_DECOMPOSE_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/certificate.hpp"
#include "waring/form.hpp"

namespace waring {

// A power-sum expression for a form. Exact decompositions carry rational
// data and certify rank upper bounds; numerical ones are evidence only and
// can never enter a bound certificate. Numerical points live over the
// complex numbers, the field the rank is defined over; real values
// serialize as plain numbers and complex ones as [re, im] pairs.
struct Decomposition {
  int degree = 0;
  bool exact = true;
  using Complex = std::complex<double>;
  std::vector<std::pair<Rat, std::vector<Rat>>> terms;           // exact
  std::vector<std::pair<Complex, std::vector<Complex>>> fterms;  // numerical

  std::size_t size() const { return exact ? terms.size() : fterms.size(); }
  Json to_json() const;
  static Decomposition from_json(const Json& j);
};

// True iff the exact expansion matches f. Points must be pairwise
// non-proportional (a reduced witness); proportional points are an error.
bool verify_decomposition(const Form& f, const Decomposition& dec);

// gcd(f, f') is constant in both affine charts.
bool squarefree_binary(const Form& f);

struct BinaryRankResult {
  long rank = 0;
  std::vector<std::pair<int, Form>> generators;  // the two minimal generators
  std::optional<Decomposition> witness;  // when rational points exist
};

// Sylvester's algorithm: rank = deg phi_1 when the first minimal generator
// is squarefree, else deg phi_2. A witness decomposition is returned when a
// squarefree generator with rational roots is found.
BinaryRankResult binary_rank(const Form& f);

// Example-2.7 rule: when f^perp is a complete intersection generated in
// degrees d_1 <= ... <= d_n with d_1 = 2 and a rank-one quadric among the
// degree-2 piece, the rank is exactly d_2 * ... * d_n.
std::optional<std::pair<long, std::vector<int>>> ci_rank(const Form& f);

struct NumericalFit {
  double residual = 0;  // relative to the coefficient norm of f
  Decomposition dec;    // exact = false
};

// Alternating fit of r d-th powers over the complex numbers: exact linear
// solves for the scalars, damped Gauss-Newton steps on the points, over
// seeded restarts. Steps are only accepted when they lower the residual,
// so the residual never increases within a restart.
NumericalFit numerical_decompose(const Form& f, int r, double tol,
                                 std::uint64_t rng_seed, int restarts);

}  // namespace waring

#endif
