#ifndef WARING_PARAMPOLY_HPP
#define WARING_PARAMPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "waring/form.hpp"

namespace waring {

// A (not necessarily homogeneous) polynomial with rational coefficients in
// a small set of parameters. Used for symbolic catalecticant minors and
// their Nullstellensatz multipliers.
class ParamPoly {
 public:
  ParamPoly() : nvars_(0) {}
  explicit ParamPoly(int nvars) : nvars_(nvars) {}

  static ParamPoly constant(int nvars, const Rat& c);
  static ParamPoly monomial(int nvars, const Exponents& e, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial

  const std::map<Exponents, Rat, LexGreater>& terms() const { return terms_; }
  Rat coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rat& c);

  ParamPoly operator+(const ParamPoly& other) const;
  ParamPoly operator-(const ParamPoly& other) const;
  ParamPoly operator*(const ParamPoly& other) const;
  ParamPoly operator*(const Rat& c) const;
  ParamPoly& operator+=(const ParamPoly& other);
  bool operator==(const ParamPoly& other) const = default;

  Rat evaluate(const std::vector<Rat>& point) const;
  std::string str() const;  // parameters print as t0, t1, ...

 private:
  int nvars_;
  std::map<Exponents, Rat, LexGreater> terms_;
};

// Determinant of a square matrix of polynomials, by Laplace expansion with
// memoization on column subsets. Exponential in the dimension; meant for
// small matrices and as an independent cross-check of the structured minor
// computation in the construct module.
ParamPoly param_det(const std::vector<std::vector<ParamPoly>>& m);

}  // namespace waring

#endif
