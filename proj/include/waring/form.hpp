#ifndef WARING_FORM_HPP
#define WARING_FORM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

using Exponents = std::vector<int>;

// Descending lexicographic order on exponent vectors. Within one graded
// piece this is graded-lex, the global monomial order of the project.
struct LexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return a > b;
  }
};

// All exponent vectors of the given total degree, in graded-lex order.
std::vector<Exponents> monomial_basis(int nvars, int degree);

// Index of an exponent vector within monomial_basis(nvars, sum(e)).
std::size_t monomial_index(const Exponents& e);

std::string monomial_str(const Exponents& e, bool dual);

// A homogeneous polynomial with exact rational coefficients. The same
// representation serves the ring S and its dual T; context decides which
// ring an instance lives in. Zero coefficients are never stored, and the
// zero form keeps an explicit degree.
class Form {
 public:
  Form() : nvars_(0), degree_(0) {}
  Form(int nvars, int degree);

  static Form monomial(int nvars, const Exponents& e, const Rat& c = Rat(1));
  static Form from_coeff_vector(int nvars, int degree,
                                const std::vector<Rat>& coeffs);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const std::map<Exponents, Rat, LexGreater>& terms() const { return terms_; }

  Rat coeff(const Exponents& e) const;
  void set_coeff(const Exponents& e, const Rat& c);

  // coefficients over monomial_basis(nvars, degree), in order
  std::vector<Rat> coeff_vector() const;

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form operator+(const Form& other) const;
  Form operator-(const Form& other) const;
  Form operator-() const;
  Form operator*(const Rat& c) const;
  Form operator*(const Form& other) const;  // product, degrees add
  bool operator==(const Form& other) const = default;

  Rat evaluate(const std::vector<Rat>& point) const;

  // Extend or restrict the variable set. extended(n, at) inserts zero
  // exponents so old variable i becomes i (i < at) or i+1 (i >= at);
  // restricted drops a variable that appears in no term.
  Form extended(int new_nvars, int insert_at) const;
  Form restricted(int drop_var) const;

  std::string str(bool dual = false) const;

 private:
  int nvars_, degree_;
  std::map<Exponents, Rat, LexGreater> terms_;
};

Form operator*(const Rat& c, const Form& f);

// A linear form given by its coefficient vector.
struct LinearForm {
  std::vector<Rat> coeffs;

  LinearForm() = default;
  explicit LinearForm(std::vector<Rat> c) : coeffs(std::move(c)) {}

  int nvars() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  Form to_form() const;
  Form power(int d) const;  // exact multinomial expansion
};

// The apolarity action: every dual variable acts as the partial derivative
// with respect to the matching variable, without normalization, so e.g.
// apply(a^2*b^2, x^4*y^5) = 240*x^2*y^3. When theta.degree > f.degree the
// result is the zero form of degree 0, by convention.
Form apply(const Form& theta, const Form& f);

Form power_sum(const std::vector<std::pair<Rat, LinearForm>>& terms, int d);

// Grammar: terms joined by + or -; a term is an optional rational
// coefficient and *-separated var^exp factors. Variables are x,y,z,w for
// n <= 4, or x0..x{n-1}; dual variables a,b,c,d or a0.. are accepted and
// mapped positionally. expected_degree fixes the degree of a zero form
// ("0"); nonzero input must match it when it is >= 0.
Form parse_form(const std::string& text, int nvars, int expected_degree = -1);

}  // namespace waring

#endif
