#ifndef WARING_APOLARITY_HPP
#define WARING_APOLARITY_HPP

#include <utility>
#include <vector>

#include "waring/form.hpp"
#include "waring/qmatrix.hpp"

namespace waring {

// Matrix of the pairing T_i -> S_{d-i}, theta |-> theta o f. Rows are
// indexed by monomial_basis(n, i), columns by monomial_basis(n, d-i);
// its rank is the Hilbert function value h_i of the apolar algebra.
QMatrix catalecticant(const Form& f, int i);

struct HilbertFunction {
  std::vector<long> values;  // h_0 .. h_d

  long sum() const;
  bool operator==(const HilbertFunction& other) const = default;
};

HilbertFunction hilbert_function(const Form& f);  // throws on the zero form

// dim Diff(f); 0 for the zero form.
long apolar_length(const Form& f);

struct GradedPiece {
  int degree = 0;
  std::vector<Form> basis;  // forms in T, echelonized

  std::size_t dim() const { return basis.size(); }
};

// Basis of the degree-i graded piece of the apolar ideal of f, i.e. the
// kernel of catalecticant(f, i). Valid for 0 <= i <= d+1; at d+1 the
// piece is all of T_{d+1}.
GradedPiece apolar_graded_piece(const Form& f, int i);

// Minimal generators of the apolar ideal in degrees <= up_to, computed
// degreewise against products with T_1.
std::vector<std::pair<int, Form>> minimal_generators(const Form& f, int up_to);

// ((theta o f)^perp)_i, the degree-i piece of the colon ideal
// f^perp : theta. When theta o f = 0 this is all of T_i.
GradedPiece colon_piece(const Form& f, const Form& theta, int i);

// length(T / (f^perp + theta)) = al(f) - al(theta o f)
long quotient_length(const Form& f, const Form& theta);

}  // namespace waring

#endif
