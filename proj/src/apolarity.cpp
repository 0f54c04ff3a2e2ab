#include "waring/apolarity.hpp"

#include <numeric>
#include <stdexcept>

namespace waring {

QMatrix catalecticant(const Form& f, int i) {
  const int n = f.nvars(), d = f.degree();
  if (i < 0 || i > d)
    throw std::invalid_argument("catalecticant: degree out of range");
  const auto row_basis = monomial_basis(n, i);
  const auto col_basis = monomial_basis(n, d - i);
  QMatrix m(row_basis.size(), col_basis.size());
  for (std::size_t r = 0; r < row_basis.size(); ++r) {
    const Exponents& a = row_basis[r];
    for (const auto& [e, c] : f.terms()) {
      Rat factor = 1;
      Exponents rest(n);
      bool vanishes = false;
      for (int v = 0; v < n; ++v) {
        if (e[v] < a[v]) {
          vanishes = true;
          break;
        }
        rest[v] = e[v] - a[v];
        for (int k = e[v]; k > rest[v]; --k) factor *= k;
      }
      if (vanishes) continue;
      m.at(r, monomial_index(rest)) += c * factor;
    }
  }
  return m;
}

long HilbertFunction::sum() const {
  return std::accumulate(values.begin(), values.end(), 0L);
}

HilbertFunction hilbert_function(const Form& f) {
  if (f.is_zero())
    throw std::invalid_argument("hilbert_function of the zero form");
  HilbertFunction h;
  h.values.reserve(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i)
    h.values.push_back(static_cast<long>(rank_of(catalecticant(f, i))));
  return h;
}

long apolar_length(const Form& f) {
  if (f.is_zero()) return 0;
  return hilbert_function(f).sum();
}

GradedPiece apolar_graded_piece(const Form& f, int i) {
  const int n = f.nvars(), d = f.degree();
  if (i < 0 || i > d + 1)
    throw std::invalid_argument("apolar_graded_piece: degree out of range");
  GradedPiece piece;
  piece.degree = i;
  if (i > d) {
    for (const Exponents& e : monomial_basis(n, i))
      piece.basis.push_back(Form::monomial(n, e));
    return piece;
  }
  // elements of T_i are row combinations, so the piece is the left kernel
  for (const auto& v : kernel_basis(catalecticant(f, i).transposed()))
    piece.basis.push_back(Form::from_coeff_vector(n, i, v));
  return piece;
}

std::vector<std::pair<int, Form>> minimal_generators(const Form& f,
                                                     int up_to) {
  const int n = f.nvars(), d = f.degree();
  if (up_to > d + 1)
    throw std::invalid_argument("minimal_generators: up_to > degree + 1");
  std::vector<std::pair<int, Form>> gens;
  std::vector<Form> prev_piece;  // (f^perp)_{i-1}
  for (int i = 0; i <= up_to; ++i) {
    const GradedPiece piece = apolar_graded_piece(f, i);
    // span of T_1 * (f^perp)_{i-1} inside T_i
    QMatrix span(0, graded_dim(n, i));
    for (const Form& g : prev_piece) {
      for (int v = 0; v < n; ++v) {
        Exponents ev(n);
        ev[v] = 1;
        span.append_row((Form::monomial(n, ev) * g).coeff_vector());
      }
    }
    RrefResult red = rref(span);
    std::size_t current_rank = red.rank;
    QMatrix stacked = std::move(red.reduced);
    for (const Form& cand : piece.basis) {
      stacked.append_row(cand.coeff_vector());
      const std::size_t new_rank = rank_of(stacked);
      if (new_rank > current_rank) {
        current_rank = new_rank;
        gens.emplace_back(i, cand);
      }
      // keep the row either way; the span only grows
    }
    prev_piece = piece.basis;
  }
  return gens;
}

GradedPiece colon_piece(const Form& f, const Form& theta, int i) {
  if (theta.is_zero())
    throw std::invalid_argument("colon_piece: theta must be nonzero");
  if (theta.degree() > f.degree())
    throw std::invalid_argument("colon_piece: theta degree exceeds form degree");
  const Form g = apply(theta, f);
  const int n = f.nvars();
  if (g.is_zero()) {
    GradedPiece piece;
    piece.degree = i;
    for (const Exponents& e : monomial_basis(n, i))
      piece.basis.push_back(Form::monomial(n, e));
    return piece;
  }
  if (i > g.degree() + 1) {
    GradedPiece piece;
    piece.degree = i;
    for (const Exponents& e : monomial_basis(n, i))
      piece.basis.push_back(Form::monomial(n, e));
    return piece;
  }
  return apolar_graded_piece(g, i);
}

long quotient_length(const Form& f, const Form& theta) {
  if (theta.is_zero())
    throw std::invalid_argument("quotient_length: theta must be nonzero");
  const Form g = apply(theta, f);
  return apolar_length(f) - apolar_length(g);
}

}  // namespace waring
