#include "waring/parampoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace waring {

ParamPoly ParamPoly::constant(int nvars, const Rat& c) {
  ParamPoly p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

ParamPoly ParamPoly::monomial(int nvars, const Exponents& e, const Rat& c) {
  ParamPoly p(nvars);
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("ParamPoly::monomial: wrong arity");
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

int ParamPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

Rat ParamPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ParamPoly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& other) const {
  ParamPoly p = *this;
  p += other;
  return p;
}

ParamPoly ParamPoly::operator-(const ParamPoly& other) const {
  return *this + other * Rat(-1);
}

ParamPoly ParamPoly::operator*(const ParamPoly& other) const {
  ParamPoly p(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

ParamPoly ParamPoly::operator*(const Rat& c) const {
  ParamPoly p(nvars_);
  if (c == 0) return p;
  for (const auto& [e, coef] : terms_) p.terms_.emplace(e, coef * c);
  return p;
}

Rat ParamPoly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("ParamPoly::evaluate: wrong arity");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    const bool constant = std::accumulate(e.begin(), e.end(), 0) == 0;
    if (mag != 1 || constant) {
      os << rat_str(mag);
      if (!constant) os << "*";
    }
    bool leading = true;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!leading) os << "*";
      leading = false;
      os << "t" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

ParamPoly param_det(const std::vector<std::vector<ParamPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("param_det: empty matrix");
  if (n > 20) throw std::invalid_argument("param_det: matrix too large");
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("param_det: non-square matrix");
  const int params = m[0][0].nvars();

  // D(row, S): determinant of rows row.. over the column set S
  std::unordered_map<unsigned, ParamPoly> memo;
  auto rec = [&](auto&& self, std::size_t row, unsigned cols) -> ParamPoly {
    if (row == n) return ParamPoly::constant(params, 1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    ParamPoly det(params);
    int sign = 1;  // alternates over active columns only
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      if (!m[row][c].is_zero()) {
        const ParamPoly sub = self(self, row + 1, cols & ~(1u << c));
        det += m[row][c] * sub * Rat(sign);
      }
      sign = -sign;
    }
    memo.emplace(cols, det);
    return det;
  };
  return rec(rec, 0, (n >= 32 ? ~0u : (1u << n) - 1u));
}

}  // namespace waring

