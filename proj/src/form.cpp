#include "waring/form.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace waring {

namespace {

void gen_basis(int nvars, int degree, int pos, Exponents& cur,
               std::vector<Exponents>& out) {
  if (pos == nvars - 1) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    gen_basis(nvars, degree - e, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Exponents> monomial_basis(int nvars, int degree) {
  if (nvars < 1) throw std::invalid_argument("monomial_basis: nvars < 1");
  if (degree < 0) return {};
  std::vector<Exponents> out;
  out.reserve(static_cast<std::size_t>(graded_dim(nvars, degree)));
  Exponents cur(nvars);
  gen_basis(nvars, degree, 0, cur, out);
  return out;
}

std::size_t monomial_index(const Exponents& e) {
  // count monomials of the same degree that precede e in graded-lex order
  const int n = static_cast<int>(e.size());
  int remaining = std::accumulate(e.begin(), e.end(), 0);
  std::size_t index = 0;
  for (int i = 0; i + 1 < n; ++i) {
    for (int larger = remaining; larger > e[i]; --larger)
      index += static_cast<std::size_t>(graded_dim(n - i - 1, remaining - larger));
    remaining -= e[i];
  }
  return index;
}

std::string monomial_str(const Exponents& e, bool dual) {
  static const char* roman[4] = {"x", "y", "z", "w"};
  static const char* greek[4] = {"a", "b", "c", "d"};
  const int n = static_cast<int>(e.size());
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    if (n <= 4)
      os << (dual ? greek[i] : roman[i]);
    else
      os << (dual ? "a" : "x") << i;
    if (e[i] > 1) os << "^" << e[i];
  }
  if (first) os << "1";
  return os.str();
}

Form::Form(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1) throw std::invalid_argument("Form: nvars < 1");
  if (degree < 0) throw std::invalid_argument("Form: negative degree");
}

Form Form::monomial(int nvars, const Exponents& e, const Rat& c) {
  Form f(nvars, std::accumulate(e.begin(), e.end(), 0));
  f.set_coeff(e, c);
  return f;
}

Form Form::from_coeff_vector(int nvars, int degree,
                             const std::vector<Rat>& coeffs) {
  const auto basis = monomial_basis(nvars, degree);
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("from_coeff_vector: wrong length");
  Form f(nvars, degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) f.terms_.emplace(basis[i], coeffs[i]);
  return f;
}

Rat Form::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Form::set_coeff(const Exponents& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("set_coeff: wrong number of variables");
  if (std::accumulate(e.begin(), e.end(), 0) != degree_ ||
      *std::min_element(e.begin(), e.end()) < 0)
    throw std::invalid_argument("set_coeff: exponents do not match degree");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

std::vector<Rat> Form::coeff_vector() const {
  const auto basis = monomial_basis(nvars_, degree_);
  std::vector<Rat> out(basis.size());
  for (const auto& [e, c] : terms_) out[monomial_index(e)] = c;
  return out;
}

Form& Form::operator+=(const Form& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && nvars_ == other.nvars_) degree_ = other.degree_;
  if (nvars_ != other.nvars_ || degree_ != other.degree_)
    throw std::invalid_argument("form addition: shape mismatch");
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Form& Form::operator-=(const Form& other) { return *this += -other; }

Form Form::operator+(const Form& other) const {
  Form f = *this;
  f += other;
  return f;
}

Form Form::operator-(const Form& other) const {
  Form f = *this;
  f -= other;
  return f;
}

Form Form::operator-() const {
  Form f(nvars_, degree_);
  for (const auto& [e, c] : terms_) f.terms_.emplace(e, -c);
  return f;
}

Form Form::operator*(const Rat& c) const {
  Form f(nvars_, degree_);
  if (c == 0) return f;
  for (const auto& [e, coef] : terms_) f.terms_.emplace(e, coef * c);
  return f;
}

Form operator*(const Rat& c, const Form& f) { return f * c; }

Form Form::operator*(const Form& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("form product: nvars mismatch");
  Form out(nvars_, degree_ + other.degree_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.emplace(std::move(e), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Rat Form::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluate: wrong point dimension");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

Form Form::extended(int new_nvars, int insert_at) const {
  if (new_nvars < nvars_ || insert_at < 0 || insert_at > new_nvars)
    throw std::invalid_argument("extended: bad target shape");
  const int added = new_nvars - nvars_;
  Form out(new_nvars, degree_);
  for (const auto& [e, c] : terms_) {
    Exponents ext(e);
    ext.insert(ext.begin() + insert_at, added, 0);
    out.terms_.emplace(std::move(ext), c);
  }
  return out;
}

Form Form::restricted(int drop_var) const {
  if (drop_var < 0 || drop_var >= nvars_)
    throw std::invalid_argument("restricted: variable out of range");
  Form out(nvars_ - 1, degree_);
  for (const auto& [e, c] : terms_) {
    if (e[drop_var] != 0)
      throw std::invalid_argument("restricted: variable occurs in the form");
    Exponents red(e);
    red.erase(red.begin() + drop_var);
    out.terms_.emplace(std::move(red), c);
  }
  return out;
}

std::string Form::str(bool dual) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const bool constant_term =
        std::accumulate(e.begin(), e.end(), 0) == 0;
    if (mag != 1 || constant_term) {
      os << rat_str(mag);
      if (!constant_term) os << "*";
    }
    if (!constant_term) os << monomial_str(e, dual);
  }
  return os.str();
}

bool LinearForm::is_zero() const {
  for (const Rat& c : coeffs)
    if (c != 0) return false;
  return true;
}

Form LinearForm::to_form() const {
  Form f(nvars(), 1);
  for (int i = 0; i < nvars(); ++i) {
    if (coeffs[i] == 0) continue;
    Exponents e(nvars());
    e[i] = 1;
    f.set_coeff(e, coeffs[i]);
  }
  return f;
}

Form LinearForm::power(int d) const {
  if (d < 0) throw std::invalid_argument("power: negative degree");
  Form out(nvars(), d);
  for (const Exponents& e : monomial_basis(nvars(), d)) {
    Rat c = 1;
    mpz_class multinom = 1;
    int used = 0;
    bool zero = false;
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      if (coeffs[i] == 0) {
        zero = true;
        break;
      }
      mpz_class part;
      mpz_bin_uiui(part.get_mpz_t(), static_cast<unsigned long>(used + e[i]),
                   static_cast<unsigned long>(e[i]));
      multinom *= part;
      used += e[i];
      for (int k = 0; k < e[i]; ++k) c *= coeffs[i];
    }
    if (zero || c == 0) continue;
    out.set_coeff(e, c * Rat(multinom));
  }
  return out;
}

Form apply(const Form& theta, const Form& f) {
  if (theta.nvars() != f.nvars())
    throw std::invalid_argument("apply: nvars mismatch");
  if (theta.degree() > f.degree()) return Form(f.nvars(), 0);
  Form out(f.nvars(), f.degree() - theta.degree());
  const int n = f.nvars();
  for (const auto& [a, ca] : theta.terms()) {
    for (const auto& [e, ce] : f.terms()) {
      Rat factor = 1;
      Exponents rest(n);
      bool vanishes = false;
      for (int i = 0; i < n; ++i) {
        if (e[i] < a[i]) {
          vanishes = true;
          break;
        }
        rest[i] = e[i] - a[i];
        for (int k = e[i]; k > rest[i]; --k) factor *= k;  // falling factorial
      }
      if (vanishes) continue;
      out.set_coeff(rest, out.coeff(rest) + ca * ce * factor);
    }
  }
  return out;
}

Form power_sum(const std::vector<std::pair<Rat, LinearForm>>& terms, int d) {
  if (terms.empty()) {
    if (d < 0) throw std::invalid_argument("power_sum: negative degree");
    return Form(1, d);
  }
  Form out(terms[0].second.nvars(), d);
  for (const auto& [c, ell] : terms) {
    if (ell.nvars() != out.nvars())
      throw std::invalid_argument("power_sum: mixed nvars");
    out += ell.power(d) * c;
  }
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  int nvars;

  char peek() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + msg);
  }

  Rat read_number() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected digits");
    std::string num = text.substr(start, pos - start);
    if (peek() == '/') {
      ++pos;
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == dstart) fail("expected denominator digits");
      num += "/" + text.substr(dstart, pos - dstart);
    }
    return parse_rat(num);
  }

  int read_exponent() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected exponent digits");
    return std::stoi(text.substr(start, pos - start));
  }

  // returns variable index, or -1 if the next factor is not a variable
  int read_variable() {
    char c = peek();
    static const std::string roman = "xyzw", greek = "abcd";
    int base = -1;
    if (roman.find(c) != std::string::npos) base = static_cast<int>(roman.find(c));
    if (greek.find(c) != std::string::npos) base = static_cast<int>(greek.find(c));
    if (base == -1) return -1;
    ++pos;
    // indexed name xK / aK
    if ((c == 'x' || c == 'a') && pos < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      base = std::stoi(text.substr(start, pos - start));
    } else if (nvars > 4) {
      fail("variables must be indexed (x0..) when nvars > 4");
    }
    if (base >= nvars) fail("variable index out of range");
    return base;
  }

  // (coefficient, exponent vector)
  std::pair<Rat, Exponents> read_term() {
    Rat coef = 1;
    Exponents exps(nvars, 0);
    bool saw_factor = false;
    for (;;) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= read_number();
        saw_factor = true;
      } else {
        int var = read_variable();
        if (var < 0) break;
        int e = 1;
        if (peek() == '^') {
          ++pos;
          e = read_exponent();
        }
        exps[var] += e;
        saw_factor = true;
      }
      if (peek() == '*') {
        ++pos;
        continue;
      }
      char nxt = peek();
      if (nxt == '+' || nxt == '-' || nxt == '\0') break;
    }
    if (!saw_factor) fail("expected a term");
    return {coef, exps};
  }
};

}  // namespace

Form parse_form(const std::string& text, int nvars, int expected_degree) {
  if (nvars < 1) throw std::invalid_argument("parse_form: nvars < 1");
  Parser p{text, 0, nvars};
  std::vector<std::pair<Rat, Exponents>> terms;
  bool negate = false;
  char c = p.peek();
  if (c == '+' || c == '-') {
    negate = (c == '-');
    ++p.pos;
  }
  for (;;) {
    auto [coef, exps] = p.read_term();
    terms.emplace_back(negate ? Rat(-coef) : coef, exps);
    char nxt = p.peek();
    if (nxt == '\0') break;
    if (nxt != '+' && nxt != '-') p.fail("expected + or -");
    negate = (nxt == '-');
    ++p.pos;
  }

  int degree = expected_degree;
  for (const auto& [coef, exps] : terms) {
    if (coef == 0) continue;
    const int tdeg = std::accumulate(exps.begin(), exps.end(), 0);
    if (degree < 0) degree = tdeg;
    if (tdeg != degree)
      throw std::invalid_argument("inhomogeneous form: term of degree " +
                                  std::to_string(tdeg) + " in a degree-" +
                                  std::to_string(degree) + " form");
  }
  if (degree < 0) degree = 0;  // "0" with no declared degree

  Form f(nvars, degree);
  for (const auto& [coef, exps] : terms) {
    if (coef == 0) continue;
    f.set_coeff(exps, f.coeff(exps) + coef);
  }
  return f;
}

}  // namespace waring
