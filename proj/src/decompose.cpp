#include "waring/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace waring {

Json Decomposition::to_json() const {
  Json out;
  out["degree"] = degree;
  out["exact"] = exact;
  Json list = Json::array();
  if (exact) {
    for (const auto& [c, point] : terms) {
      Json p = Json::array();
      for (const Rat& x : point) p.push_back(rat_str(x));
      list.push_back(Json{{"coef", rat_str(c)}, {"point", p}});
    }
  } else {
    auto complex_json = [](const Complex& z) {
      if (z.imag() == 0) return Json(z.real());
      return Json(Json::array({z.real(), z.imag()}));
    };
    for (const auto& [c, point] : fterms) {
      Json p = Json::array();
      for (const Complex& x : point) p.push_back(complex_json(x));
      list.push_back(Json{{"coef", complex_json(c)}, {"point", p}});
    }
  }
  out["terms"] = list;
  return out;
}

Decomposition Decomposition::from_json(const Json& j) {
  Decomposition dec;
  const Json& list = j.is_array() ? j : j.at("terms");
  if (!j.is_array()) {
    dec.degree = j.value("degree", 0);
    dec.exact = j.value("exact", true);
  }
  // exact unless any numeric or [re, im] literal shows up
  bool exact = true;
  for (const Json& term : list)
    if (!term.at("coef").is_string()) exact = false;
  if (!j.is_array()) exact = dec.exact && exact;
  dec.exact = exact;
  auto as_complex = [](const Json& x) -> Complex {
    if (x.is_string()) return {parse_rat(x.get<std::string>()).get_d(), 0.0};
    if (x.is_array()) return {x.at(0).get<double>(), x.at(1).get<double>()};
    return {x.get<double>(), 0.0};
  };
  for (const Json& term : list) {
    if (dec.exact) {
      std::vector<Rat> point;
      for (const Json& x : term.at("point"))
        point.push_back(x.is_string() ? parse_rat(x.get<std::string>())
                                      : Rat(x.get<long>()));
      dec.terms.emplace_back(parse_rat(term.at("coef").get<std::string>()),
                             point);
    } else {
      std::vector<Complex> point;
      for (const Json& x : term.at("point")) point.push_back(as_complex(x));
      dec.fterms.emplace_back(as_complex(term.at("coef")), point);
    }
  }
  return dec;
}

namespace {

bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

bool verify_decomposition(const Form& f, const Decomposition& dec) {
  if (!dec.exact)
    throw std::invalid_argument(
        "verify_decomposition: only exact decompositions certify bounds");
  std::vector<std::pair<Rat, LinearForm>> terms;
  for (const auto& [c, point] : dec.terms) {
    if (static_cast<int>(point.size()) != f.nvars())
      throw std::invalid_argument("verify_decomposition: wrong point arity");
    LinearForm ell{point};
    if (ell.is_zero())
      throw std::invalid_argument("verify_decomposition: zero point");
    terms.emplace_back(c, ell);
  }
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (proportional(terms[i].second.coeffs, terms[j].second.coeffs))
        throw std::invalid_argument(
            "verify_decomposition: proportional points are not a reduced "
            "witness");
  return power_sum(terms, f.degree()) == f;
}

namespace {

// dense univariate polynomials over Q, ascending powers
using UPoly = std::vector<Rat>;

UPoly trim(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

UPoly derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rat(i));
  return trim(out);
}

UPoly remainder(UPoly a, const UPoly& b) {
  a = trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= factor * b[i];
    a = trim(a);
  }
  return a;
}

UPoly gcd_upoly(UPoly a, UPoly b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f as a univariate polynomial in the first variable (second set to 1)
UPoly dehomogenize(const Form& f) {
  UPoly p(f.degree() + 1, Rat(0));
  for (const auto& [e, c] : f.terms()) p[e[0]] = c;
  return trim(p);
}

std::vector<Int> divisors(Int value) {
  if (value < 0) value = -value;
  std::vector<Int> out;
  for (Int i = 1; i * i <= value; ++i) {
    if (value % i != 0) continue;
    out.push_back(i);
    if (i * i != value) out.push_back(value / i);
  }
  return out;
}

Rat eval_upoly(const UPoly& p, const Rat& u) {
  Rat total = 0;
  for (std::size_t i = p.size(); i-- > 0;) total = total * u + p[i];
  return total;
}

UPoly divide_root(const UPoly& p, const Rat& root) {
  // synthetic division by (u - root)
  UPoly out(p.size() - 1, Rat(0));
  Rat carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    out[i - 1] = carry;
  }
  return out;
}

// all rational roots with multiplicity, or nullopt when any root is
// irrational. Gives up on oversized coefficients.
std::optional<std::vector<Rat>> rational_roots(UPoly p) {
  p = trim(p);
  std::vector<Rat> roots;
  while (p.size() > 1) {
    // clear denominators
    Int den = 1;
    for (const Rat& c : p)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    for (Rat& c : p) c *= Rat(den);
    std::size_t low = 0;
    while (p[low] == 0) {
      roots.push_back(0);
      ++low;
    }
    if (low > 0) {
      p.erase(p.begin(), p.begin() + low);
      continue;
    }
    const Int trailing = p.front().get_num();
    const Int leading = p.back().get_num();
    if (mpz_sizeinbase(trailing.get_mpz_t(), 2) > 64 ||
        mpz_sizeinbase(leading.get_mpz_t(), 2) > 64)
      return std::nullopt;
    bool found = false;
    for (const Int& num : divisors(trailing)) {
      for (const Int& den2 : divisors(leading)) {
        for (int sign : {1, -1}) {
          Rat candidate = Rat(sign * num) / Rat(den2);
          candidate.canonicalize();
          if (eval_upoly(p, candidate) == 0) {
            roots.push_back(candidate);
            p = divide_root(p, candidate);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

}  // namespace

bool squarefree_binary(const Form& f) {
  if (f.nvars() != 2 || f.is_zero())
    throw std::invalid_argument("squarefree_binary: nonzero binary form");
  const UPoly p = dehomogenize(f);
  // multiplicity of the point at infinity = degree drop
  if (f.degree() - (static_cast<int>(p.size()) - 1) >= 2) return false;
  const UPoly g = gcd_upoly(p, derivative(p));
  return g.size() <= 1;
}

namespace {

// points of the reduced zero locus of a squarefree dual binary form with
// rational roots: root [p:q] of phi gives the linear form p*x + q*y
std::optional<std::vector<std::vector<Rat>>> dual_points(const Form& phi) {
  const UPoly p = dehomogenize(phi);
  const int infinity_mult = phi.degree() - (static_cast<int>(p.size()) - 1);
  if (infinity_mult >= 2) return std::nullopt;
  const auto roots = rational_roots(p);
  if (!roots) return std::nullopt;
  std::vector<std::vector<Rat>> points;
  if (infinity_mult == 1) points.push_back({Rat(1), Rat(0)});
  for (const Rat& r : *roots) points.push_back({r, Rat(1)});
  return points;
}

std::optional<Decomposition> witness_from_piece(
    const Form& f, const std::vector<Form>& piece) {
  // look for a squarefree element with rational roots among small
  // combinations of the piece
  std::vector<Form> candidates = piece;
  for (std::size_t i = 0; i < piece.size(); ++i)
    for (std::size_t j = i + 1; j < piece.size(); ++j)
      for (int a = -3; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
          if (a != 0) candidates.push_back(piece[i] * Rat(a) + piece[j] * Rat(b));
  for (const Form& phi : candidates) {
    if (phi.is_zero() || !squarefree_binary(phi)) continue;
    const auto points = dual_points(phi);
    if (!points) continue;
    // solve for the scalars
    QMatrix a(static_cast<std::size_t>(f.degree() + 1), points->size());
    for (std::size_t j = 0; j < points->size(); ++j) {
      const auto v = LinearForm{(*points)[j]}.power(f.degree()).coeff_vector();
      for (std::size_t i = 0; i < v.size(); ++i) a.at(i, j) = v[i];
    }
    const auto coeffs = solve(a, f.coeff_vector());
    if (!coeffs) continue;
    Decomposition dec;
    dec.degree = f.degree();
    dec.exact = true;
    for (std::size_t j = 0; j < points->size(); ++j) {
      if ((*coeffs)[j] == 0) continue;
      dec.terms.emplace_back((*coeffs)[j], (*points)[j]);
    }
    if (verify_decomposition(f, dec)) return dec;
  }
  return std::nullopt;
}

}  // namespace

BinaryRankResult binary_rank(const Form& f) {
  if (f.nvars() != 2 || f.is_zero())
    throw std::invalid_argument("binary_rank: nonzero binary form required");
  const int d = f.degree();
  BinaryRankResult result;
  result.generators = minimal_generators(f, d + 1);
  if (result.generators.size() != 2)
    throw std::logic_error("binary_rank: apolar ideal is not a binary CI");
  const auto& [d1, phi1] = result.generators[0];
  const auto& [d2, phi2] = result.generators[1];
  if (d1 == d2) {
    // coprime pencil: the generic member is squarefree
    result.rank = d1;
  } else {
    result.rank = squarefree_binary(phi1) ? d1 : d2;
  }
  // witness search in the graded piece of the rank degree
  const GradedPiece piece =
      apolar_graded_piece(f, static_cast<int>(result.rank));
  result.witness = witness_from_piece(f, piece.basis);
  return result;
}

namespace {

// rank-one test for a quadric via its symmetric matrix
bool is_linear_square(const Form& quadric) {
  const int n = quadric.nvars();
  QMatrix m(n, n);
  for (const auto& [e, c] : quadric.terms()) {
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      if (e[v] == 2) i = j = v;
      if (e[v] == 1) (i < 0 ? i : j) = v;
    }
    if (i == j) {
      m.at(i, i) = c;
    } else {
      m.at(i, j) = c / 2;
      m.at(j, i) = c / 2;
    }
  }
  return rank_of(m) == 1;
}

}  // namespace

std::optional<std::pair<long, std::vector<int>>> ci_rank(const Form& f) {
  if (f.is_zero()) return std::nullopt;
  const int n = f.nvars(), d = f.degree();
  const auto gens = minimal_generators(f, d + 1);
  if (gens.size() != static_cast<std::size_t>(n)) return std::nullopt;
  std::vector<int> degrees;
  for (const auto& [deg, g] : gens) degrees.push_back(deg);
  std::sort(degrees.begin(), degrees.end());
  long product = 1;
  for (int deg : degrees) product *= deg;
  if (apolar_length(f) != product) return std::nullopt;  // not a CI
  if (degrees.front() != 2) return std::nullopt;  // rule needs a quadric
  // a rank-one quadric somewhere in the degree-2 piece
  const GradedPiece piece = apolar_graded_piece(f, 2);
  bool found = false;
  std::vector<Form> candidates;
  for (const Form& g : piece.basis) candidates.push_back(g);
  for (std::size_t i = 0; i < piece.basis.size() && !found; ++i)
    for (std::size_t j = i + 1; j < piece.basis.size(); ++j)
      for (int a = -6; a <= 6; ++a)
        if (a != 0)
          candidates.push_back(piece.basis[i] * Rat(a) + piece.basis[j]);
  for (const Form& g : candidates)
    if (!g.is_zero() && is_linear_square(g)) {
      found = true;
      break;
    }
  if (!found) return std::nullopt;
  return std::make_pair(product / degrees.front(), degrees);
}

namespace {

using Cx = std::complex<double>;

// Waring rank lives over the complex numbers, so the fit does too: real
// starting points stall on forms whose minimal decompositions are not real.
struct AlsWorkspace {
  int n, d, r;
  std::vector<Exponents> basis;
  std::vector<double> multinom;  // per basis monomial
  std::vector<Cx> target;
  double target_norm;
};

std::vector<Cx> expand_point(const AlsWorkspace& ws,
                             const std::vector<Cx>& point) {
  std::vector<Cx> v(ws.basis.size());
  for (std::size_t i = 0; i < ws.basis.size(); ++i) {
    Cx value = ws.multinom[i];
    for (int j = 0; j < ws.n; ++j)
      for (int q = 0; q < ws.basis[i][j]; ++q) value *= point[j];
    v[i] = value;
  }
  return v;
}

double residual_norm(const AlsWorkspace& ws, const std::vector<Cx>& coeffs,
                     const std::vector<std::vector<Cx>>& points,
                     std::vector<Cx>* residual_out = nullptr) {
  std::vector<Cx> acc(ws.basis.size(), Cx(0));
  for (int t = 0; t < ws.r; ++t) {
    const auto v = expand_point(ws, points[t]);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += coeffs[t] * v[i];
  }
  double norm2 = 0;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    acc[i] -= ws.target[i];
    norm2 += std::norm(acc[i]);
  }
  if (residual_out) *residual_out = acc;
  return std::sqrt(norm2);
}

// dense complex solve with partial pivoting; tiny systems only
std::vector<Cx> solve_dense(std::vector<std::vector<Cx>> a,
                            std::vector<Cx> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
    std::swap(a[col], a[best]);
    std::swap(b[col], b[best]);
    if (std::abs(a[col][col]) < 1e-14) a[col][col] += 1e-12;  // ridge
    for (std::size_t r = col + 1; r < n; ++r) {
      const Cx factor = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= factor * a[col][j];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Cx> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Cx s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

// d model / d point coordinate, conjugated into the steepest-descent
// direction later
Cx model_derivative(const AlsWorkspace& ws, const std::vector<Cx>& point,
                    std::size_t mono, int var) {
  if (ws.basis[mono][var] == 0) return Cx(0);
  Cx dv = ws.multinom[mono] * static_cast<double>(ws.basis[mono][var]);
  for (int v = 0; v < ws.n; ++v) {
    const int e = ws.basis[mono][v] - (v == var ? 1 : 0);
    for (int q = 0; q < e; ++q) dv *= point[v];
  }
  return dv;
}

}  // namespace

NumericalFit numerical_decompose(const Form& f, int r, double tol,
                                 std::uint64_t rng_seed, int restarts) {
  if (r < 1) throw std::invalid_argument("numerical_decompose: r >= 1");
  AlsWorkspace ws;
  ws.n = f.nvars();
  ws.d = f.degree();
  ws.r = r;
  ws.basis = monomial_basis(ws.n, ws.d);
  for (const Exponents& e : ws.basis) {
    Rat mult = 1;
    int used = 0;
    for (int v = 0; v < ws.n; ++v) {
      mult *= Rat(binomial(used + e[v], e[v]));
      used += e[v];
    }
    ws.multinom.push_back(mult.get_d());
  }
  {
    const auto coeffs = f.coeff_vector();
    double norm2 = 0;
    for (const Rat& c : coeffs) {
      ws.target.emplace_back(c.get_d(), 0.0);
      norm2 += c.get_d() * c.get_d();
    }
    ws.target_norm = std::max(std::sqrt(norm2), 1e-300);
  }

  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  NumericalFit best;
  best.residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < restarts; ++restart) {
    std::vector<std::vector<Cx>> points(r, std::vector<Cx>(ws.n));
    for (auto& p : points)
      for (Cx& x : p) x = Cx(unit(rng), unit(rng));
    std::vector<Cx> coeffs(r, Cx(0));

    auto solve_coeffs = [&]() {
      // least squares for the scalars: Hermitian normal equations
      std::vector<std::vector<Cx>> cols;
      for (int t = 0; t < r; ++t) cols.push_back(expand_point(ws, points[t]));
      std::vector<std::vector<Cx>> gram(r, std::vector<Cx>(r, Cx(0)));
      std::vector<Cx> rhs(r, Cx(0));
      for (int s = 0; s < r; ++s) {
        for (int t = 0; t < r; ++t)
          for (std::size_t i = 0; i < ws.basis.size(); ++i)
            gram[s][t] += std::conj(cols[s][i]) * cols[t][i];
        for (std::size_t i = 0; i < ws.basis.size(); ++i)
          rhs[s] += std::conj(cols[s][i]) * ws.target[i];
      }
      const auto candidate = solve_dense(gram, rhs);
      const double before = residual_norm(ws, coeffs, points);
      if (residual_norm(ws, candidate, points) <= before) coeffs = candidate;
    };

    solve_coeffs();
    double current = residual_norm(ws, coeffs, points);
    double lambda = 1e-3;
    const int max_iters = 400;
    const int nparams = r * ws.n;
    for (int iter = 0; iter < max_iters; ++iter) {
      if (current / ws.target_norm <= tol) break;
      // damped Gauss-Newton step on the points; a step is taken only when
      // it lowers the residual, so the residual is non-increasing
      std::vector<Cx> residual;
      residual_norm(ws, coeffs, points, &residual);
      std::vector<std::vector<Cx>> jac(ws.basis.size(),
                                       std::vector<Cx>(nparams, Cx(0)));
      for (int t = 0; t < r; ++t)
        for (int j = 0; j < ws.n; ++j)
          for (std::size_t i = 0; i < ws.basis.size(); ++i) {
            const Cx dv = model_derivative(ws, points[t], i, j);
            if (dv != Cx(0)) jac[i][t * ws.n + j] = coeffs[t] * dv;
          }
      bool moved = false;
      for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<std::vector<Cx>> normal(nparams,
                                            std::vector<Cx>(nparams, Cx(0)));
        std::vector<Cx> rhs(nparams, Cx(0));
        for (int a = 0; a < nparams; ++a) {
          for (int b = 0; b < nparams; ++b)
            for (std::size_t i = 0; i < ws.basis.size(); ++i)
              normal[a][b] += std::conj(jac[i][a]) * jac[i][b];
          normal[a][a] += lambda;
          for (std::size_t i = 0; i < ws.basis.size(); ++i)
            rhs[a] -= std::conj(jac[i][a]) * residual[i];
        }
        const auto delta = solve_dense(normal, rhs);
        auto trial = points;
        for (int t = 0; t < r; ++t)
          for (int j = 0; j < ws.n; ++j) trial[t][j] += delta[t * ws.n + j];
        if (residual_norm(ws, coeffs, trial) < current) {
          points = std::move(trial);
          lambda = std::max(lambda / 3.0, 1e-12);
          moved = true;
          break;
        }
        lambda *= 5.0;
      }
      solve_coeffs();
      const double next = residual_norm(ws, coeffs, points);
      if (!moved && next >= current * (1 - 1e-15)) break;  // stalled
      current = next;
    }

    if (current / ws.target_norm < best.residual) {
      best.residual = current / ws.target_norm;
      best.dec = Decomposition{};
      best.dec.degree = ws.d;
      best.dec.exact = false;
      for (int t = 0; t < r; ++t)
        best.dec.fterms.emplace_back(coeffs[t], points[t]);
    }
    if (best.residual <= tol) break;
  }
  return best;
}

}  // namespace waring
