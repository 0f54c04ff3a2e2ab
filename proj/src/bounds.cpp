#include "waring/bounds.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace waring {

long generic_rank(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("generic_rank: n, d >= 1");
  if (d == 2) return n;
  const long dim = graded_dim(n, d);
  long r = dim / n + (dim % n != 0 ? 1 : 0);
  const bool exceptional = (n == 3 && d == 4) || (n == 4 && d == 4) ||
                           (n == 5 && d == 4) || (n == 5 && d == 3);
  return exceptional ? r + 1 : r;
}

HSeq hseq(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("hseq: n, d >= 1");
  HSeq h(d + 1);
  for (int i = 0; i <= d; ++i)
    h[i] = std::min(graded_dim(n, i), graded_dim(n, d - i));
  return h;
}

HSeq hseq_capped(int n, int d, long s) {
  if (s < 1) throw std::invalid_argument("hseq_capped: s >= 1");
  HSeq h = hseq(n, d);
  for (long& v : h) v = std::min(v, s);
  return h;
}

long algen(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("algen: n, d >= 1");
  return binomial(n + (d - 1) / 2, n) + binomial(n + d / 2, n);
}

long al_capped(int n, int d, long s) {
  const HSeq h = hseq_capped(n, d, s);
  long total = 0;
  for (long v : h) total += v;
  // closed form when some i < d/2 has dim T_i <= s < dim T_{i+1}
  for (int i = 0; 2 * i < d; ++i) {
    if (graded_dim(n, i) <= s && s < graded_dim(n, i + 1)) {
      const long formula = 2 * binomial(n + i, i) + s * (d - 2 * i - 1);
      if (formula != total)
        throw std::logic_error("al_capped: formula disagrees with sum");
      return formula;
    }
  }
  return total;  // cap inactive
}

long monomial_rank(const std::vector<int>& exponents) {
  if (exponents.empty())
    throw std::invalid_argument("monomial_rank: empty exponent list");
  for (int a : exponents)
    if (a < 1) throw std::invalid_argument("monomial_rank: exponents >= 1");
  const auto min_it = std::min_element(exponents.begin(), exponents.end());
  long product = 1;
  for (auto it = exponents.begin(); it != exponents.end(); ++it)
    if (it != min_it) product *= *it + 1;
  return product;
}

namespace {

void max_rank_over_partitions(int remaining, int parts_left, int min_part,
                              std::vector<int>& cur, long& best) {
  if (remaining == 0) {
    if (!cur.empty()) best = std::max(best, monomial_rank(cur));
    return;
  }
  if (parts_left == 0) return;
  for (int a = min_part; a <= remaining; ++a) {
    cur.push_back(a);
    max_rank_over_partitions(remaining - a, parts_left - 1, a, cur, best);
    cur.pop_back();
  }
}

}  // namespace

long max_monomial_rank(int n, int d) {
  if (n < 2 || d < 1)
    throw std::invalid_argument("max_monomial_rank: n >= 2, d >= 1");
  long best = 1;
  std::vector<int> cur;
  max_rank_over_partitions(d, n, 1, cur, best);
  return best;
}

namespace {

void require_linear_dual(const Form& alpha) {
  if (alpha.degree() != 1 || alpha.is_zero())
    throw std::invalid_argument("alpha must be a nonzero linear dual form");
}

Json length_step(const char* name, const Form& g, long al) {
  return Json{{"name", name},
              {"values", Json{{"form", g.str()}, {"al", al}}}};
}

void push_step(BoundCertificate& cert, const char* name, Json values) {
  cert.steps.push_back({name, std::move(values)});
}

}  // namespace

BoundCertificate derksen_bound(const Form& f, const Form& alpha) {
  require_linear_dual(alpha);
  BoundCertificate cert;
  cert.form = f;
  cert.alpha = alpha;
  cert.kind = "derksen";
  const Form df = apply(alpha, f);
  const Form ddf = apply(alpha, df);
  const long al1 = apolar_length(df);
  const long al2 = apolar_length(ddf);
  push_step(cert, "al_alpha_f", Json{{"al", al1}});
  push_step(cert, "al_alpha2_f", Json{{"al", al2}});
  cert.bound = al1 - al2;
  push_step(cert, "bound_derksen", Json{{"bound", cert.bound}});
  return cert;
}

BoundCertificate improved_bound(const Form& f, const Form& alpha) {
  require_linear_dual(alpha);
  BoundCertificate cert = derksen_bound(f, alpha);
  cert.kind = "improved";
  const long alf = apolar_length(f);
  const long al1 = cert.steps[0].values.at("al").get<long>();
  const long al2 = cert.steps[1].values.at("al").get<long>();
  const bool strict = alf - al1 > al1 - al2;
  push_step(cert, "improvement_check",
            Json{{"al_f", alf},
                 {"lhs", alf - al1},
                 {"rhs", al1 - al2},
                 {"strict", strict}});
  if (strict) cert.bound += 1;
  push_step(cert, "bound_improved", Json{{"bound", cert.bound}});
  return cert;
}

BoundCertificate cactus_bound(const Form& f, const Form& alpha) {
  require_linear_dual(alpha);
  BoundCertificate cert;
  cert.form = f;
  cert.alpha = alpha;
  cert.kind = "cactus";
  cert.conditional = true;  // no-support-on-hyperplane hypothesis not checked
  const long alf = apolar_length(f);
  const long al1 = apolar_length(apply(alpha, f));
  push_step(cert, "al_f", Json{{"al", alf}});
  push_step(cert, "al_alpha_f", Json{{"al", al1}});
  cert.bound = alf - al1;
  push_step(cert, "bound_cactus", Json{{"bound", cert.bound}});
  return cert;
}

BoundCertificate best_bound(const Form& f, int extra_alphas,
                            std::uint64_t rng_seed) {
  const int n = f.nvars();
  std::vector<Form> candidates;
  for (int i = 0; i < n; ++i) {
    Exponents e(n);
    e[i] = 1;
    candidates.push_back(Form::monomial(n, e));
  }
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int k = 0; k < extra_alphas; ++k) {
    LinearForm ell;
    do {
      ell.coeffs.assign(n, Rat(0));
      for (int i = 0; i < n; ++i) ell.coeffs[i] = coeff(rng);
    } while (ell.is_zero());
    candidates.push_back(ell.to_form());
  }
  BoundCertificate best;
  bool have = false;
  for (const Form& alpha : candidates) {
    BoundCertificate cert = improved_bound(f, alpha);
    if (!have || cert.bound > best.bound) {
      best = std::move(cert);
      have = true;
    }
  }
  best.steps.push_back(
      {"alpha_search",
       Json{{"candidates", static_cast<long>(candidates.size())},
            {"seed", rng_seed}}});
  return best;
}

}  // namespace waring
