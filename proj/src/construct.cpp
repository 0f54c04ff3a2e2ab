#include "waring/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "waring/apolarity.hpp"

namespace waring {

Form random_power_sum(int n, int d, int s, std::uint64_t rng_seed) {
  if (n < 1 || d < 1 || s < 1)
    throw std::invalid_argument("random_power_sum: n, d, s >= 1");
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<std::pair<Rat, LinearForm>> terms;
  for (int i = 0; i < s; ++i) {
    LinearForm ell;
    do {
      ell.coeffs.assign(n, Rat(0));
      for (int v = 0; v < n; ++v) ell.coeffs[v] = coeff(rng);
    } while (ell.is_zero());
    terms.emplace_back(Rat(1), ell);
  }
  return power_sum(terms, d);
}

Form find_psi(const Form& g, int k) {
  const GradedPiece piece = apolar_graded_piece(g, k);
  if (piece.dim() != 1)
    throw GenericityError("find_psi: (G^perp)_" + std::to_string(k) +
                          " has dimension " + std::to_string(piece.dim()) +
                          ", expected 1");
  // normalize to coprime integers with positive leading coefficient
  const Form& raw = piece.basis[0];
  Int den = 1, num = 0;
  for (const auto& [e, c] : raw.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rat scale = Rat(den) / Rat(num);
  if (raw.terms().begin()->second * scale < 0) scale = -scale;
  return raw * scale;
}

bool check_K(const Form& g, const Form& psi, const Form& k_form, int k) {
  if (k_form.is_zero()) return false;
  const int m = g.nvars();
  if (psi.nvars() != m || k_form.nvars() != m)
    throw std::invalid_argument("check_K: variable count mismatch");
  const Form image = apply(psi, k_form);
  if (image.is_zero()) return false;
  QMatrix derivatives(0,
                      static_cast<std::size_t>(graded_dim(m, k + 1)));
  for (const Exponents& e : monomial_basis(m, k - 1)) {
    const Form df = apply(Form::monomial(m, e), g);
    if (df.degree() != k + 1)
      throw std::invalid_argument("check_K: degree mismatch");
    derivatives.append_row(df.coeff_vector());
  }
  return !in_row_space(image.coeff_vector(), derivatives);
}

namespace {

// Shared scaffolding for the parametric rule-out: F = x*G + K with the
// distinguished variable x, alpha its dual, and all of F's other variables
// acting as parameters of the subtracted power. The degree-k catalecticant
// of F - ell^d has identically zero rows at monomials divisible by alpha^2;
// the remaining rows split into constant entries plus a rank-one parametric
// part coming from ell^d, so every maximal minor is a rational cofactor
// computation.
struct RuleoutSetup {
  int n, m, d, k, x;
  Form g, k_part;           // m-variable pieces of f
  std::size_t rank_required;
  std::vector<Exponents> w_rows;           // T_k monomials with alpha-deg <= 1
  std::vector<int> b_row_pos;              // position in w_rows of each B row
  std::vector<Exponents> b_row_params;     // theta' exponents, m variables
  std::vector<Exponents> bin_cols, x_cols; // m-variable column labels
  std::vector<std::size_t> full_cols;      // full catalecticant column index
  QMatrix constant_matrix;                 // |w_rows| x (bin + x) entries
  Rat falling;                             // d (d-1) ... (d-k+1)
  std::vector<Rat> v_mult;                 // multinomial weights of ell^(k+1)
};

int single_dual_variable(const Form& alpha) {
  if (alpha.degree() != 1 || alpha.term_count() != 1)
    throw std::domain_error(
        "parametric_ruleout: alpha must be a single coordinate dual");
  const Exponents& e = alpha.terms().begin()->first;
  for (int i = 0; i < alpha.nvars(); ++i)
    if (e[i] == 1) return i;
  throw std::domain_error("parametric_ruleout: degenerate alpha");
}

Exponents drop_at(const Exponents& e, int pos) {
  Exponents out(e);
  out.erase(out.begin() + pos);
  return out;
}

Exponents insert_at(const Exponents& e, int pos, int value) {
  Exponents out(e);
  out.insert(out.begin() + pos, value);
  return out;
}

RuleoutSetup make_setup(const Form& f, const Form& alpha, int k) {
  RuleoutSetup su;
  su.n = f.nvars();
  su.m = su.n - 1;
  su.d = f.degree();
  su.k = k;
  if (su.d < 3 || su.d % 2 == 0 || k != (su.d - 1) / 2)
    throw std::domain_error("parametric_ruleout: d must be odd, k = (d-1)/2");
  if (su.m < 1)
    throw std::domain_error("parametric_ruleout: need at least 2 variables");
  su.x = single_dual_variable(alpha);
  Exponents a2(su.n, 0);
  a2[su.x] = 2;
  if (!apply(Form::monomial(su.n, a2), f).is_zero())
    throw std::domain_error("parametric_ruleout: alpha^2 o F must vanish");

  Exponents a1(su.n, 0);
  a1[su.x] = 1;
  su.g = apply(Form::monomial(su.n, a1), f).restricted(su.x);
  Form xg(su.n, su.d);
  {
    Form g_ext = su.g.extended(su.n, su.x);
    Exponents xe(su.n, 0);
    xe[su.x] = 1;
    xg = Form::monomial(su.n, xe) * g_ext;
  }
  su.k_part = (f - xg).restricted(su.x);

  su.rank_required = static_cast<std::size_t>(graded_dim(su.n, k) -
                                              graded_dim(su.n, k - 2));
  for (const Exponents& e : monomial_basis(su.n, k))
    if (e[su.x] <= 1) su.w_rows.push_back(e);
  if (su.w_rows.size() != su.rank_required)
    throw std::logic_error("parametric_ruleout: row count mismatch");

  su.bin_cols = monomial_basis(su.m, k + 1);
  su.x_cols = monomial_basis(su.m, k);
  for (const Exponents& e : su.bin_cols)
    su.full_cols.push_back(monomial_index(insert_at(e, su.x, 0)));
  for (const Exponents& e : su.x_cols)
    su.full_cols.push_back(monomial_index(insert_at(e, su.x, 1)));

  su.falling = 1;
  for (int i = 0; i < k; ++i) su.falling *= su.d - i;
  for (const Exponents& e : su.bin_cols) {
    // multinomial(k+1; e)
    Rat mult = 1;
    int used = 0;
    for (int v = 0; v < su.m; ++v) {
      mult *= Rat(binomial(used + e[v], e[v]));
      used += e[v];
    }
    su.v_mult.push_back(mult);
  }

  const std::size_t nbin = su.bin_cols.size(), nx = su.x_cols.size();
  su.constant_matrix = QMatrix(su.w_rows.size(), nbin + nx);
  for (std::size_t r = 0; r < su.w_rows.size(); ++r) {
    const Exponents& theta = su.w_rows[r];
    if (theta[su.x] == 1) {
      // alpha * theta' acting on F gives theta' o G, with no x part
      const Form image =
          apply(Form::monomial(su.m, drop_at(theta, su.x)), su.g);
      for (std::size_t c = 0; c < nbin; ++c)
        su.constant_matrix.at(r, c) = image.coeff(su.bin_cols[c]);
    } else {
      const Exponents tp = drop_at(theta, su.x);
      su.b_row_pos.push_back(static_cast<int>(r));
      su.b_row_params.push_back(tp);
      const Form on_g = apply(Form::monomial(su.m, tp), su.g);
      const Form on_k = apply(Form::monomial(su.m, tp), su.k_part);
      for (std::size_t c = 0; c < nx; ++c)
        su.constant_matrix.at(r, nbin + c) = on_g.coeff(su.x_cols[c]);
      for (std::size_t c = 0; c < nbin; ++c)
        su.constant_matrix.at(r, c) = on_k.coeff(su.bin_cols[c]);
    }
  }
  return su;
}

// the minor over effective-column positions `sel` (ascending)
ParamPoly structured_minor(const RuleoutSetup& su,
                           const std::vector<std::size_t>& sel) {
  const std::size_t r = su.w_rows.size();
  QMatrix base(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      base.at(i, j) = su.constant_matrix.at(i, sel[j]);

  ParamPoly minor = ParamPoly::constant(su.m, determinant(base));
  for (std::size_t bi = 0; bi < su.b_row_params.size(); ++bi) {
    const int row = su.b_row_pos[bi];
    for (std::size_t j = 0; j < r; ++j) {
      if (sel[j] >= su.bin_cols.size()) continue;  // x column: no parametric part
      // cofactor of (row, j) in the constant base matrix
      QMatrix cof(r - 1, r - 1);
      for (std::size_t i2 = 0, i3 = 0; i2 < r; ++i2) {
        if (i2 == static_cast<std::size_t>(row)) continue;
        for (std::size_t j2 = 0, j3 = 0; j2 < r; ++j2) {
          if (j2 == j) continue;
          cof.at(i3, j3) = base.at(i2, j2);
          ++j3;
        }
        ++i3;
      }
      Rat value = determinant(std::move(cof));
      if ((row + static_cast<int>(j)) % 2 != 0) value = -value;
      if (value == 0) continue;
      // replacement row is -falling * t^theta' * v, with v_e = mult * t^e
      const Exponents& e = su.bin_cols[sel[j]];
      Exponents mono(su.m);
      for (int v = 0; v < su.m; ++v) mono[v] = su.b_row_params[bi][v] + e[v];
      minor.add_term(mono, -su.falling * su.v_mult[sel[j]] * value);
    }
  }
  return minor;
}

LinearForm embed_ell(const RuleoutSetup& su, const std::vector<Rat>& params) {
  LinearForm ell;
  ell.coeffs.assign(su.n, Rat(0));
  for (int v = 0, p = 0; v < su.n; ++v)
    if (v != su.x) ell.coeffs[v] = params[p++];
  return ell;
}

std::size_t rank_at(const Form& f, const LinearForm& ell_full, int k) {
  const Form shifted = f - ell_full.power(f.degree());
  if (shifted.is_zero()) return 0;
  return rank_of(catalecticant(shifted, k));
}

Json poly_to_json(const ParamPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"e", e}, {"c", rat_str(c)}});
  return terms;
}

ParamPoly poly_from_json(const Json& j, int nvars) {
  ParamPoly p(nvars);
  for (const Json& term : j)
    p.add_term(term.at("e").get<Exponents>(),
               parse_rat(term.at("c").get<std::string>()));
  return p;
}

// Nullstellensatz combination sum p_i * m_i = 1 with deg p_i <= cap.
// All minors here have support degrees in {0, D}; restricting multipliers
// and product monomials to degrees divisible by D loses no solutions
// (the system decouples into residue classes mod D and only class 0 is
// inhomogeneous).
std::optional<std::vector<ParamPoly>> nullstellensatz_combination(
    const std::vector<ParamPoly>& minors, int nparams, int cap) {
  if (minors.empty()) return std::nullopt;
  int big_degree = 0;
  bool structured = true;
  for (const ParamPoly& m : minors) {
    for (const auto& [e, c] : m.terms()) {
      const int deg = std::accumulate(e.begin(), e.end(), 0);
      if (deg > 0 && big_degree == 0) big_degree = deg;
      if (deg != 0 && deg != big_degree) structured = false;
    }
  }
  if (big_degree == 0) big_degree = 1;

  std::vector<int> multiplier_degrees;
  for (int deg = 0; deg <= cap; ++deg)
    if (!structured || deg % big_degree == 0) multiplier_degrees.push_back(deg);

  // unknown layout: (minor index, multiplier monomial)
  std::vector<std::pair<std::size_t, Exponents>> unknowns;
  for (std::size_t i = 0; i < minors.size(); ++i)
    for (int deg : multiplier_degrees)
      for (const Exponents& e : monomial_basis(nparams, deg))
        unknowns.emplace_back(i, e);

  // reachable product monomials
  std::map<Exponents, std::size_t, LexGreater> eq_index;
  for (const auto& [i, nu] : unknowns) {
    for (const auto& [mu, c] : minors[i].terms()) {
      Exponents e(nparams);
      for (int v = 0; v < nparams; ++v) e[v] = nu[v] + mu[v];
      eq_index.emplace(e, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [e, idx] : eq_index) idx = next++;

  QMatrix a(eq_index.size(), unknowns.size());
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& [i, nu] = unknowns[col];
    for (const auto& [mu, c] : minors[i].terms()) {
      Exponents e(nparams);
      for (int v = 0; v < nparams; ++v) e[v] = nu[v] + mu[v];
      a.at(eq_index.at(e), col) += c;
    }
  }
  std::vector<Rat> rhs(eq_index.size(), Rat(0));
  rhs[eq_index.at(Exponents(nparams, 0))] = 1;

  const auto solution = solve(a, rhs);
  if (!solution) return std::nullopt;

  std::vector<ParamPoly> multipliers(minors.size(), ParamPoly(nparams));
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    if ((*solution)[col] == 0) continue;
    multipliers[unknowns[col].first].add_term(unknowns[col].second,
                                              (*solution)[col]);
  }
  // exact self-check
  ParamPoly total(nparams);
  for (std::size_t i = 0; i < minors.size(); ++i)
    total += multipliers[i] * minors[i];
  if (!(total == ParamPoly::constant(nparams, 1)))
    throw std::logic_error("nullstellensatz: combination failed self-check");
  return multipliers;
}

// Column subsets whose minor is nonzero at sampled parameter values,
// found by pivoting: deterministic given the seed.
std::vector<std::vector<std::size_t>> candidate_column_subsets(
    const RuleoutSetup& su, int max_minors, std::uint64_t seed) {
  const std::size_t eff = su.full_cols.size();
  const std::size_t r = su.w_rows.size();
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> subsets;

  const std::size_t total_choose = [&] {
    long v = binomial(static_cast<long>(eff), static_cast<long>(r));
    return static_cast<std::size_t>(v);
  }();

  if (total_choose <= 128) {
    // enumerate everything
    std::vector<std::size_t> sel(r);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
      if (pos == r) {
        subsets.push_back(sel);
        return;
      }
      for (std::size_t c = start; c + (r - pos) <= eff + 0 && c < eff; ++c) {
        sel[pos] = c;
        self(self, pos + 1, c + 1);
      }
    };
    rec(rec, 0, 0);
    return subsets;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-4, 4);
  for (int attempt = 0;
       attempt < 8 * max_minors && static_cast<int>(subsets.size()) < max_minors;
       ++attempt) {
    std::vector<Rat> params(su.m);
    if (attempt > 0)
      for (int v = 0; v < su.m; ++v) params[v] = small(rng);
    // evaluate the parametric matrix at this point
    QMatrix at_point = su.constant_matrix;
    for (std::size_t bi = 0; bi < su.b_row_params.size(); ++bi) {
      Rat theta_val = su.falling;
      for (int v = 0; v < su.m; ++v)
        for (int q = 0; q < su.b_row_params[bi][v]; ++q)
          theta_val *= params[v];
      if (theta_val == 0) continue;
      for (std::size_t c = 0; c < su.bin_cols.size(); ++c) {
        Rat ve = su.v_mult[c];
        for (int v = 0; v < su.m; ++v)
          for (int q = 0; q < su.bin_cols[c][v]; ++q) ve *= params[v];
        at_point.at(su.b_row_pos[bi], c) -= theta_val * ve;
      }
    }
    // random column order for diversity, then pivot
    std::vector<std::size_t> order(eff);
    std::iota(order.begin(), order.end(), 0);
    if (attempt > 1) std::shuffle(order.begin(), order.end(), rng);
    QMatrix shuffled(r, eff);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < eff; ++j)
        shuffled.at(i, j) = at_point.at(i, order[j]);
    const RrefResult red = rref(shuffled);
    if (red.rank != r) continue;
    std::vector<std::size_t> sel;
    for (std::size_t p : red.pivot_cols) sel.push_back(order[p]);
    std::sort(sel.begin(), sel.end());
    if (seen.insert(sel).second) subsets.push_back(sel);
  }
  return subsets;
}

std::vector<Rat> witness_params(const LinearForm& ell_full, int x) {
  std::vector<Rat> out;
  for (int v = 0; v < ell_full.nvars(); ++v)
    if (v != x) out.push_back(ell_full.coeffs[v]);
  return out;
}

}  // namespace

std::size_t ruleout_rank_at(const Form& f, const LinearForm& ell, int k) {
  return rank_at(f, ell, k);
}

ParamPoly ruleout_minor(const Form& f, const Form& alpha, int k,
                        const std::vector<std::size_t>& cols) {
  const RuleoutSetup su = make_setup(f, alpha, k);
  std::vector<std::size_t> sel;
  for (std::size_t full : cols) {
    auto it = std::find(su.full_cols.begin(), su.full_cols.end(), full);
    if (it == su.full_cols.end())
      return ParamPoly(su.m);  // identically zero column
    sel.push_back(static_cast<std::size_t>(it - su.full_cols.begin()));
  }
  if (sel.size() != su.w_rows.size())
    throw std::invalid_argument("ruleout_minor: need exactly rank columns");
  return structured_minor(su, sel);
}

RuleoutResult parametric_ruleout(const Form& f, const Form& alpha, int k,
                                 RuleoutMode mode,
                                 const RuleoutOptions& options) {
  const RuleoutSetup su = make_setup(f, alpha, k);
  RuleoutResult result;
  result.details["mode"] = mode == RuleoutMode::exact ? "exact" : "randomized";
  result.details["k"] = k;
  result.details["alpha"] = alpha.str(true);
  result.details["rank_required"] = su.rank_required;

  // exact refutation sweep: all coordinate ells, then random samples
  std::vector<std::vector<Rat>> samples;
  for (int v = 0; v < su.m; ++v) {
    std::vector<Rat> unit(su.m, Rat(0));
    unit[v] = 1;
    samples.push_back(unit);
  }
  const int random_count =
      mode == RuleoutMode::randomized ? options.random_samples : 8;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int i = 0; i < random_count; ++i) {
    std::vector<Rat> p(su.m);
    bool nonzero = false;
    for (int v = 0; v < su.m; ++v) {
      p[v] = coeff(rng);
      nonzero = nonzero || p[v] != 0;
    }
    if (nonzero) samples.push_back(p);
  }
  for (const auto& p : samples) {
    const LinearForm ell = embed_ell(su, p);
    if (rank_at(f, ell, k) != su.rank_required) {
      result.status = RuleoutStatus::refuted;
      result.rigorous = true;  // an explicit counterexample is exact
      result.witness = ell;
      Json w = Json::array();
      for (const Rat& c : ell.coeffs) w.push_back(rat_str(c));
      result.details["status"] = "refuted";
      result.details["witness"] = w;
      return result;
    }
  }

  if (mode == RuleoutMode::randomized) {
    result.status = RuleoutStatus::proved;
    result.rigorous = false;
    result.details["status"] = "proved";
    result.details["samples"] = static_cast<long>(samples.size());
    result.details["random_samples"] = options.random_samples;
    result.details["seed"] = options.seed;
    return result;
  }

  // exact mode: symbolic minors, then the Nullstellensatz combination
  const auto subsets = candidate_column_subsets(su, options.max_minors,
                                                options.seed);
  std::vector<ParamPoly> minors;
  std::vector<std::vector<std::size_t>> minor_cols;
  std::set<std::string> dedup;
  for (const auto& sel : subsets) {
    ParamPoly minor = structured_minor(su, sel);
    if (minor.is_zero()) continue;
    // normalize sign/scale before deduplicating
    const Rat lead = minor.terms().begin()->second;
    const std::string key = (minor * (1 / lead)).str();
    if (!dedup.insert(key).second) continue;
    std::vector<std::size_t> full;
    for (std::size_t c : sel) full.push_back(su.full_cols[c]);
    minors.push_back(std::move(minor));
    minor_cols.push_back(std::move(full));
  }

  int max_minor_degree = 1;
  for (const ParamPoly& m : minors)
    max_minor_degree = std::max(max_minor_degree, m.total_degree());
  const int cap =
      options.degree_cap >= 0 ? options.degree_cap : 2 * max_minor_degree;

  for (int c = 0; c <= cap; ++c) {
    if (c != cap && c % max_minor_degree != 0 && c != 0) continue;
    const auto combination = nullstellensatz_combination(minors, su.m, c);
    if (!combination) continue;
    result.status = RuleoutStatus::proved;
    result.rigorous = true;
    result.details["status"] = "proved";
    result.details["degree_cap"] = c;
    Json jm = Json::array();
    for (std::size_t i = 0; i < minors.size(); ++i)
      jm.push_back(Json{{"cols", minor_cols[i]}, {"poly", poly_to_json(minors[i])}});
    result.details["minors"] = jm;
    Json jp = Json::array();
    for (const ParamPoly& p : *combination) jp.push_back(poly_to_json(p));
    result.details["multipliers"] = jp;
    Json rows = Json::array();
    for (const Exponents& e : su.w_rows) rows.push_back(e);
    result.details["row_monomials"] = rows;
    return result;
  }

  result.status = RuleoutStatus::inconclusive;
  result.rigorous = false;
  result.details["status"] = "inconclusive";
  result.details["degree_cap"] = cap;
  result.details["minors_tried"] = static_cast<long>(minors.size());
  return result;
}

void check_ruleout_step(const Json& values, const Form& f, const Form& alpha,
                        CheckReport& report) {
  const std::string status = values.at("status").get<std::string>();
  const int k = values.at("k").get<int>();
  RuleoutSetup su;
  try {
    su = make_setup(f, alpha, k);
  } catch (const std::exception& e) {
    report.fail(std::string("parametric_ruleout preconditions: ") + e.what());
    return;
  }
  if (values.at("rank_required").get<std::size_t>() != su.rank_required) {
    report.fail("parametric_ruleout: stated required rank is wrong");
    return;
  }
  if (status == "refuted") {
    std::vector<Rat> coeffs;
    for (const Json& c : values.at("witness"))
      coeffs.push_back(parse_rat(c.get<std::string>()));
    if (rank_at(f, LinearForm(coeffs), k) == su.rank_required)
      report.fail("parametric_ruleout: witness does not drop the rank");
    return;
  }
  if (status == "inconclusive") return;
  const std::string mode = values.at("mode").get<std::string>();
  if (mode == "randomized") {
    // replay the deterministic sample sweep with the recorded parameters
    RuleoutOptions opts;
    opts.seed = values.at("seed").get<std::uint64_t>();
    opts.random_samples = values.value("random_samples", 200);
    const RuleoutResult replay =
        parametric_ruleout(f, alpha, k, RuleoutMode::randomized, opts);
    if (replay.status != RuleoutStatus::proved)
      report.fail("parametric_ruleout: randomized replay did not pass");
    return;
  }
  // exact: recompute each minor from its column set, then verify the
  // combination sums to 1
  ParamPoly total(su.m);
  const Json& minors = values.at("minors");
  const Json& multipliers = values.at("multipliers");
  if (minors.size() != multipliers.size() || minors.empty()) {
    report.fail("parametric_ruleout: malformed certificate");
    return;
  }
  for (std::size_t i = 0; i < minors.size(); ++i) {
    const auto cols = minors[i].at("cols").get<std::vector<std::size_t>>();
    ParamPoly recomputed;
    try {
      recomputed = ruleout_minor(f, alpha, k, cols);
    } catch (const std::exception& e) {
      report.fail(std::string("parametric_ruleout minor: ") + e.what());
      return;
    }
    if (!(recomputed == poly_from_json(minors[i].at("poly"), su.m))) {
      report.fail("parametric_ruleout: stored minor " + std::to_string(i) +
                  " does not match recomputation");
      return;
    }
    total += poly_from_json(multipliers[i], su.m) * recomputed;
  }
  if (!(total == ParamPoly::constant(su.m, 1)))
    report.fail("parametric_ruleout: combination does not sum to 1");
}

namespace {

// (F^perp)_i = (alpha^2)_i: the kernel has the dimension of T_{i-2} and
// every basis vector is supported on alpha^2-divisible monomials.
bool graded_piece_is_alpha_squared(const Form& f, int x, int i) {
  const int n = f.nvars();
  const GradedPiece piece = apolar_graded_piece(f, i);
  if (piece.dim() != static_cast<std::size_t>(graded_dim(n, i - 2)))
    return false;
  for (const Form& theta : piece.basis)
    for (const auto& [e, c] : theta.terms())
      if (e[x] < 2) return false;
  return true;
}

Form lift_with_x(const Form& g, int n, int x) { return g.extended(n, x); }

// For n = 3 a random K fails the all-ell condition: the hyperplane through
// the power points of G on the rational normal curve meets the curve in one
// extra point where psi does not vanish, and a complex multiple of that
// direction drops the rank. Choosing K with psi o K = ell_1^k * m makes the
// hyperplane tangent at ell_1, so the whole intersection divisor lies in
// the zero set of psi and no bad ell exists. K stays random inside that
// stratum via the kernel of the differentiation map.
Form tangency_k_form(const Form& g, const Form& psi,
                     const std::vector<LinearForm>& points, int k, int d,
                     std::mt19937_64& rng) {
  const int m = g.nvars();
  const auto domain = monomial_basis(m, d);
  QMatrix diff_map(static_cast<std::size_t>(graded_dim(m, k + 1)),
                   domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const Form image = apply(psi, Form::monomial(m, domain[j]));
    if (image.is_zero()) continue;
    const auto v = image.coeff_vector();
    for (std::size_t i = 0; i < v.size(); ++i) diff_map.at(i, j) = v[i];
  }

  // derivatives of G, for the independence requirement on the target
  QMatrix derivatives(0, static_cast<std::size_t>(graded_dim(m, k + 1)));
  for (const Exponents& e : monomial_basis(m, k - 1))
    derivatives.append_row(apply(Form::monomial(m, e), g).coeff_vector());

  std::uniform_int_distribution<int> small(-4, 4);
  for (int attempt = 0; attempt < 64; ++attempt) {
    LinearForm dir;
    if (attempt < m) {
      dir.coeffs.assign(m, Rat(0));
      dir.coeffs[attempt] = 1;
    } else {
      dir.coeffs.assign(m, Rat(0));
      for (int v = 0; v < m; ++v) dir.coeffs[v] = small(rng);
      if (dir.is_zero()) continue;
    }
    const Form target = points[0].power(k) * dir.to_form();
    if (in_row_space(target.coeff_vector(), derivatives)) continue;
    const auto particular = solve(diff_map, target.coeff_vector());
    if (!particular) continue;  // cannot happen: differentiation is surjective
    std::vector<Rat> coeffs = *particular;
    for (const auto& kv : kernel_basis(diff_map)) {
      const int r = small(rng);
      if (r == 0) continue;
      for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += r * kv[i];
    }
    Form k_form = Form::from_coeff_vector(m, d, coeffs);
    // clear denominators; the conditions on K are scale invariant
    Int den = 1;
    for (const auto& [e, c] : k_form.terms())
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    return k_form * Rat(den);
  }
  throw GenericityError("tangency_k_form: no admissible direction found");
}

}  // namespace

Json ConstructionCertificate::to_json() const {
  Json j;
  j["schema"] = "waring-certificate/1";
  j["kind"] = "construction";
  j["n"] = n;
  j["d"] = d;
  j["k"] = k;
  j["s"] = s;
  j["nvars"] = n;
  j["degree"] = d;
  j["form"] = form_to_json(f, false);
  j["alpha"] = "a";
  j["G"] = form_to_json(g, false);
  j["K"] = form_to_json(k_form, false);
  j["psi"] = form_to_json(psi, true);
  j["seed"] = rng_seed;
  j["tries_used"] = tries_used;
  j["rigorous"] = rigorous;
  Json steps_json = Json::array();
  for (const CertStep& st : steps)
    steps_json.push_back(Json{{"name", st.name}, {"values", st.values}});
  j["steps"] = steps_json;
  j["bound"] = bound;
  return j;
}

ConstructionCertificate construct_high_rank(int n, int d,
                                            std::uint64_t rng_seed,
                                            int max_tries,
                                            RuleoutPolicy policy,
                                            const RuleoutOptions& options) {
  if (n < 3) throw std::invalid_argument("construct_high_rank: n >= 3");
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument(
        "construct_high_rank: d must be odd and at least 3 (even-degree "
        "lower bounds come from monomials)");
  const int k = (d - 1) / 2;
  const int m = n - 1;
  const long s = binomial(n + k - 2, k) - 1;
  const HSeq expected_hf = hseq_capped(m, d - 1, s);
  const long al_g_expected = algen(m, d - 1) - 1;

  std::mt19937_64 rng(rng_seed);
  std::map<std::string, int> failures;

  for (int attempt = 0; attempt < max_tries; ++attempt) {
    const std::uint64_t seed_g = rng();
    const std::uint64_t seed_k = rng();
    const std::uint64_t seed_ruleout = rng();

    // sample the s power points explicitly: the n = 3 choice of K needs them
    std::mt19937_64 grng(seed_g);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<LinearForm> points;
    std::vector<std::pair<Rat, LinearForm>> terms;
    for (long i = 0; i < s; ++i) {
      LinearForm ell;
      do {
        ell.coeffs.assign(m, Rat(0));
        for (int v = 0; v < m; ++v) ell.coeffs[v] = coeff(grng);
      } while (ell.is_zero());
      points.push_back(ell);
      terms.emplace_back(Rat(1), ell);
    }
    const Form g = power_sum(terms, d - 1);
    if (hilbert_function(g).values !=
        std::vector<long>(expected_hf.begin(), expected_hf.end())) {
      ++failures["hilbert_function_G"];
      continue;
    }
    Form psi;
    try {
      psi = find_psi(g, k);
    } catch (const GenericityError&) {
      ++failures["psi_dimension"];
      continue;
    }

    std::mt19937_64 krng(seed_k);
    Form k_form(m, d);
    if (n == 3) {
      try {
        k_form = tangency_k_form(g, psi, points, k, d, krng);
      } catch (const GenericityError&) {
        ++failures["tangency_K"];
        continue;
      }
    } else {
      for (const Exponents& e : monomial_basis(m, d))
        k_form.set_coeff(e, coeff(krng));
    }
    if (!check_K(g, psi, k_form, k)) {
      ++failures["check_K"];
      continue;
    }

    Exponents xe(n, 0);
    xe[0] = 1;
    const Form f = Form::monomial(n, xe) * lift_with_x(g, n, 0) +
                   lift_with_x(k_form, n, 0);

    bool pieces_ok = true;
    std::vector<long> piece_dims;
    for (int i = 2; i <= k; ++i) {
      if (!graded_piece_is_alpha_squared(f, 0, i)) {
        pieces_ok = false;
        break;
      }
      piece_dims.push_back(graded_dim(n, i - 2));
    }
    if (!pieces_ok) {
      ++failures["graded_pieces"];
      continue;
    }

    const Form alpha = Form::monomial(n, xe);
    RuleoutOptions opts = options;
    opts.seed = seed_ruleout;
    RuleoutResult ruleout;
    if (policy == RuleoutPolicy::randomized_only) {
      ruleout = parametric_ruleout(f, alpha, k, RuleoutMode::randomized, opts);
    } else {
      ruleout = parametric_ruleout(f, alpha, k, RuleoutMode::exact, opts);
      if (ruleout.status == RuleoutStatus::inconclusive &&
          policy == RuleoutPolicy::exact_then_randomized)
        ruleout =
            parametric_ruleout(f, alpha, k, RuleoutMode::randomized, opts);
    }
    if (ruleout.status == RuleoutStatus::refuted) {
      ++failures["parametric_ruleout"];
      continue;
    }
    if (ruleout.status == RuleoutStatus::inconclusive) {
      ++failures["parametric_inconclusive"];
      continue;
    }

    // success: assemble the certificate
    const long al_g = apolar_length(g);
    const long al_f = apolar_length(f);
    if (al_g != al_g_expected || al_f != 2 * (al_g + 1))
      throw std::logic_error("construct_high_rank: length bookkeeping failed");

    ConstructionCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.k = k;
    cert.s = s;
    cert.g = g;
    cert.k_form = k_form;
    cert.f = f;
    cert.psi = psi;
    cert.rng_seed = rng_seed;
    cert.tries_used = attempt + 1;
    cert.rigorous = ruleout.rigorous;
    cert.bound = al_g + 2;
    cert.steps.push_back(
        {"s_value", Json{{"s", s}, {"formula", "C(n+k-2,k) - 1"}}});
    cert.steps.push_back(
        {"hf_G", Json{{"values", hilbert_function(g).values},
                      {"expected", expected_hf}}});
    cert.steps.push_back(
        {"al_G", Json{{"al", al_g}, {"algen_minus_1", al_g_expected}}});
    cert.steps.push_back({"psi_in_Gperp", Json{{"dim", 1}}});
    cert.steps.push_back({"check_K", Json{{"passed", true}}});
    cert.steps.push_back(
        {"graded_pieces",
         Json{{"from", 2}, {"to", k}, {"dims", piece_dims}}});
    cert.steps.push_back({"parametric_ruleout", ruleout.details});
    cert.steps.push_back(
        {"bound_construction",
         Json{{"bound", cert.bound},
              {"algen", algen(m, d - 1)},
              {"al_f", al_f}}});
    return cert;
  }

  std::string worst = "none";
  int worst_count = 0;
  for (const auto& [name, count] : failures)
    if (count > worst_count) {
      worst = name;
      worst_count = count;
    }
  throw ConstructionFailure(
      "construction failed after " + std::to_string(max_tries) +
          " tries; most frequent failing check: " + worst + " (" +
          std::to_string(worst_count) + " times)",
      failures);
}

void check_construction_certificate(const Json& certificate,
                                    CheckReport& report) {
  const int n = certificate.at("n").get<int>();
  const int d = certificate.at("d").get<int>();
  const int k = certificate.at("k").get<int>();
  const long s = certificate.at("s").get<long>();
  const int m = n - 1;
  if (k != (d - 1) / 2 || d % 2 == 0) {
    report.fail("construction: k != (d-1)/2 or even degree");
    return;
  }
  if (s != binomial(n + k - 2, k) - 1)
    report.fail("construction: s does not match C(n+k-2,k) - 1");

  Form g, k_form, f, psi;
  try {
    g = form_from_json(certificate.at("G"), m, d - 1);
    k_form = form_from_json(certificate.at("K"), m, d);
    f = form_from_json(certificate.at("form"), n, d);
    psi = form_from_json(certificate.at("psi"), m, k);
  } catch (const std::exception& e) {
    report.fail(std::string("construction: unparseable forms: ") + e.what());
    return;
  }

  Exponents xe(n, 0);
  xe[0] = 1;
  if (!(Form::monomial(n, xe) * g.extended(n, 0) + k_form.extended(n, 0) ==
        f))
    report.fail("construction: F != x*G + K");

  const HSeq expected_hf = hseq_capped(m, d - 1, s);
  if (hilbert_function(g).values !=
      std::vector<long>(expected_hf.begin(), expected_hf.end()))
    report.fail("construction: HF(G) != H(n-1, d-1, s)");

  try {
    if (!(find_psi(g, k) == psi))
      report.fail("construction: psi does not match the degree-k generator");
  } catch (const GenericityError& e) {
    report.fail(std::string("construction: ") + e.what());
  }
  if (!apply(psi, g).is_zero())
    report.fail("construction: psi o G != 0");
  if (!check_K(g, psi, k_form, k))
    report.fail("construction: check_K fails");

  for (int i = 2; i <= k; ++i)
    if (!graded_piece_is_alpha_squared(f, 0, i))
      report.fail("construction: (F^perp)_" + std::to_string(i) +
                  " != (alpha^2)_" + std::to_string(i));

  const Form alpha = Form::monomial(n, xe);
  bool ruleout_seen = false;
  for (const Json& step : certificate.at("steps")) {
    if (step.at("name").get<std::string>() != "parametric_ruleout") continue;
    ruleout_seen = true;
    const Json& values = step.at("values");
    if (values.at("status").get<std::string>() != "proved") {
      report.fail("construction: rule-out step is not proved");
      continue;
    }
    check_ruleout_step(values, f, alpha, report);
    const bool exact = values.at("mode").get<std::string>() == "exact";
    if (certificate.at("rigorous").get<bool>() && !exact)
      report.fail("construction: rigorous flag set on a randomized rule-out");
  }
  if (!ruleout_seen) report.fail("construction: missing rule-out step");

  const long al_g = apolar_length(g);
  const long bound = certificate.at("bound").get<long>();
  if (al_g != algen(m, d - 1) - 1)
    report.fail("construction: al(G) != algen(n-1, d-1) - 1");
  if (apolar_length(f) != 2 * algen(m, d - 1))
    report.fail("construction: al(F) != 2 * algen(n-1, d-1)");
  if (bound != al_g + 2)
    report.fail("construction: bound != al(G) + 2");
}

BoundCertificate certify_explicit_quintic() {
  const Form f = parse_form("x*y*z^3 + y^4*z", 3);
  const Form alpha = parse_form("a", 3);
  BoundCertificate cert = improved_bound(f, alpha);
  cert.kind = "ruled_out";
  cert.steps.insert(
      cert.steps.begin(),
      {"hilbert_function", Json{{"values", hilbert_function(f).values}}});

  const RuleoutResult ruleout =
      parametric_ruleout(f, alpha, 2, RuleoutMode::exact);
  if (ruleout.status != RuleoutStatus::proved || !ruleout.rigorous)
    throw std::logic_error("quintic rule-out unexpectedly failed");
  cert.steps.push_back({"parametric_ruleout", ruleout.details});

  const long derksen = apolar_length(apply(alpha, f));
  cert.bound = derksen + 2;
  cert.steps.push_back(
      {"bound_ruled_out",
       Json{{"bound", cert.bound},
            {"derksen", derksen},
            {"al_f", apolar_length(f)},
            {"required_al_f", 2 * derksen + 2}}});
  return cert;
}

}  // namespace waring
