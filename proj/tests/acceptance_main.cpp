// Acceptance suite: one pass/fail line per criterion. Exercises the command
// layer directly plus the installed CLI binary (path in argv[1]) for output
// determinism and runtime checks.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "waring/commands.hpp"
#include "waring/construct.hpp"
#include "waring/decompose.hpp"
#include "waring/tables.hpp"

using namespace waring;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string cli_path;

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string command = cli_path + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer;
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    output.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

Form random_form(std::mt19937_64& rng, int nvars, int degree) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  Form f(nvars, degree);
  for (const Exponents& e : monomial_basis(nvars, degree))
    f.set_coeff(e, coeff(rng));
  if (f.is_zero()) f.set_coeff(monomial_basis(nvars, degree).front(), 1);
  return f;
}

bool same_span(const std::vector<Form>& a, const std::vector<Form>& b,
               int nvars, int degree) {
  const std::size_t width = static_cast<std::size_t>(graded_dim(nvars, degree));
  QMatrix ma(0, width), mb(0, width), mboth(0, width);
  for (const Form& f : a) {
    ma.append_row(f.coeff_vector());
    mboth.append_row(f.coeff_vector());
  }
  for (const Form& f : b) {
    mb.append_row(f.coeff_vector());
    mboth.append_row(f.coeff_vector());
  }
  const std::size_t ra = rank_of(ma);
  return ra == rank_of(mb) && rank_of(mboth) == ra;
}

// ---- criterion 1: table reproduction -------------------------------------

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const Json t3 = cmd_table(3, 12).output;
  const Json t4 = cmd_table(4, 10).output;
  const double dt = seconds_since(t0);

  const std::vector<long> gen3 = {4, 6, 7, 10, 12, 15, 19, 22, 26, 31};
  const std::vector<long> mon3 = {4, 6, 9, 12, 16, 20, 25, 30, 36, 42};
  const std::vector<long> low3 = {5, 7, 10, 12, 17, 20, 26, 30, 37, 42};
  const std::vector<long> gen4 = {5, 10, 14, 21, 30, 42, 55, 72};
  const std::vector<long> mon4 = {4, 8, 12, 18, 27, 36, 48, 64};
  const std::vector<long> low4 = {7, 10, 15, 21, 31, 42, 56, 72};

  bool ok = true;
  for (std::size_t i = 0; i < gen3.size(); ++i) {
    const Json& row = t3.at("rows")[i];
    ok = ok && row.at("generic") == gen3[i] &&
         row.at("monomial_max") == mon3[i] && row.at("lower") == low3[i];
  }
  for (std::size_t i = 0; i < gen4.size(); ++i) {
    const Json& row = t4.at("rows")[i];
    ok = ok && row.at("generic") == gen4[i] &&
         row.at("monomial_max") == mon4[i] && row.at("lower") == low4[i];
  }
  report(1, "table 3/12 and 4/10 reproduce the generic and monomial rows", ok);
  report(1, "table runtime under 1 s", dt < 1.0,
         "took " + std::to_string(dt) + " s");
  const auto [code, text] = run_cli("table 3 12");
  report(1, "CLI table command runs clean", code == 0 && !text.empty());
}

// ---- criterion 2: quintic certificate ------------------------------------

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const BoundCertificate lower = certify_explicit_quintic();
  const double exact_time = seconds_since(t0);

  bool steps_ok = lower.bound == 10;
  auto step_value = [&](const std::string& name,
                        const std::string& key) -> Json {
    for (const CertStep& s : lower.steps)
      if (s.name == name) return s.values.at(key);
    return Json();
  };
  steps_ok = steps_ok &&
             step_value("hilbert_function", "values") ==
                 Json(std::vector<long>{1, 3, 5, 5, 3, 1}) &&
             step_value("improvement_check", "al_f") == 18 &&
             step_value("al_alpha_f", "al") == 8 &&
             step_value("al_alpha2_f", "al") == 0;
  bool parametric_exact = false;
  for (const CertStep& s : lower.steps)
    if (s.name == "parametric_ruleout")
      parametric_exact = s.values.at("mode") == "exact" &&
                         s.values.at("status") == "proved";
  report(2, "quintic lower chain has the published step values",
         steps_ok && parametric_exact && lower.rigorous);
  report(2, "exact chain under 10 s", exact_time < 10.0,
         "took " + std::to_string(exact_time) + " s");

  const auto t1 = std::chrono::steady_clock::now();
  const NumericalFit fit = numerical_decompose(
      parse_form("x*y*z^3 + y^4*z", 3), 10, 1e-8, 12345, 20);
  const double fit_time = seconds_since(t1);
  report(2, "numerical rank-10 witness residual <= 1e-8",
         fit.residual <= 1e-8, "residual " + std::to_string(fit.residual));
  report(2, "numerical fit under 60 s", fit_time < 60.0,
         "took " + std::to_string(fit_time) + " s");
}

// ---- criterion 3: constructions ------------------------------------------

void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::tuple<int, int, long>> cases = {
      {3, 5, 10}, {3, 7, 17}, {3, 9, 26}, {4, 5, 15}};
  for (const auto& [n, d, expected] : cases) {
    const std::string name = "construct " + std::to_string(n) + " " +
                             std::to_string(d) + " certifies bound " +
                             std::to_string(expected);
    try {
      const ConstructionCertificate cert =
          construct_high_rank(n, d, 12345, 50);
      const bool bound_ok = cert.bound == expected;
      // (4,5) may legitimately fall back to a flagged randomized rule-out
      const bool rigor_ok = cert.rigorous || n == 4;
      const CheckReport replay = check_certificate(cert.to_json());
      report(3, name, bound_ok && rigor_ok && replay.ok,
             std::string("rigorous=") + (cert.rigorous ? "yes" : "no") +
                 ", tries=" + std::to_string(cert.tries_used));
    } catch (const ConstructionFailure& e) {
      report(3, name, false, e.what());
    }
  }
  // re-verification through the CLI --check flag
  const auto [code, text] = run_cli("construct 3 5 --seed 12345 --check");
  bool cli_ok = code == 0;
  if (cli_ok) {
    const Json j = Json::parse(text);
    cli_ok = j.at("check").at("ok").get<bool>() && j.at("bound") == 10;
  }
  report(3, "CLI construct --check replays its own certificate", cli_ok);
  const double dt = seconds_since(t0);
  report(3, "constructions under 5 minutes total", dt < 300.0,
         "took " + std::to_string(dt) + " s");
}

// ---- criterion 4: monomial ranks ------------------------------------------

void criterion4() {
  bool ok = monomial_rank({1, 2, 2}) == 9 && monomial_rank({1, 1, 1}) == 4;
  for (int d = 3; d <= 15 && ok; ++d) {
    const long closed =
        d % 2 == 1 ? ((d + 1) / 2) * ((d + 1) / 2) : d * (d + 2) / 4;
    ok = max_monomial_rank(3, d) == closed;
  }
  report(4, "monomial ranks match the closed forms for 3 <= d <= 15", ok);
}

// ---- criterion 5: identity suites -----------------------------------------

void criterion5() {
  std::mt19937_64 rng(20240601);

  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int d = 2 + static_cast<int>(rng() % 6);
    const HilbertFunction h = hilbert_function(random_form(rng, n, d));
    for (int i = 0; i <= d; ++i)
      if (h.values[i] != h.values[d - i]) ++bad;
  }
  report(5, "gorenstein symmetry on 200 random forms", bad == 0,
         std::to_string(bad) + " failures");

  bad = 0;
  int done = 0;
  while (done < 100) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int d = 3 + static_cast<int>(rng() % 3);
    const int td = 1 + static_cast<int>(rng() % 2);
    const int i = 1 + static_cast<int>(rng() % (d - td));
    const Form f = random_form(rng, n, d);
    const Form theta = random_form(rng, n, td);
    const GradedPiece via = colon_piece(f, theta, i);
    // brute-force membership: psi with psi*theta in span (f^perp)_{i+td}
    const auto perp = apolar_graded_piece(f, i + td);
    QMatrix span(0, static_cast<std::size_t>(graded_dim(n, i + td)));
    for (const Form& g : perp.basis) span.append_row(g.coeff_vector());
    const RrefResult red = rref(span);
    QMatrix residuals(0, static_cast<std::size_t>(graded_dim(n, i + td)));
    for (const Exponents& e : monomial_basis(n, i)) {
      std::vector<Rat> v = (Form::monomial(n, e) * theta).coeff_vector();
      for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
        const Rat factor = v[red.pivot_cols[r]];
        if (factor == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
          v[j] -= factor * red.reduced.at(r, j);
      }
      residuals.append_row(v);
    }
    std::vector<Form> brute;
    for (const auto& kv : kernel_basis(residuals.transposed()))
      brute.push_back(Form::from_coeff_vector(n, i, kv));
    if (!same_span(via.basis, brute, n, i)) ++bad;
    ++done;
  }
  report(5, "colon identity on 100 random (f, theta) pairs", bad == 0,
         std::to_string(bad) + " failures");

  bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int ng = 1 + static_cast<int>(rng() % 2);
    const int nh = 1 + static_cast<int>(rng() % 2);
    const Form g = random_form(rng, ng, 2 + static_cast<int>(rng() % 2));
    const Form h = random_form(rng, nh, 2 + static_cast<int>(rng() % 2));
    if (apolar_length(g.extended(ng + nh, ng) * h.extended(ng + nh, 0)) !=
        apolar_length(g) * apolar_length(h))
      ++bad;
  }
  report(5, "tensor factorization of apolar length on 50 disjoint pairs",
         bad == 0, std::to_string(bad) + " failures");

  bad = 0;
  for (int d = 3; d <= 21; d += 2)
    if (algen(3, d - 1) != generic_rank(4, d)) ++bad;
  report(5, "algen(3, d-1) = generic_rank(4, d) for odd d <= 21", bad == 0);

  bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int b = 1 + static_cast<int>(rng() % 3);
    const int a = static_cast<int>(rng() % (6 - b));
    const Form psi = random_form(rng, n, b);
    const auto domain = monomial_basis(n, a + b);
    QMatrix m(domain.size(), static_cast<std::size_t>(graded_dim(n, a)));
    for (std::size_t r = 0; r < domain.size(); ++r) {
      const Form image = apply(psi, Form::monomial(n, domain[r]));
      if (image.is_zero()) continue;
      const auto v = image.coeff_vector();
      for (std::size_t c = 0; c < v.size(); ++c) m.at(r, c) = v[c];
    }
    if (rank_of(m) != static_cast<std::size_t>(graded_dim(n, a))) ++bad;
  }
  report(5, "differentiation surjectivity for 100 random psi", bad == 0,
         std::to_string(bad) + " failures");
}

// ---- criterion 6: soundness coupling ---------------------------------------

// binary gcd via univariate remainders in the first chart plus the
// multiplicity at [1:0]
Form binary_form_gcd(const Form& g, const Form& h) {
  auto dehom = [](const Form& q) {
    std::vector<Rat> p(q.degree() + 1, Rat(0));
    for (const auto& [e, c] : q.terms()) p[e[0]] = c;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
  };
  auto poly_gcd = [](std::vector<Rat> x, std::vector<Rat> y) {
    auto trim = [](std::vector<Rat> v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
      return v;
    };
    x = trim(x);
    y = trim(y);
    while (!y.empty()) {
      while (x.size() >= y.size() && !x.empty()) {
        const Rat f = x.back() / y.back();
        const std::size_t shift = x.size() - y.size();
        for (std::size_t q = 0; q < y.size(); ++q) x[shift + q] -= f * y[q];
        x = trim(x);
      }
      std::swap(x, y);
    }
    return x;
  };
  const auto pg = dehom(g), ph = dehom(h);
  const int inf = std::min(g.degree() - (static_cast<int>(pg.size()) - 1),
                           h.degree() - (static_cast<int>(ph.size()) - 1));
  const auto gc = poly_gcd(pg, ph);
  Form out(2, static_cast<int>(gc.size()) - 1 + inf);
  for (std::size_t q = 0; q < gc.size(); ++q)
    if (gc[q] != 0)
      out.set_coeff(
          {static_cast<int>(q), out.degree() - static_cast<int>(q)}, gc[q]);
  return out;
}

// least r with a squarefree element in (f^perp)_r: a 1-dimensional piece is
// checked directly; a larger piece has a squarefree member iff its gcd is
// squarefree (the system is base-point free away from the gcd)
long sylvester_oracle(const Form& f) {
  for (int r = 1; r <= f.degree(); ++r) {
    const GradedPiece piece = apolar_graded_piece(f, r);
    if (piece.dim() == 0) continue;
    if (piece.dim() == 1) {
      if (squarefree_binary(piece.basis[0])) return r;
      continue;
    }
    Form g = piece.basis[0];
    for (std::size_t i = 1; i < piece.dim(); ++i)
      g = binary_form_gcd(g, piece.basis[i]);
    if (g.degree() == 0 || squarefree_binary(g)) return r;
  }
  return f.degree();
}

void criterion6() {
  struct CorpusEntry {
    Form form;
    long upper;  // verified or known-exact upper bound
  };
  std::vector<CorpusEntry> corpus;
  corpus.push_back({parse_form("x*y*z^3 + y^4*z", 3), 10});
  corpus.push_back(
      {parse_form("x*y*z^3 - 2*y^2*z^3 - 1/5*z^5", 3),
       ci_rank(parse_form("x*y*z^3 - 2*y^2*z^3 - 1/5*z^5", 3))->first});
  corpus.push_back(
      {parse_form("y^4*z + 2*y^2*z^3 + 1/5*z^5", 3),
       binary_rank(parse_form("y^4*z + 2*y^2*z^3 + 1/5*z^5", 3).restricted(0))
           .rank});
  corpus.push_back({parse_form("x*y*z", 3), 4});  // four-cube witness
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 7; ++d)
      for (const Exponents& e : monomial_basis(n, d)) {
        bool positive = true;
        for (int v : e) positive = positive && v >= 1;
        if (!positive) continue;
        std::vector<int> exps(e.begin(), e.end());
        corpus.push_back({Form::monomial(n, e), monomial_rank(exps)});
      }

  int bad = 0;
  for (const CorpusEntry& entry : corpus) {
    const BoundCertificate cert = best_bound(entry.form, 5, 20240601);
    if (cert.bound > entry.upper) ++bad;
  }
  report(6, "certified lower bounds never exceed verified upper bounds",
         bad == 0,
         std::to_string(corpus.size()) + " corpus forms, " +
             std::to_string(bad) + " violations");

  // binary_rank vs the defining characterization, all coeffs in {-1,0,1}
  bad = 0;
  long checked = 0;
  for (int d = 1; d <= 5; ++d) {
    const auto basis = monomial_basis(2, d);
    long count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) count *= 3;
    for (long code = 0; code < count; ++code) {
      long rest = code;
      Form f(2, d);
      for (const Exponents& e : basis) {
        const int c = static_cast<int>(rest % 3) - 1;
        rest /= 3;
        if (c != 0) f.set_coeff(e, c);
      }
      if (f.is_zero()) continue;
      ++checked;
      if (binary_rank(f).rank != sylvester_oracle(f)) ++bad;
    }
  }
  report(6, "binary_rank matches the brute-force oracle (deg <= 5)", bad == 0,
         std::to_string(checked) + " forms checked");
}

// ---- criterion 7: upper-bound witnesses ------------------------------------

void criterion7() {
  Decomposition cubes;
  cubes.degree = 3;
  cubes.terms = {
      {rat(1, 24), {Rat(1), Rat(1), Rat(1)}},
      {rat(-1, 24), {Rat(1), Rat(1), Rat(-1)}},
      {rat(-1, 24), {Rat(1), Rat(-1), Rat(1)}},
      {rat(-1, 24), {Rat(-1), Rat(1), Rat(1)}},
  };
  report(7, "four-cube identity verifies for xyz (r <= 4)",
         verify_decomposition(parse_form("x*y*z", 3), cubes));

  const Form f2 = parse_form("y^4*z + 2*y^2*z^3 + 1/5*z^5", 3);
  Decomposition binary;
  binary.degree = 5;
  binary.terms = {
      {rat(1, 10), {Rat(0), Rat(1), Rat(1)}},
      {rat(-1, 10), {Rat(0), Rat(1), Rat(-1)}},
  };
  report(7, "rank-2 witness verifies for the binary quintic piece",
         verify_decomposition(f2, binary));

  const auto ci = ci_rank(parse_form("x*y*z^3 - 2*y^2*z^3 - 1/5*z^5", 3));
  report(7, "ci_rank returns 8 with degrees (2,2,4)",
         ci && ci->first == 8 && ci->second == std::vector<int>{2, 2, 4});
}

// ---- CLI determinism (External Interfaces) ---------------------------------

void cli_determinism() {
  const auto a = run_cli("construct 3 5 --seed 7");
  const auto b = run_cli("construct 3 5 --seed 7");
  report(0, "fixed seed gives byte-identical CLI output",
         a.first == 0 && a.second == b.second && !a.second.empty());
  const auto env = run_cli("construct 3 5 --seed 7");
  const auto via_env = [&] {
    const std::string command = "WARING_SEED=7 " + cli_path +
                                " construct 3 5 2>/dev/null";
    std::array<char, 4096> buffer;
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return std::string();
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
      output.append(buffer.data(), got);
    pclose(pipe);
    return output;
  }();
  report(0, "WARING_SEED environment override matches --seed",
         !via_env.empty() && via_env == env.second);
  const auto c = run_cli("quintic --seed 7 --check");
  bool ok = c.first == 0;
  if (ok) {
    const Json j = Json::parse(c.second);
    ok = j.at("check").at("ok").get<bool>() && j.at("rank") == 10;
  }
  report(0, "CLI quintic --check re-verifies the rank-10 certificate", ok);
}

}  // namespace

int main(int argc, char** argv) {
  cli_path = argc > 1 ? argv[1] : "./waring";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  cli_determinism();
  if (failures == 0)
    std::cout << "all acceptance criteria passed" << std::endl;
  else
    std::cout << failures << " acceptance checks failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
