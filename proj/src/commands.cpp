#include "waring/commands.hpp"

#include <sstream>

#include "waring/bounds.hpp"
#include "waring/construct.hpp"
#include "waring/decompose.hpp"
#include "waring/tables.hpp"

namespace waring {

CommandResult cmd_table(int n, int dmax) {
  CommandResult res;
  res.output["command"] = "table";
  res.output["n"] = n;
  Json rows = Json::array();
  for (const TableRow& row : rank_table(n, dmax)) {
    Json j;
    j["d"] = row.d;
    j["generic"] = row.generic;
    j["monomial_max"] = row.monomial_max;
    j["lower"] = row.lower;
    j["lower_source"] = row.lower_source;
    if (row.upper_literature) {
      j["upper_literature"] = *row.upper_literature;
      j["upper_source"] = *row.upper_source;
      j["upper_computed"] = false;  // static data from the cited sources
    }
    rows.push_back(j);
  }
  res.output["rows"] = rows;
  return res;
}

namespace {

Json run_check(const Json& certificate) {
  const CheckReport report = check_certificate(certificate);
  Json j;
  j["ok"] = report.ok;
  j["failures"] = report.failures;
  return j;
}

}  // namespace

CommandResult cmd_bound(const std::string& form_text, int nvars,
                        const std::string& alpha_text, int extra_alphas,
                        std::uint64_t seed, bool check) {
  const Form f = parse_form(form_text, nvars);
  BoundCertificate cert;
  if (!alpha_text.empty()) {
    cert = improved_bound(f, parse_form(alpha_text, nvars, 1));
  } else {
    cert = best_bound(f, extra_alphas, seed);
  }
  CommandResult res;
  res.output = cert.to_json();
  if (check) {
    res.output["check"] = run_check(res.output);
    if (!res.output["check"]["ok"].get<bool>()) res.exit_code = 2;
  }
  return res;
}

CommandResult cmd_construct(int n, int d, std::uint64_t seed, int max_tries,
                            const std::string& ruleout_policy, bool check) {
  RuleoutPolicy policy = RuleoutPolicy::exact_then_randomized;
  if (ruleout_policy == "exact")
    policy = RuleoutPolicy::exact_only;
  else if (ruleout_policy == "randomized")
    policy = RuleoutPolicy::randomized_only;
  else if (ruleout_policy != "auto")
    throw std::invalid_argument("ruleout policy must be auto|exact|randomized");

  CommandResult res;
  try {
    const ConstructionCertificate cert =
        construct_high_rank(n, d, seed, max_tries, policy);
    res.output = cert.to_json();
    if (check) {
      res.output["check"] = run_check(res.output);
      if (!res.output["check"]["ok"].get<bool>()) res.exit_code = 2;
    }
  } catch (const ConstructionFailure& e) {
    res.output["command"] = "construct";
    res.output["error"] = e.what();
    Json counts;
    int inconclusive = 0, total = 0;
    for (const auto& [name, count] : e.failure_counts) {
      counts[name] = count;
      total += count;
      if (name == "parametric_inconclusive") inconclusive = count;
    }
    res.output["failure_counts"] = counts;
    res.exit_code = (2 * inconclusive > total) ? 3 : 2;
  }
  return res;
}

CommandResult cmd_verify(const std::string& form_text, int nvars,
                         const Json& decomposition) {
  const Form f = parse_form(form_text, nvars);
  const Decomposition dec = Decomposition::from_json(decomposition);
  CommandResult res;
  res.output["command"] = "verify";
  res.output["form"] = f.str();
  const bool ok = verify_decomposition(f, dec);
  res.output["verified"] = ok;
  if (ok) res.output["rank_upper"] = dec.terms.size();
  res.exit_code = ok ? 0 : 2;
  return res;
}

CommandResult cmd_quintic(std::uint64_t seed, bool check) {
  const Form f = parse_form("x*y*z^3 + y^4*z", 3);
  const Form f1 = parse_form("x*y*z^3 - 2*y^2*z^3 - 1/5*z^5", 3);
  const Form f2 = parse_form("y^4*z + 2*y^2*z^3 + 1/5*z^5", 3);

  CommandResult res;
  res.output["command"] = "quintic";
  res.output["form"] = f.str();

  const BoundCertificate lower = certify_explicit_quintic();
  res.output["lower_certificate"] = lower.to_json();

  // upper bound 10 = 8 (complete intersection piece) + 2 (binary piece)
  Json upper;
  upper["split"] = Json{{"f1", f1.str()}, {"f2", f2.str()}};
  if (!(f1 + f2 == f)) throw std::logic_error("quintic split does not sum");
  upper["split_sums_to_form"] = true;
  const auto ci = ci_rank(f1);
  if (!ci) throw std::logic_error("quintic CI piece not recognized");
  upper["ci"] = Json{{"rank", ci->first}, {"degrees", ci->second}};
  const BinaryRankResult br = binary_rank(f2.restricted(0));
  Json binary;
  binary["rank"] = br.rank;
  if (br.witness) {
    // lift the binary points back to three variables
    Decomposition lifted;
    lifted.degree = br.witness->degree;
    for (const auto& [c, point] : br.witness->terms) {
      std::vector<Rat> p = point;
      p.insert(p.begin(), Rat(0));
      lifted.terms.emplace_back(c, p);
    }
    if (!verify_decomposition(f2, lifted))
      throw std::logic_error("quintic binary witness failed verification");
    binary["witness"] = lifted.to_json();
  }
  upper["binary"] = binary;
  upper["bound"] = ci->first + br.rank;
  res.output["upper"] = upper;
  res.output["rank"] = lower.bound;  // lower 10 meets upper 10

  const NumericalFit fit = numerical_decompose(f, 10, 1e-8, seed, 20);
  Json numerical;
  numerical["residual"] = fit.residual;
  numerical["rank"] = 10;
  numerical["witness"] = fit.dec.to_json();
  numerical["evidence_only"] = true;
  res.output["numerical"] = numerical;

  if (check) {
    res.output["check"] = run_check(res.output["lower_certificate"]);
    if (!res.output["check"]["ok"].get<bool>()) res.exit_code = 2;
  }
  return res;
}

CommandResult cmd_hilbert(const std::string& form_text, int nvars) {
  const Form f = parse_form(form_text, nvars);
  CommandResult res;
  res.output["command"] = "hilbert";
  res.output["form"] = f.str();
  res.output["hilbert_function"] = hilbert_function(f).values;
  res.output["apolar_length"] = apolar_length(f);
  Json degrees = Json::array();
  for (const auto& [deg, g] : minimal_generators(f, f.degree() + 1))
    degrees.push_back(deg);
  res.output["generator_degrees"] = degrees;
  return res;
}

CommandResult cmd_binary_rank(const std::string& form_text) {
  const Form f = parse_form(form_text, 2);
  const BinaryRankResult r = binary_rank(f);
  CommandResult res;
  res.output["command"] = "binary_rank";
  res.output["form"] = f.str();
  res.output["rank"] = r.rank;
  Json gens = Json::array();
  for (const auto& [deg, g] : r.generators)
    gens.push_back(Json{{"degree", deg}, {"form", g.str(true)}});
  res.output["generators"] = gens;
  if (r.witness)
    res.output["witness"] = r.witness->to_json();
  else
    res.output["witness"] = nullptr;
  return res;
}

CommandResult cmd_decompose(const std::string& form_text, int nvars, int rank,
                            double tol, std::uint64_t seed, int restarts) {
  const Form f = parse_form(form_text, nvars);
  const NumericalFit fit = numerical_decompose(f, rank, tol, seed, restarts);
  CommandResult res;
  res.output["command"] = "decompose";
  res.output["form"] = f.str();
  res.output["rank"] = rank;
  res.output["tol"] = tol;
  res.output["seed"] = seed;
  res.output["residual"] = fit.residual;
  res.output["converged"] = fit.residual <= tol;
  res.output["witness"] = fit.dec.to_json();
  res.output["evidence_only"] = true;
  return res;
}

CommandResult cmd_check(const Json& certificate) {
  CommandResult res;
  res.output["command"] = "check";
  res.output["check"] = run_check(certificate);
  if (!res.output["check"]["ok"].get<bool>()) res.exit_code = 2;
  return res;
}

namespace {

void pretty_table(const Json& output, std::ostringstream& os) {
  os << "rank table, n = " << output.at("n").get<int>() << "\n";
  os << "  d   generic  monomial  lower  source        upper (literature)\n";
  for (const Json& row : output.at("rows")) {
    char line[160];
    std::string upper = "-";
    if (row.contains("upper_literature"))
      upper = std::to_string(row.at("upper_literature").get<long>());
    std::snprintf(line, sizeof(line), "%3d   %7ld  %8ld  %5ld  %-12s  %s\n",
                  row.at("d").get<int>(), row.at("generic").get<long>(),
                  row.at("monomial_max").get<long>(),
                  row.at("lower").get<long>(),
                  row.at("lower_source").get<std::string>().c_str(),
                  upper.c_str());
    os << line;
  }
}

}  // namespace

std::string render_pretty(const Json& output) {
  std::ostringstream os;
  const std::string command = output.value("command", "");
  if (command == "table") {
    pretty_table(output, os);
    return os.str();
  }
  if (command == "hilbert") {
    os << "form: " << output.at("form").get<std::string>() << "\n";
    os << "hilbert function:";
    for (const Json& v : output.at("hilbert_function")) os << " " << v;
    os << "\napolar length: " << output.at("apolar_length") << "\n";
    os << "generator degrees:";
    for (const Json& v : output.at("generator_degrees")) os << " " << v;
    os << "\n";
    return os.str();
  }
  if (command == "quintic") {
    os << "form: " << output.at("form").get<std::string>() << "\n";
    os << "lower bound: " << output.at("lower_certificate").at("bound")
       << " (exact certificate)\n";
    os << "upper bound: " << output.at("upper").at("bound")
       << " = " << output.at("upper").at("ci").at("rank") << " (CI piece) + "
       << output.at("upper").at("binary").at("rank") << " (binary piece)\n";
    os << "rank: " << output.at("rank") << "\n";
    os << "numerical witness residual: "
       << output.at("numerical").at("residual").get<double>() << "\n";
    return os.str();
  }
  if (output.contains("bound")) {
    os << "kind: " << output.value("kind", "?") << "\n";
    if (output.contains("form") && output.at("form").is_string())
      os << "form: " << output.at("form").get<std::string>() << "\n";
    os << "bound: " << output.at("bound") << "\n";
    if (output.contains("rigorous"))
      os << "rigorous: " << (output.at("rigorous").get<bool>() ? "yes" : "no")
         << "\n";
    if (output.contains("check"))
      os << "check: "
         << (output.at("check").at("ok").get<bool>() ? "ok" : "FAILED") << "\n";
    return os.str();
  }
  // generic fallback: compact JSON
  return output.dump(2) + "\n";
}

}  // namespace waring
