// Command-line surface for the apolarity / Waring rank toolkit: table
// reproduction, bound certification, the odd-degree constructor, witness
// verification, and the explicit ternary quintic. All certificate output is
// JSON; --pretty switches to a human-readable rendering.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "waring/commands.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WARING_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("WARING_SEED must be an integer");
    }
  }
  return 12345;
}

waring::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  waring::Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

int emit(const waring::CommandResult& result, bool pretty) {
  if (pretty)
    std::cout << waring::render_pretty(result.output);
  else
    std::cout << result.output.dump(2) << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "waring: exact apolarity invariants and Waring rank bound certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --pretty after the subcommand
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  // table
  auto* table = app.add_subcommand("table", "generic/monomial/lower-bound ranks");
  int table_n = 3, table_dmax = 12;
  table->add_option("n", table_n, "number of variables (3 or 4)")->required();
  table->add_option("dmax", table_dmax, "largest degree")->required();

  // bound
  auto* bound = app.add_subcommand("bound", "rank lower bound certificate");
  std::string bound_form, bound_alpha;
  int bound_nvars = 3, bound_extra = 5;
  std::uint64_t bound_seed = 0;
  bool bound_check = false, bound_seed_set = false;
  bound->add_option("form", bound_form, "the form, e.g. \"x*y^2*z^2\"")->required();
  bound->add_option("nvars", bound_nvars, "number of variables")->required();
  bound->add_option("--alpha", bound_alpha, "dual linear form (default: search)");
  bound->add_option("--extra-alphas", bound_extra, "random alphas to try");
  bound->add_option("--seed", bound_seed, "RNG seed")->each([&](const std::string&) {
    bound_seed_set = true;
  });
  bound->add_flag("--check", bound_check, "replay the certificate");

  // construct
  auto* construct = app.add_subcommand(
      "construct", "odd-degree form with rank > algen(n-1, d-1)");
  int cons_n = 3, cons_d = 5, cons_tries = 50;
  std::uint64_t cons_seed = 0;
  bool cons_seed_set = false, cons_check = false, cons_exact = false;
  std::string cons_policy = "auto";
  construct->add_option("n", cons_n, "number of variables")->required();
  construct->add_option("d", cons_d, "degree (odd)")->required();
  construct->add_option("--seed", cons_seed, "RNG seed")->each(
      [&](const std::string&) { cons_seed_set = true; });
  construct->add_option("--max-tries", cons_tries, "resampling budget");
  construct->add_option("--ruleout", cons_policy,
                        "rule-out policy: auto|exact|randomized");
  construct->add_flag("--exact-ruleout", cons_exact,
                      "exact rule-out only (no randomized fallback)");
  construct->add_flag("--check", cons_check, "replay the certificate");

  // verify
  auto* verify = app.add_subcommand("verify", "check an exact decomposition");
  std::string verify_form, verify_file;
  int verify_nvars = 3;
  verify->add_option("form", verify_form, "the form")->required();
  verify->add_option("nvars", verify_nvars, "number of variables")->required();
  verify->add_option("file", verify_file, "decomposition JSON file")->required();

  // quintic
  auto* quintic = app.add_subcommand(
      "quintic", "full rank-10 certificate for x*y*z^3 + y^4*z");
  std::uint64_t quintic_seed = 0;
  bool quintic_seed_set = false, quintic_check = false;
  quintic->add_option("--seed", quintic_seed, "RNG seed")->each(
      [&](const std::string&) { quintic_seed_set = true; });
  quintic->add_flag("--check", quintic_check, "replay the lower certificate");

  // hilbert
  auto* hilbert = app.add_subcommand(
      "hilbert", "Hilbert function, apolar length, generator degrees");
  std::string hilbert_form;
  int hilbert_nvars = 3;
  hilbert->add_option("form", hilbert_form, "the form")->required();
  hilbert->add_option("nvars", hilbert_nvars, "number of variables")->required();

  // binary-rank
  auto* binary = app.add_subcommand("binary-rank", "exact rank of a binary form");
  std::string binary_form;
  binary->add_option("form", binary_form, "binary form in x, y")->required();

  // decompose
  auto* decompose = app.add_subcommand(
      "decompose", "numerical power-sum fit (evidence, not a certificate)");
  std::string dec_form;
  int dec_nvars = 3, dec_rank = 1, dec_restarts = 20;
  double dec_tol = 1e-8;
  std::uint64_t dec_seed = 0;
  bool dec_seed_set = false;
  decompose->add_option("form", dec_form, "the form")->required();
  decompose->add_option("nvars", dec_nvars, "number of variables")->required();
  decompose->add_option("--rank", dec_rank, "number of powers")->required();
  decompose->add_option("--tol", dec_tol, "relative residual target");
  decompose->add_option("--seed", dec_seed, "RNG seed")->each(
      [&](const std::string&) { dec_seed_set = true; });
  decompose->add_option("--restarts", dec_restarts, "random restarts");

  // check
  auto* check = app.add_subcommand("check", "re-verify a certificate file");
  std::string check_file;
  check->add_option("file", check_file, "certificate JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*table) return emit(waring::cmd_table(table_n, table_dmax), pretty);
    if (*bound)
      return emit(waring::cmd_bound(bound_form, bound_nvars, bound_alpha,
                                    bound_extra,
                                    bound_seed_set ? bound_seed : default_seed(),
                                    bound_check),
                  pretty);
    if (*construct) {
      if (cons_exact) cons_policy = "exact";
      return emit(waring::cmd_construct(
                      cons_n, cons_d,
                      cons_seed_set ? cons_seed : default_seed(), cons_tries,
                      cons_policy, cons_check),
                  pretty);
    }
    if (*verify)
      return emit(waring::cmd_verify(verify_form, verify_nvars,
                                     read_json_file(verify_file)),
                  pretty);
    if (*quintic)
      return emit(waring::cmd_quintic(
                      quintic_seed_set ? quintic_seed : default_seed(),
                      quintic_check),
                  pretty);
    if (*hilbert)
      return emit(waring::cmd_hilbert(hilbert_form, hilbert_nvars), pretty);
    if (*binary) return emit(waring::cmd_binary_rank(binary_form), pretty);
    if (*decompose)
      return emit(waring::cmd_decompose(dec_form, dec_nvars, dec_rank, dec_tol,
                                        dec_seed_set ? dec_seed : default_seed(),
                                        dec_restarts),
                  pretty);
    if (*check)
      return emit(waring::cmd_check(read_json_file(check_file)), pretty);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
