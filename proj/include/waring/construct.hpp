#ifndef WARING_CONSTRUCT_HPP
#define WARING_CONSTRUCT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring/bounds.hpp"
#include "waring/certificate.hpp"
#include "waring/parampoly.hpp"

namespace waring {

// Sum of s d-th powers of random linear forms with integer coefficients
// in [-9, 9], each power taken with coefficient 1.
Form random_power_sum(int n, int d, int s, std::uint64_t rng_seed);

// The unique-up-to-scale degree-k element of G^perp inside the dual ring
// of G's own variables, normalized to coprime integer coefficients with a
// positive leading coefficient. Throws GenericityError when the piece is
// not 1-dimensional.
Form find_psi(const Form& g, int k);

struct GenericityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// True iff psi o K lies outside the span of the (k-1)st derivatives of G.
bool check_K(const Form& g, const Form& psi, const Form& k_form, int k);

enum class RuleoutMode { exact, randomized };

enum class RuleoutStatus { proved, refuted, inconclusive };

struct RuleoutOptions {
  int degree_cap = -1;     // multiplier degree cap; default 2x the minor degree
  int max_minors = 24;     // symbolic minors fed to the certificate search
  int random_samples = 200;  // randomized mode sample count
  std::uint64_t seed = 1;
};

struct RuleoutResult {
  RuleoutStatus status = RuleoutStatus::inconclusive;
  bool rigorous = false;               // true only for exact proofs
  std::optional<LinearForm> witness;   // a bad ell, when refuted
  Json details;                        // serializable certificate step
};

// Certifies that ((F - ell^d)^perp)_k = (alpha^2)_k for every linear form
// ell in the non-distinguished variables. alpha must be a coordinate dual
// variable with alpha^2 o F = 0. Exact mode builds the parametric
// catalecticant in degree k, extracts maximal minors (rational cofactor
// determinants; the parametric part of each row is rank one), and searches
// for a degree-capped Nullstellensatz combination sum p_i * m_i = 1 over
// the minors; failure to find one within the cap is reported as
// inconclusive, never as false. Randomized mode checks all coordinate ells
// plus random samples and is honest about being non-rigorous.
RuleoutResult parametric_ruleout(const Form& f, const Form& alpha, int k,
                                 RuleoutMode mode,
                                 const RuleoutOptions& options = {});

// Rank of the degree-k catalecticant of f - ell^d at a specific ell.
std::size_t ruleout_rank_at(const Form& f, const LinearForm& ell, int k);

// Symbolic minor of the parametric catalecticant over the given full-matrix
// column indices (rows are the monomials of T_k not divisible by alpha^2).
ParamPoly ruleout_minor(const Form& f, const Form& alpha, int k,
                        const std::vector<std::size_t>& cols);

// Replays a serialized parametric_ruleout step against f and alpha.
void check_ruleout_step(const Json& values, const Form& f, const Form& alpha,
                        CheckReport& report);

enum class RuleoutPolicy { exact_only, exact_then_randomized, randomized_only };

struct ConstructionCertificate {
  int n = 0, d = 0, k = 0;
  long s = 0;
  Form g;      // general sum of s powers, in n-1 variables
  Form k_form; // the added degree-d form K, in n-1 variables
  Form f;      // x1*G + K, in n variables
  Form psi;    // degree-k minimal generator of G^perp, in n-1 dual variables
  long bound = 0;
  std::uint64_t rng_seed = 0;
  int tries_used = 0;
  bool rigorous = true;
  std::vector<CertStep> steps;

  Json to_json() const;
};

struct ConstructionFailure : std::runtime_error {
  std::map<std::string, int> failure_counts;
  ConstructionFailure(const std::string& msg, std::map<std::string, int> counts)
      : std::runtime_error(msg), failure_counts(std::move(counts)) {}
};

// The odd-degree constructor: G a general sum of s = C(n+k-2, k) - 1 powers
// in n-1 variables, F = x1*G + K with K passing both genericity checks;
// certifies r(F) >= algen(n-1, d-1) + 1.
ConstructionCertificate construct_high_rank(
    int n, int d, std::uint64_t rng_seed, int max_tries = 50,
    RuleoutPolicy policy = RuleoutPolicy::exact_then_randomized,
    const RuleoutOptions& options = {});

void check_construction_certificate(const Json& certificate,
                                    CheckReport& report);

// The full lower-bound chain for xyz^3 + y^4*z: Hilbert function
// (1,3,5,5,3,1), al = 18, derksen bound 8, improvement to 9, exact
// parametric rule-out of rank 9, final bound 10.
BoundCertificate certify_explicit_quintic();

}  // namespace waring

#endif
