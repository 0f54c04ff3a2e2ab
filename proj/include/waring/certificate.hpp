#ifndef WARING_CERTIFICATE_HPP
#define WARING_CERTIFICATE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "waring/form.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

// One re-checkable step of a bound derivation: a named operation together
// with every integer/sequence needed to recompute it from the certificate's
// (form, alpha) alone.
struct CertStep {
  std::string name;
  Json values;
};

// Machine-checkable record of a Waring rank lower bound. The bound value
// is monotone along the steps; a checker replays each step by rerunning
// the named operation and comparing exact values.
struct BoundCertificate {
  Form form;
  Form alpha;  // linear form in T
  std::string kind;  // derksen | improved | ruled_out | cactus | construction
  std::vector<CertStep> steps;
  long bound = 0;
  bool conditional = false;  // cactus: hypothesis not machine-checked
  bool rigorous = true;      // false when a randomized rule-out was used

  Json to_json() const;
};

Json form_to_json(const Form& f, bool dual);
Form form_from_json(const Json& j, int nvars, int degree);

// Replays a serialized certificate (bound, construction, or quintic) and
// re-verifies every step. Returns human-readable failures; empty = valid.
struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(const std::string& msg) {
    ok = false;
    failures.push_back(msg);
  }
};

CheckReport check_certificate(const Json& certificate);

}  // namespace waring

#endif
