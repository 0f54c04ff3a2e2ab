#ifndef WARING_COMMANDS_HPP
#define WARING_COMMANDS_HPP

#include <cstdint>
#include <string>

#include "waring/certificate.hpp"

namespace waring {

// Exit codes shared by the CLI: 0 success, 2 check failure, 3 inconclusive,
// 4 input error (input errors are thrown as std::invalid_argument or
// std::domain_error and mapped by the caller).
struct CommandResult {
  int exit_code = 0;
  Json output;
};

CommandResult cmd_table(int n, int dmax);

// One alpha (improved bound) when alpha_text is nonempty, otherwise a
// search over coordinate duals plus extra_alphas random ones.
CommandResult cmd_bound(const std::string& form_text, int nvars,
                        const std::string& alpha_text, int extra_alphas,
                        std::uint64_t seed, bool check);

CommandResult cmd_construct(int n, int d, std::uint64_t seed, int max_tries,
                            const std::string& ruleout_policy, bool check);

CommandResult cmd_verify(const std::string& form_text, int nvars,
                         const Json& decomposition);

CommandResult cmd_quintic(std::uint64_t seed, bool check);

CommandResult cmd_hilbert(const std::string& form_text, int nvars);

CommandResult cmd_binary_rank(const std::string& form_text);

CommandResult cmd_decompose(const std::string& form_text, int nvars, int rank,
                            double tol, std::uint64_t seed, int restarts);

CommandResult cmd_check(const Json& certificate);

std::string render_pretty(const Json& output);

}  // namespace waring

#endif
