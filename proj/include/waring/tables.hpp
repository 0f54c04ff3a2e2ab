#ifndef WARING_TABLES_HPP
#define WARING_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "waring/certificate.hpp"

namespace waring {

// One degree of the rank table: computed generic and monomial ranks, the
// best available lower bound on the maximum rank with its source, and the
// literature upper bound (static data, never computed).
struct TableRow {
  int d = 0;
  long generic = 0;
  long monomial_max = 0;
  long lower = 0;
  std::string lower_source;  // known | construction | monomial | generic
  std::optional<long> upper_literature;
  std::optional<std::string> upper_source;
};

std::vector<TableRow> rank_table(int n, int dmax);

// Static literature data, baked in from data/literature_bounds.json.
const Json& literature_data();
std::optional<std::pair<long, std::string>> literature_upper(int n, int d);
std::optional<std::pair<long, std::string>> known_lower(int n, int d);

}  // namespace waring

#endif
