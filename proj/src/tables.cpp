#include "waring/tables.hpp"

#include <stdexcept>

#include <waring/literature_data.hpp>

#include "waring/bounds.hpp"

namespace waring {

const Json& literature_data() {
  static const Json data = Json::parse(kLiteratureJson);
  return data;
}

namespace {

std::optional<std::pair<long, std::string>> lookup(const char* key, int n,
                                                   int d) {
  for (const Json& row : literature_data().at(key))
    if (row.at("n").get<int>() == n && row.at("d").get<int>() == d)
      return std::make_pair(row.at("value").get<long>(),
                            row.at("source").get<std::string>());
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<long, std::string>> literature_upper(int n, int d) {
  return lookup("upper_bounds", n, d);
}

std::optional<std::pair<long, std::string>> known_lower(int n, int d) {
  return lookup("known_lower", n, d);
}

std::vector<TableRow> rank_table(int n, int dmax) {
  if (n != 3 && n != 4)
    throw std::invalid_argument("rank_table: n must be 3 or 4");
  if (dmax < 3) throw std::invalid_argument("rank_table: dmax >= 3");
  std::vector<TableRow> rows;
  for (int d = 3; d <= dmax; ++d) {
    TableRow row;
    row.d = d;
    row.generic = generic_rank(n, d);
    row.monomial_max = max_monomial_rank(n, d);
    // best available lower bound: later candidates win ties so the static
    // known maxima keep their tags
    row.lower = row.generic;
    row.lower_source = "generic";
    if (row.monomial_max > row.lower) {
      row.lower = row.monomial_max;
      row.lower_source = "monomial";
    }
    if (d % 2 == 1) {
      const long constructed = algen(n - 1, d - 1) + 1;
      if (constructed > row.lower) {
        row.lower = constructed;
        row.lower_source = "construction";
      }
    }
    if (const auto known = known_lower(n, d); known && known->first >= row.lower) {
      row.lower = known->first;
      row.lower_source = "known";
    }
    if (const auto upper = literature_upper(n, d)) {
      row.upper_literature = upper->first;
      row.upper_source = upper->second;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace waring
