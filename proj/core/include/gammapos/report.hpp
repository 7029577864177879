#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace gammapos {

/// Outcome of one identity check. `lhs`/`rhs` hold the two sides that were
/// compared, in the JSON encodings of render.hpp.
struct Report {
  std::string identity;
  std::vector<std::pair<std::string, long long>> parameters;
  bool passed = false;
  nlohmann::json lhs;
  nlohmann::json rhs;
  std::optional<nlohmann::json> gamma_vector;
  std::string detail;

  nlohmann::json to_json() const;
};

/// Folds several sub-checks into one report that passes iff all of them do.
Report combine(std::string identity, std::vector<std::pair<std::string, long long>> parameters,
               const std::vector<Report>& parts);

}  // namespace gammapos
