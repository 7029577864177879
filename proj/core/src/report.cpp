#include "gammapos/report.hpp"

namespace gammapos {

nlohmann::json Report::to_json() const {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  nlohmann::json out = {{"identity", identity},
                        {"parameters", params},
                        {"status", passed ? "pass" : "fail"},
                        {"lhs", lhs},
                        {"rhs", rhs}};
  if (gamma_vector) out["gamma_vector"] = *gamma_vector;
  if (!detail.empty()) out["detail"] = detail;
  return out;
}

Report combine(std::string identity, std::vector<std::pair<std::string, long long>> parameters,
               const std::vector<Report>& parts) {
  Report out{std::move(identity), std::move(parameters), true, nlohmann::json::array(),
             nlohmann::json::array(), std::nullopt, {}};
  for (const auto& p : parts) {
    out.lhs.push_back(p.lhs);
    out.rhs.push_back(p.rhs);
    if (!p.passed) {
      out.passed = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += p.identity + (p.detail.empty() ? "" : ": " + p.detail);
    }
  }
  return out;
}

}  // namespace gammapos
