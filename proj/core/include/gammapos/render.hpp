#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gammapos/poly.hpp"
#include "gammapos/qtrpoly.hpp"

namespace gammapos {

// Text rendering is lowest degree first with explicit powers, e.g.
//   1 + (2 + q + q^2)*t + t^2
// Negative terms are joined with " - ".

std::string to_text(const IntPoly& p, const std::string& var = "t");
std::string to_text(const QTPoly& p);
std::string to_text(const QTRPoly& p);

// JSON: decimal-string coefficients indexed by exponent. A QTPoly is an
// array over t-exponents of arrays over q-exponents.

nlohmann::json to_json(const IntPoly& p);
nlohmann::json to_json(const QTPoly& p);
/// List of {q, t, r, coeff} objects in exponent order.
nlohmann::json to_json(const QTRPoly& p);

IntPoly int_poly_from_json(const nlohmann::json& j);
QTPoly qt_poly_from_json(const nlohmann::json& j);

}  // namespace gammapos
