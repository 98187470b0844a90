#pragma once

#include <json.hpp>

#include "casimir/rational_expr.hpp"

namespace casimir {

nlohmann::json to_json(const BigRational& q);
/// [{"coeff": {"num", "den"}, "monomial": {"x_4_1": 1, ...}}, ...]
nlohmann::json to_json(const MultiPoly& p);
/// {"num": <poly>, "den": <poly>}
nlohmann::json to_json(const RationalExpr& e);

MultiPoly poly_from_json(const nlohmann::json& j);
RationalExpr rational_from_json(const nlohmann::json& j);

}  // namespace casimir
