#include "casimir/serialize.hpp"

namespace casimir {

nlohmann::json to_json(const BigRational& q) {
  return {{"num", q.numerator_string()}, {"den", q.denominator_string()}};
}

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Term& t : p.terms()) {
    nlohmann::json mono = nlohmann::json::object();
    for (const Factor& f : t.monomial.factors()) mono[f.var.key()] = f.exp;
    arr.push_back({{"coeff", to_json(t.coeff)}, {"monomial", std::move(mono)}});
  }
  return arr;
}

nlohmann::json to_json(const RationalExpr& e) { return {{"num", to_json(e.num())}, {"den", to_json(e.den())}}; }

MultiPoly poly_from_json(const nlohmann::json& j) {
  std::vector<Term> terms;
  for (const auto& t : j) {
    const auto& c = t.at("coeff");
    const BigRational coeff =
        BigRational::parse(c.at("num").get<std::string>() + "/" + c.at("den").get<std::string>());
    std::vector<Factor> fs;
    for (const auto& [key, exp] : t.at("monomial").items()) fs.push_back({VarId::from_key(key), exp.get<std::uint32_t>()});
    terms.push_back({Monomial::from_factors(std::move(fs)), coeff});
  }
  return MultiPoly::from_terms(std::move(terms));
}

RationalExpr rational_from_json(const nlohmann::json& j) {
  return RationalExpr(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace casimir
