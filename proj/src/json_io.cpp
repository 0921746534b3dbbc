#include "fplpoly/json_io.hpp"

#include <stdexcept>

namespace fplpoly {

Json to_json(const PolyTau& p, const std::string& var) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_string(x));
  return {{"var", var}, {"coeffs", c}};
}

Json to_json(const PolyTauT& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(x));
  return {{"var", "t"}, {"coeffs", c}};
}

PolyTau poly_tau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("polynomial JSON needs a coeffs array");
  std::vector<BigRational> c;
  for (const auto& x : j["coeffs"]) {
    if (!x.is_string()) throw std::invalid_argument("polynomial coefficients must be rational strings");
    c.push_back(parse_rational(x.get<std::string>()));
  }
  return PolyTau(std::move(c));
}

PolyTauT poly_tau_t_from_json(const Json& j) {
  if (!j.is_object() || j.value("var", "") != "t" || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("expected a polynomial in t");
  std::vector<PolyTau> c;
  for (const auto& x : j["coeffs"]) c.push_back(poly_tau_from_json(x));
  return PolyTauT(std::move(c));
}

Json to_json(const CMatrix& c) {
  Json out = Json::object();
  const auto& ms = c.basis();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Json row = Json::object();
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (!is_zero(c.at(i, j))) row[ms[j].word()] = to_json(c.at(i, j));
    out[ms[i].word()] = row;
  }
  return out;
}

}  // namespace fplpoly
