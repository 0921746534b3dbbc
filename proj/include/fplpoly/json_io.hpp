#pragma once

#include <json.hpp>

#include "fplpoly/basis.hpp"
#include "fplpoly/poly.hpp"

namespace fplpoly {

using Json = nlohmann::ordered_json;

// {"var":"tau","coeffs":["1","0","-2/3"]}, ascending degree; the zero polynomial has no coeffs.
Json to_json(const PolyTau& p, const std::string& var = "tau");
// {"var":"t","coeffs":[{"var":"tau",...},...]}
Json to_json(const PolyTauT& p);

PolyTau poly_tau_from_json(const Json& j);
PolyTauT poly_tau_t_from_json(const Json& j);

// {"a-word": {"pi-word": poly, ...}, ...}, zero entries omitted.
Json to_json(const CMatrix& c);

}  // namespace fplpoly
