#pragma once

#include "subres/combinat.hpp"
#include "subres/instances.hpp"
#include "subres/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <vector>

// JSON forms of the library values. Rationals are canonical strings ("p" or
// "p/q"), monomials are exponent arrays, polynomials are
// {"n_vars", "degree", "terms": [{"exp", "coef"}]}. Malformed input raises
// Error(ParseError).
namespace subres::json_io {

using nlohmann::json;

json to_json(const Rational& value);
Rational rational_from_json(const json& j);

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j, std::size_t n_vars);

json to_json(const std::vector<Monomial>& ms);
std::vector<Monomial> monomials_from_json(const json& j, std::size_t n_vars);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const Point& p);
Point point_from_json(const json& j);

json to_json(const RootInstance& inst);
RootInstance root_instance_from_json(const json& j);

/// {"j": [[exp...], ...], ...}
TOverride t_override_from_json(const json& j, std::size_t n_vars);

}  // namespace subres::json_io
