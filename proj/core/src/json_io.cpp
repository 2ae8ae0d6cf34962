#include "subres/json_io.hpp"

#include "subres/error.hpp"

#include <string>

namespace subres::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  fail("rational must be a string \"p/q\" or an integer");
}

json to_json(const Monomial& m) { return m.exponents(); }

Monomial monomial_from_json(const json& j, std::size_t n_vars) {
  if (!j.is_array()) fail("monomial must be an exponent array");
  if (j.size() != n_vars) fail("monomial has " + std::to_string(j.size()) + " exponents, expected " + std::to_string(n_vars));
  std::vector<int> e;
  for (const auto& x : j) {
    const int v = as_int(x, "exponent");
    if (v < 0) fail("negative exponent");
    e.push_back(v);
  }
  return Monomial(std::move(e));
}

json to_json(const std::vector<Monomial>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

std::vector<Monomial> monomials_from_json(const json& j, std::size_t n_vars) {
  if (!j.is_array()) fail("monomial list must be an array");
  std::vector<Monomial> out;
  for (const auto& m : j) out.push_back(monomial_from_json(m, n_vars));
  return out;
}

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exp", to_json(m)}, {"coef", to_json(c)}});
  return {{"n_vars", p.n_vars()}, {"degree", p.degree()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  const int n = as_int(field(j, "n_vars"), "n_vars");
  const int d = as_int(field(j, "degree"), "degree");
  if (n < 1) fail("n_vars must be positive");
  if (d < 0) fail("degree must be non-negative");
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) fail("terms must be an array");
  Polynomial p(static_cast<std::size_t>(n), d);
  for (const auto& t : terms) {
    const auto m = monomial_from_json(field(t, "exp"), static_cast<std::size_t>(n));
    if (m.degree() > d) fail("term " + m.to_string() + " exceeds degree " + std::to_string(d));
    p.add_term(m, rational_from_json(field(t, "coef")));
  }
  return p;
}

json to_json(const Point& p) {
  json out = json::array();
  for (const auto& x : p) out.push_back(to_json(x));
  return out;
}

Point point_from_json(const json& j) {
  if (!j.is_array()) fail("point must be an array");
  Point p;
  for (const auto& x : j) p.push_back(rational_from_json(x));
  return p;
}

json to_json(const RootInstance& inst) {
  json polys = json::array();
  for (const auto& f : inst.polys) polys.push_back(to_json(f));
  json roots = json::array();
  for (const auto& r : inst.roots) roots.push_back(to_json(r));
  json leads = json::array();
  for (const auto& l : inst.leads) leads.push_back(to_json(l));
  return {{"polys", polys}, {"roots", roots}, {"leads", leads}};
}

RootInstance root_instance_from_json(const json& j) {
  RootInstance inst;
  const auto& polys = field(j, "polys");
  const auto& roots = field(j, "roots");
  if (!polys.is_array() || polys.empty()) fail("polys must be a nonempty array");
  if (!roots.is_array()) fail("roots must be an array");
  for (const auto& f : polys) inst.polys.push_back(polynomial_from_json(f));
  for (const auto& r : roots) inst.roots.push_back(point_from_json(r));
  const std::size_t n = inst.polys.front().n_vars();
  for (const auto& f : inst.polys) {
    if (f.n_vars() != n) fail("polys disagree on n_vars");
  }
  for (const auto& r : inst.roots) {
    if (r.size() != n) fail("root arity does not match n_vars");
  }
  if (j.contains("leads")) {
    if (!j.at("leads").is_array()) fail("leads must be an array");
    for (const auto& l : j.at("leads")) inst.leads.push_back(rational_from_json(l));
  }
  return inst;
}

TOverride t_override_from_json(const json& j, std::size_t n_vars) {
  if (!j.is_object()) fail("T override must be an object keyed by degree");
  TOverride out;
  for (const auto& [key, value] : j.items()) {
    int degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoi(key, &used);
      if (used != key.size()) fail("bad degree key \"" + key + "\"");
    } catch (const std::logic_error&) {
      fail("bad degree key \"" + key + "\"");
    }
    out[degree] = monomials_from_json(value, n_vars);
  }
  return out;
}

}  // namespace subres::json_io
