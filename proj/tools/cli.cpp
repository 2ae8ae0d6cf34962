#include "cli.hpp"

#include "suites.hpp"

#include "subres/combinat.hpp"
#include "subres/error.hpp"
#include "subres/json_io.hpp"
#include "subres/multi.hpp"
#include "subres/uni.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace subres::cli {

namespace {

using nlohmann::json;
using json_io::to_json;

struct Options {
  std::string verb;
  std::string input_path;
  std::uint64_t seed = kDefaultSeed;
  std::string suite = "all";
  int max_degree = 3;
  int count = 10;
  std::optional<int> t_override;
  std::string T_override_path;
};

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json read_json(std::istream& in, const std::string& source) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_fail(source + ": " + e.what());
  }
}

json read_input(const Options& o, std::istream& in) {
  if (o.input_path.empty()) return read_json(in, "stdin");
  std::ifstream file(o.input_path);
  if (!file) parse_fail("cannot open " + o.input_path);
  return read_json(file, o.input_path);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) parse_fail(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

int order(const json& j, const Options& o) { return o.t_override ? *o.t_override : int_field(j, "t"); }

// f may be omitted from univariate input; it is then drawn from the seed with degree "d1".
Polynomial uni_f(const json& j, const Options& o) {
  if (j.contains("f")) return json_io::polynomial_from_json(j.at("f"));
  return random_polynomial(1, int_field(j, "d1"), o.seed, 9);
}

std::vector<int> degrees_of(const json& j) {
  const auto& d = field(j, "degrees");
  if (!d.is_array() || d.size() < 2) parse_fail("\"degrees\" must list d_1..d_{n+1}");
  std::vector<int> out;
  for (const auto& v : d) {
    if (!v.is_number_integer()) parse_fail("degrees must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

// Polys default to dense random ones, drawn from the seed, when "polys" is absent.
std::vector<Polynomial> polys_of(const json& j, const std::vector<int>& degrees, const Options& o) {
  std::vector<Polynomial> out;
  const std::size_t n = degrees.size() - 1;
  if (j.contains("polys")) {
    if (!j.at("polys").is_array()) parse_fail("\"polys\" must be an array");
    for (const auto& p : j.at("polys")) out.push_back(json_io::polynomial_from_json(p));
    return out;
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) out.push_back(random_polynomial(n, degrees[i], o.seed + i, 9));
  return out;
}

TOverride overrides_of(const json& j, std::size_t n, const Options& o) {
  TOverride out;
  if (j.contains("T_override")) out = json_io::t_override_from_json(j.at("T_override"), n);
  if (!o.T_override_path.empty()) {
    std::ifstream file(o.T_override_path);
    if (!file) parse_fail("cannot open " + o.T_override_path);
    for (auto& [degree, T] : json_io::t_override_from_json(read_json(file, o.T_override_path), n)) out[degree] = T;
  }
  return out;
}

multi::MultiProblem multi_problem(const json& j, const Options& o, bool with_S = true) {
  const auto degrees = degrees_of(j);
  const std::size_t n = degrees.size() - 1;
  const DegreeSystem sys{static_cast<int>(n), degrees, order(j, o)};
  std::vector<Monomial> S;
  if (with_S && j.contains("S")) S = json_io::monomials_from_json(j.at("S"), n);
  return multi::make_problem(sys, polys_of(j, degrees, o), std::move(S), overrides_of(j, n, o));
}

json polys_json(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(to_json(p));
  return out;
}

json uni_delta(const json& j, const Options& o) {
  const uni::UniProblem p{uni_f(j, o), json_io::polynomial_from_json(field(j, "g")), order(j, o),
                          json_io::monomials_from_json(field(j, "S"), 1)};
  const Rational value = uni::delta_S_uni(p);
  const auto [Mf, Mg] = uni::build_Mf_Mg(p);
  return {{"value", to_json(value)},
          {"sign_convention", "det of [M_f; M_g] over 1..x^t* with the S columns and x^(t+1..t*) removed"},
          {"matrix_size", Mf.rows() + Mg.rows()},
          {"sign_of_S", uni::sign_of_S(p)},
          {"k", p.k()},
          {"f", to_json(p.f)}};
}

json uni_sres(const json& j, const Options& o) {
  const auto f = uni_f(j, o);
  const auto g = json_io::polynomial_from_json(field(j, "g"));
  std::vector<int> ks;
  if (j.contains("k")) {
    ks.push_back(int_field(j, "k"));
  } else {
    for (int k = 0; k <= std::min(f.degree(), g.degree()); ++k) ks.push_back(k);
  }
  json out = json::array();
  for (int k : ks) out.push_back({{"k", k}, {"polynomial", to_json(uni::sres_polynomial(f, g, k))}});
  return {{"sres", out}};
}

json uni_res(const json& j, const Options& o) {
  const auto f = uni_f(j, o);
  const auto g = json_io::polynomial_from_json(field(j, "g"));
  return {{"value", to_json(uni::resultant(f, g))},
          {"sign_convention", "Sylvester determinant, f rows first, descending powers"},
          {"matrix_size", f.degree() + g.degree()}};
}

// The conic example: degrees (2, 2, 2), t = 2, S = {x1, x1x2, x1^2}.
std::optional<Rational> conic_closed_form(const multi::MultiProblem& p) {
  const std::vector<Monomial> S = {Monomial({1, 0}), Monomial({1, 1}), Monomial({2, 0})};
  if (p.sys.degrees != std::vector<int>{2, 2, 2} || p.sys.t != 2 || p.sets.S != S || !p.overrides.empty()) {
    return std::nullopt;
  }
  const Monomial one({0, 0}), y({0, 1}), yy({0, 2});
  const auto c = [&](std::size_t i, const Monomial& m) -> Rational { return p.polys[i].coefficient(m); };
  Rational v = c(2, one) * (c(0, y) * c(1, yy) - c(0, yy) * c(1, y)) -
               c(2, y) * (c(0, one) * c(1, yy) - c(0, yy) * c(1, one)) +
               c(2, yy) * (c(0, one) * c(1, y) - c(0, y) * c(1, one));
  return v;
}

json multi_delta(const json& j, const Options& o) {
  const auto p = multi_problem(j, o);
  const Rational value = multi::delta_S(p);
  const auto mc = multi::macaulay_chardin_matrix(p);
  json out = {{"value", to_json(value)},
              {"sign_convention", "det of the stacked x^a f_i rows over T-first basis, S and T columns removed, / E(t)"},
              {"matrix_size", mc.rows()},
              {"k", p.sets.k},
              {"extraneous", to_json(multi::extraneous_factor(p))},
              {"polys", polys_json(p.polys)}};
  if (const auto closed = conic_closed_form(p)) {
    out["closed_form"] = to_json(*closed);
    out["closed_form_check"] = *closed == value;
  }
  return out;
}

json multi_res(const json& j, Options o) {
  const auto degrees = degrees_of(j);
  int rho = 0;
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i) rho += degrees[i] - 1;
  o.t_override = rho + degrees.back();
  const auto p = multi_problem(j, o, false);
  const Rational value = multi::delta_S(p);
  const Rational leading = multi::leading_resultant(multi::leading_forms(p));
  return {{"value", to_json(value)},
          {"t", p.sys.t},
          {"leading_resultant", to_json(leading)},
          {"extraneous", to_json(multi::extraneous_factor(p))},
          {"polys", polys_json(p.polys)}};
}

json extraneous(const json& j, const Options& o) {
  const auto p = multi_problem(j, o);
  const auto f = multi::block_factors(p);
  json blocks = json::array();
  for (std::size_t i = 0; i < f.js.size(); ++i) {
    blocks.push_back({{"j", f.js[i]}, {"det_Mj", to_json(f.det_Mj[i])}, {"E_j", to_json(f.E_j[i])}});
  }
  return {{"value", to_json(f.extraneous)},
          {"det_E_block", to_json(f.det_E_block)},
          {"det_m_prime", to_json(f.det_m_prime)},
          {"orientation_sign", f.orientation_sign},
          {"blocks", blocks},
          {"polys", polys_json(p.polys)}};
}

json gen_poly(const json& j, const Options& o) {
  if (!j.contains("degrees")) {
    const auto f = uni_f(j, o);
    const auto g = json_io::polynomial_from_json(field(j, "g"));
    const auto S_plus = json_io::monomials_from_json(field(j, "S_plus"), 1);
    return {{"polynomial", to_json(uni::gen_sres_polynomial(f, g, order(j, o), S_plus))}};
  }
  const auto degrees = degrees_of(j);
  const std::size_t n = degrees.size() - 1;
  const DegreeSystem sys{static_cast<int>(n), degrees, order(j, o)};
  const auto polys = polys_of(j, degrees, o);
  const auto S_plus = json_io::monomials_from_json(field(j, "S_plus"), n);
  return {{"polynomial", to_json(multi::gen_subres_polynomial(sys, polys, S_plus, overrides_of(j, n, o)))},
          {"polys", polys_json(polys)}};
}

int verify(const Options& o, std::ostream& out) {
  if (o.max_degree < 1) throw Error(ErrorCode::ParseError, "--max-degree must be positive");
  if (o.count < 0) throw Error(ErrorCode::ParseError, "--count must be non-negative");
  SuiteReport report;
  try {
    report = run_suite(o.suite, {o.seed, o.max_degree, o.count});
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  out << report.to_json(o.seed).dump(2) << '\n';
  return report.failures.empty() ? 0 : 1;
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& code, const std::string& message,
                const Options& o) {
  out << json{{"error", code}, {"message", message}, {"seed", o.seed}}.dump(2) << '\n';
  err << "subres: " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact univariate and multivariate subresultants", "subres"};
  app.require_subcommand(1);
  app.add_option("--input", o.input_path, "JSON input file (default: stdin)");
  app.add_option("--seed", o.seed, "Seed for random polynomials and suites")->capture_default_str();
  app.add_option("--suite", o.suite, "Verification suite (verify)")->capture_default_str();
  app.add_option("--max-degree", o.max_degree, "Largest degree drawn by suites")->capture_default_str();
  app.add_option("--count", o.count, "Instances per suite")->capture_default_str();
  app.add_option("--t-override", o.t_override, "Replace the order t given in the input");
  app.add_option("--T-override", o.T_override_path, "JSON object {j: [[exponents], ...]} choosing T_j");

  const std::pair<const char*, const char*> verbs[] = {
      {"uni-delta", "Order-t univariate subresultant delta_S"},
      {"uni-sres", "Subresultant polynomials Sres_k"},
      {"uni-res", "Sylvester resultant"},
      {"multi-delta", "Order-t multivariate subresultant delta_S"},
      {"multi-res", "delta_S at t = rho + d_{n+1}, S empty"},
      {"extraneous", "Extraneous factor E(t) and its block factors"},
      {"gen-poly", "Generic subresultant polynomial over S_plus"},
      {"verify", "Run a seeded verification suite"},
  };
  for (const auto& [name, help] : verbs) {
    app.add_subcommand(name, help)->fallthrough()->callback([&o, verb = std::string(name)] { o.verb = verb; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(out, err, "UsageError", e.what(), o);
    return 2;
  }

  try {
    if (o.verb == "verify") return verify(o, out);
    const json input = read_input(o, in);
    json result;
    if (o.verb == "uni-delta") result = uni_delta(input, o);
    else if (o.verb == "uni-sres") result = uni_sres(input, o);
    else if (o.verb == "uni-res") result = uni_res(input, o);
    else if (o.verb == "multi-delta") result = multi_delta(input, o);
    else if (o.verb == "multi-res") result = multi_res(input, o);
    else if (o.verb == "extraneous") result = extraneous(input, o);
    else result = gen_poly(input, o);
    result["verb"] = o.verb;
    result["seed"] = o.seed;
    out << result.dump(2) << '\n';
    return 0;
  } catch (const Error& e) {
    emit_error(out, err, std::string(to_string(e.code())), e.what(), o);
  } catch (const json::exception& e) {
    emit_error(out, err, "ParseError", e.what(), o);
  }
  return 2;
}

}  // namespace subres::cli
