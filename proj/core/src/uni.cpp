#include "subres/uni.hpp"

#include "subres/combinat.hpp"
#include "subres/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace subres::uni {

namespace {

Monomial xpow(int e) { return Monomial::variable(1, 0, e); }

void require_univariate(const Polynomial& p, const char* name) {
  if (p.n_vars() != 1) throw Error(ErrorCode::ArityMismatch, std::string(name) + " must be univariate");
  if (p.degree() < 1) throw Error(ErrorCode::IndexOutOfRange, std::string(name) + " must have degree >= 1");
}

Rational coeff_or_zero(const std::vector<Rational>& c, int index) {
  if (index < 0 || index >= static_cast<int>(c.size())) return Rational(0);
  return c[static_cast<std::size_t>(index)];
}

void require_distinct_roots(std::span<const Rational> roots) {
  std::set<Rational> seen;
  for (const auto& r : roots) {
    if (!seen.insert(r).second) throw Error(ErrorCode::SingularVandermonde, "repeated root " + to_string(r));
  }
}

int k_for(int t, int d1, int d2) { return t + 1 - std::max(0, t - d1 + 1) - std::max(0, t - d2 + 1); }

// Evaluates `value_at` on x = 0..degree and interpolates.
Polynomial expand_by_interpolation(int degree, const std::function<Rational(const Rational&)>& value_at) {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int i = 0; i <= degree; ++i) {
    xs.emplace_back(i);
    ys.push_back(value_at(xs.back()));
  }
  return interpolate(xs, ys, degree);
}

std::vector<int> exponents_of(std::span<const Monomial> S) {
  std::vector<int> out;
  for (const auto& m : S) {
    if (m.n_vars() != 1) throw Error(ErrorCode::ArityMismatch, "S must contain univariate monomials");
    out.push_back(m[0]);
  }
  return out;
}

void check_gen_inputs(int d1, int d2, int t, std::span<const Monomial> S_plus) {
  if (t < d2 || t > d1 + d2 - 1) {
    throw Error(ErrorCode::BadOrderRange,
                "t = " + std::to_string(t) + " outside [" + std::to_string(d2) + ", " + std::to_string(d1 + d2 - 1) + "]");
  }
  const int k = d2 - std::max(0, t - d1 + 1);
  if (static_cast<int>(S_plus.size()) != k + 1) {
    throw Error(ErrorCode::WrongCardinality, "S_plus needs k + 1 = " + std::to_string(k + 1) + " monomials");
  }
  const auto gammas = exponents_of(S_plus);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i] > t) throw Error(ErrorCode::DegreeTooHigh, "S_plus exponent exceeds t");
    if (i > 0 && gammas[i] <= gammas[i - 1]) {
      throw Error(ErrorCode::InvalidSelection, "S_plus exponents must be strictly increasing");
    }
  }
}

}  // namespace

int UniProblem::t_star() const { return std::max(d2() - 1, t); }

int UniProblem::k() const { return k_for(t, d1(), d2()); }

void UniProblem::validate() const {
  require_univariate(f, "f");
  require_univariate(g, "g");
  if (t < 0 || t > d1() + d2() - 1) {
    throw Error(ErrorCode::BadOrderRange,
                "t = " + std::to_string(t) + " outside [0, " + std::to_string(d1() + d2() - 1) + "]");
  }
  if (static_cast<int>(S.size()) != k()) {
    throw Error(ErrorCode::WrongCardinality,
                "|S| = " + std::to_string(S.size()) + " but k = " + std::to_string(k()));
  }
  std::set<Monomial> seen;
  for (const auto& m : S) {
    if (m.n_vars() != 1) throw Error(ErrorCode::ArityMismatch, "S entry " + m.to_string());
    if (m.degree() > t) throw Error(ErrorCode::DegreeTooHigh, "S entry " + m.to_string());
    if (!seen.insert(m).second) throw Error(ErrorCode::DuplicateMonomial, "S entry " + m.to_string());
  }
}

std::vector<Monomial> ambient_basis(int t_star) {
  std::vector<Monomial> basis;
  for (int e = 0; e <= t_star; ++e) basis.push_back(xpow(e));
  return basis;
}

std::pair<LabeledMatrix, LabeledMatrix> build_Mf_Mg(const UniProblem& p) {
  require_univariate(p.f, "f");
  require_univariate(p.g, "g");
  const int t_star = p.t_star();
  const auto basis = ambient_basis(t_star);
  auto block = [&](const Polynomial& poly, int tag) {
    const int rows = std::max(0, p.t - poly.degree() + 1);
    const auto c = poly.univariate_coefficients();
    LabeledMatrix m(static_cast<std::size_t>(rows), basis.size());
    std::vector<RowLabel> labels;
    for (int a = 0; a < rows; ++a) {
      for (int e = 0; e <= poly.degree(); ++e) m(static_cast<std::size_t>(a), static_cast<std::size_t>(a + e)) = c[static_cast<std::size_t>(e)];
      labels.push_back({tag, xpow(a)});
    }
    m.set_row_labels(std::move(labels));
    m.set_col_labels(basis);
    return m;
  };
  return {block(p.f, 1), block(p.g, 2)};
}

int sign_of_S(const UniProblem& p) {
  const auto basis = ambient_basis(p.t_star());
  return subres::sign_of_S(p.S, p.t, p.t_star(), basis);
}

LabeledMatrix build_M_S(const UniProblem& p) {
  p.validate();
  auto [mf, mg] = build_Mf_Mg(p);
  const auto basis = ambient_basis(p.t_star());
  std::vector<Monomial> selected(p.S.begin(), p.S.end());
  for (int e = p.t + 1; e <= p.t_star(); ++e) selected.push_back(xpow(e));
  LabeledMatrix id(selected.size(), basis.size());
  std::vector<RowLabel> labels;
  for (std::size_t r = 0; r < selected.size(); ++r) {
    id(r, static_cast<std::size_t>(selected[r][0])) = 1;
    labels.push_back({0, selected[r]});
  }
  id.set_row_labels(std::move(labels));
  id.set_col_labels(basis);
  const LabeledMatrix blocks[] = {id, mf, mg};
  return vertical_stack(blocks);
}

Rational delta_S_uni(const UniProblem& p) {
  p.validate();
  auto [mf, mg] = build_Mf_Mg(p);
  const LabeledMatrix blocks[] = {mf, mg};
  std::vector<Monomial> drop(p.S.begin(), p.S.end());
  for (int e = p.t + 1; e <= p.t_star(); ++e) drop.push_back(xpow(e));
  return determinant(delete_columns(vertical_stack(blocks), drop));
}

LabeledMatrix scalar_subresultant_matrix(const Polynomial& f, const Polynomial& g, int k, int j) {
  require_univariate(f, "f");
  require_univariate(g, "g");
  const int d1 = f.degree();
  const int d2 = g.degree();
  if (j < 0 || j > k || k > std::min(d1, d2)) {
    throw Error(ErrorCode::IndexOutOfRange,
                "need 0 <= j <= k <= min(d1, d2), got k = " + std::to_string(k) + ", j = " + std::to_string(j));
  }
  const auto a = f.univariate_coefficients();
  const auto b = g.univariate_coefficients();
  const auto size = static_cast<std::size_t>(d1 + d2 - 2 * k);
  LabeledMatrix m(size, size);
  std::size_t row = 0;
  auto fill = [&](const std::vector<Rational>& c, int shifts) {
    for (int i = shifts - 1; i >= 0; --i, ++row) {
      std::size_t col = 0;
      for (int power = d1 + d2 - k - 1; power >= k + 1; --power, ++col) m(row, col) = coeff_or_zero(c, power - i);
      m(row, col) = coeff_or_zero(c, j - i);
    }
  };
  fill(a, d2 - k);
  fill(b, d1 - k);
  return m;
}

Rational scalar_subresultant(const Polynomial& f, const Polynomial& g, int k, int j) {
  return determinant(scalar_subresultant_matrix(f, g, k, j));
}

Polynomial sres_polynomial(const Polynomial& f, const Polynomial& g, int k) {
  Polynomial out(1, std::max(k, 0));
  for (int j = 0; j <= k; ++j) out.add_term(xpow(j), scalar_subresultant(f, g, k, j));
  return out;
}

LabeledMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g) {
  require_univariate(f, "f");
  require_univariate(g, "g");
  const int d1 = f.degree();
  const int d2 = g.degree();
  const auto a = f.univariate_coefficients();
  const auto b = g.univariate_coefficients();
  const auto size = static_cast<std::size_t>(d1 + d2);
  LabeledMatrix m(size, size);
  std::vector<RowLabel> labels;
  std::size_t row = 0;
  auto fill = [&](const std::vector<Rational>& c, int shifts, int tag) {
    for (int i = shifts - 1; i >= 0; --i, ++row) {
      std::size_t col = 0;
      for (int power = d1 + d2 - 1; power >= 0; --power, ++col) m(row, col) = coeff_or_zero(c, power - i);
      labels.push_back({tag, xpow(i)});
    }
  };
  fill(a, d2, 1);
  fill(b, d1, 2);
  m.set_row_labels(std::move(labels));
  std::vector<Monomial> cols;
  for (int power = d1 + d2 - 1; power >= 0; --power) cols.push_back(xpow(power));
  m.set_col_labels(std::move(cols));
  return m;
}

Rational resultant(const Polynomial& f, const Polynomial& g) { return determinant(sylvester_matrix(f, g)); }

LabeledMatrix power_matrix(std::span<const Rational> roots, int rows) {
  LabeledMatrix v(static_cast<std::size_t>(std::max(rows, 0)), roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    Rational power = 1;
    for (int i = 0; i < rows; ++i) {
      v(static_cast<std::size_t>(i), j) = power;
      power *= roots[j];
    }
  }
  return v;
}

namespace {

Rational vandermonde_det(std::span<const Rational> roots) {
  require_distinct_roots(roots);
  Rational v = determinant(power_matrix(roots, static_cast<int>(roots.size())));
  if (sgn(v) == 0) throw Error(ErrorCode::SingularVandermonde, "Vandermonde determinant vanishes");
  return v;
}

}  // namespace

LabeledMatrix build_O_S(const Polynomial& f, std::span<const Rational> g_roots, int t, std::span<const Monomial> S) {
  require_univariate(f, "f");
  const int d1 = f.degree();
  const int d2 = static_cast<int>(g_roots.size());
  const int t_star = std::max(d2 - 1, t);
  const int k = k_for(t, d1, d2);
  if (static_cast<int>(S.size()) != k) {
    throw Error(ErrorCode::WrongCardinality, "|S| = " + std::to_string(S.size()) + " but k = " + std::to_string(k));
  }
  std::vector<std::function<Rational(const Rational&)>> rows;
  for (int gamma : exponents_of(S)) rows.emplace_back([gamma](const Rational& xi) -> Rational { return pow(xi, static_cast<unsigned>(gamma)); });
  for (int e = t + 1; e <= t_star; ++e) rows.emplace_back([e](const Rational& xi) -> Rational { return pow(xi, static_cast<unsigned>(e)); });
  for (int i = 0; i <= t - d1; ++i) {
    rows.emplace_back([i, &f](const Rational& xi) -> Rational {
      const Rational point[] = {xi};
      return pow(xi, static_cast<unsigned>(i)) * evaluate(f, point);
    });
  }
  if (rows.size() != g_roots.size()) throw Error(ErrorCode::ShapeMismatch, "O_S is not square");
  LabeledMatrix o(rows.size(), g_roots.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < g_roots.size(); ++c) o(r, c) = rows[r](g_roots[c]);
  }
  return o;
}

Rational thm1_rhs(const Polynomial& f, std::span<const Rational> g_roots, const Rational& g_lead, int t,
                  std::span<const Monomial> S) {
  require_univariate(f, "f");
  const int d1 = f.degree();
  const int d2 = static_cast<int>(g_roots.size());
  if (d2 < 1) throw Error(ErrorCode::IndexOutOfRange, "g needs at least one root");
  if (t < 0 || t > d1 + d2 - 1) throw Error(ErrorCode::BadOrderRange, "t out of range");
  const Rational v = vandermonde_det(g_roots);
  const int t_star = std::max(d2 - 1, t);
  const auto o = build_O_S(f, g_roots, t, S);
  const int sg = subres::sign_of_S(S, t, t_star, ambient_basis(t_star));
  return Rational(sg) * pow(g_lead, static_cast<unsigned>(t_star - d2 + 1)) * determinant(o) / v;
}

Polynomial hong_sres_rhs(const Polynomial& f, std::span<const Rational> g_roots, const Rational& g_lead, int k) {
  require_univariate(f, "f");
  const int d1 = f.degree();
  const int d2 = static_cast<int>(g_roots.size());
  if (k < 0 || k > std::min(d1, d2)) throw Error(ErrorCode::IndexOutOfRange, "k out of range");
  const Rational v = vandermonde_det(g_roots);
  std::vector<Rational> f_at;
  for (const auto& xi : g_roots) {
    const Rational point[] = {xi};
    f_at.push_back(evaluate(f, point));
  }
  const Rational factor = minus_one_pow(static_cast<long>(d1 - k) * (d2 - k)) *
                          pow(g_lead, static_cast<unsigned>(d1 - k)) / v;
  return expand_by_interpolation(k, [&](const Rational& x) -> Rational {
    const auto n = static_cast<std::size_t>(d2);
    LabeledMatrix w(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& xi = g_roots[c];
      Rational power = 1;
      for (int i = 0; i < k; ++i, power *= xi) w(static_cast<std::size_t>(i), c) = (x - xi) * power;
      power = 1;
      for (int i = 0; i < d2 - k; ++i, power *= xi) w(static_cast<std::size_t>(k + i), c) = power * f_at[c];
    }
    return factor * determinant(w);
  });
}

Polynomial gen_sres_polynomial(const Polynomial& f, const Polynomial& g, int t, std::span<const Monomial> S_plus) {
  require_univariate(f, "f");
  require_univariate(g, "g");
  check_gen_inputs(f.degree(), g.degree(), t, S_plus);
  Polynomial s(1, t);
  for (std::size_t j = 0; j < S_plus.size(); ++j) {
    UniProblem p{f, g, t, {}};
    for (std::size_t i = 0; i < S_plus.size(); ++i) {
      if (i != j) p.S.push_back(S_plus[i]);
    }
    s.add_term(S_plus[j], delta_S_uni(p));
  }
  return s;
}

namespace {

// Shared root-side kernel: rows (first_row(x, D_i, xi) * xi^{gamma_{i-1}}) then xi^m f(xi).
Polynomial gen_roots_determinant(const Polynomial& f, std::span<const Rational> g_roots, const Rational& g_lead, int t,
                                 std::span<const Monomial> S_plus, bool corrected) {
  require_univariate(f, "f");
  const int d1 = f.degree();
  const int d2 = static_cast<int>(g_roots.size());
  check_gen_inputs(d1, d2, t, S_plus);
  const Rational v = vandermonde_det(g_roots);
  const auto gammas = exponents_of(S_plus);
  const int k = static_cast<int>(gammas.size()) - 1;
  std::vector<Rational> f_at;
  for (const auto& xi : g_roots) {
    const Rational point[] = {xi};
    f_at.push_back(evaluate(f, point));
  }
  long gamma_sum = 0;
  for (int gm : gammas) gamma_sum += gm;
  const Rational eps = corrected ? minus_one_pow(gamma_sum - static_cast<long>(k) * (k - 1) / 2) : Rational(1);
  const Rational factor = eps * pow(g_lead, static_cast<unsigned>(t - d2 + 1)) / v;
  return expand_by_interpolation(t, [&](const Rational& x) -> Rational {
    const auto n = static_cast<std::size_t>(d2);
    LabeledMatrix w(n, n);
    const Rational y = corrected ? Rational(-x) : x;
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& xi = g_roots[c];
      for (int i = 1; i <= k; ++i) {
        const auto gap = static_cast<unsigned>(gammas[static_cast<std::size_t>(i)] - gammas[static_cast<std::size_t>(i - 1)]);
        const Rational diff = corrected ? Rational(pow(xi, gap) + pow(y, gap)) : Rational(pow(x, gap) - pow(xi, gap));
        w(static_cast<std::size_t>(i - 1), c) = diff * pow(xi, static_cast<unsigned>(gammas[static_cast<std::size_t>(i - 1)]));
      }
      Rational power = 1;
      for (int m = 0; m < d2 - k; ++m, power *= xi) w(static_cast<std::size_t>(k + m), c) = power * f_at[c];
    }
    return factor * pow(y, static_cast<unsigned>(gammas.front())) * determinant(w);
  });
}

}  // namespace

Polynomial gen_sres_roots_rhs(const Polynomial& f, std::span<const Rational> g_roots, const Rational& g_lead, int t,
                              std::span<const Monomial> S_plus) {
  return gen_roots_determinant(f, g_roots, g_lead, t, S_plus, true);
}

Polynomial gen_sres_roots_telescoping(const Polynomial& f, std::span<const Rational> g_roots, const Rational& g_lead,
                                      int t, std::span<const Monomial> S_plus) {
  return gen_roots_determinant(f, g_roots, g_lead, t, S_plus, false);
}

}  // namespace subres::uni
