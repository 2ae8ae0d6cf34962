#include "subres/polynomial.hpp"

#include "subres/error.hpp"

#include <random>

namespace subres {

Polynomial::Polynomial(std::size_t n_vars, int formal_degree) : n_vars_(n_vars), degree_(formal_degree) {
  if (formal_degree < 0) throw Error(ErrorCode::DegreeTooHigh, "negative formal degree");
}

Polynomial Polynomial::constant(std::size_t n_vars, const Rational& value, int formal_degree) {
  Polynomial p(n_vars, formal_degree);
  p.add_term(Monomial::one(n_vars), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t n_vars, std::size_t index) {
  Polynomial p(n_vars, 1);
  p.add_term(Monomial::variable(n_vars, index), Rational(1));
  return p;
}

Polynomial Polynomial::univariate(std::span<const Rational> ascending) {
  if (ascending.empty()) throw Error(ErrorCode::ShapeMismatch, "empty coefficient list");
  Polynomial p(1, static_cast<int>(ascending.size()) - 1);
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    p.add_term(Monomial::variable(1, 0, static_cast<int>(i)), ascending[i]);
  }
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> Polynomial::univariate_coefficients() const {
  if (n_vars_ != 1) throw Error(ErrorCode::ArityMismatch, "expected a univariate polynomial");
  std::vector<Rational> out(static_cast<std::size_t>(degree_) + 1);
  for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(m[0])] = c;
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.n_vars() != n_vars_) throw Error(ErrorCode::ArityMismatch, "term arity");
  if (m.degree() > degree_) {
    throw Error(ErrorCode::DegreeTooHigh,
                "term " + m.to_string() + " exceeds formal degree " + std::to_string(degree_));
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Polynomial::actual_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& [m, c] : terms_) {
    if (m.degree() != degree_) return false;
  }
  return true;
}

Polynomial Polynomial::with_degree(int formal_degree) const {
  Polynomial out(n_vars_, formal_degree);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.n_vars_ != n_vars_) throw Error(ErrorCode::ArityMismatch, "polynomial sum");
  degree_ = std::max(degree_, other.degree_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.n_vars_ != n_vars_) throw Error(ErrorCode::ArityMismatch, "polynomial difference");
  degree_ = std::max(degree_, other.degree_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_vars_ != b.n_vars_) throw Error(ErrorCode::ArityMismatch, "polynomial product");
  Polynomial out(a.n_vars_, a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + subres::to_string(c) + ")";
    if (m.degree() > 0) out += "*" + m.to_string();
  }
  return out;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.n_vars()) {
    throw Error(ErrorCode::ArityMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                    std::to_string(p.n_vars()) + " variables");
  }
  // powers[i][e] = point[i]^e, grown on demand
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(Rational(1));
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      const auto e = static_cast<std::size_t>(m[i]);
      while (powers[i].size() <= e) {
        Rational next = powers[i].back() * point[i];
        powers[i].push_back(std::move(next));
      }
      term *= powers[i][e];
    }
    total += term;
  }
  return total;
}

Polynomial leading_form(const Polynomial& p) {
  Polynomial out(p.n_vars(), p.degree());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == p.degree()) out.add_term(m, c);
  }
  return out;
}

Polynomial homogenize(const Polynomial& p) {
  Polynomial out(p.n_vars() + 1, p.degree());
  for (const auto& [m, c] : p.terms()) out.add_term(m.extended(p.degree() - m.degree()), c);
  return out;
}

Polynomial dehomogenize(const Polynomial& p) {
  if (p.n_vars() == 0) throw Error(ErrorCode::ArityMismatch, "dehomogenize needs a variable");
  Polynomial out(p.n_vars() - 1, p.degree());
  for (const auto& [m, c] : p.terms()) out.add_term(m.truncated(), c);
  return out;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial out = Polynomial::constant(p.n_vars(), Rational(1));
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

Polynomial random_polynomial(std::size_t n_vars, int degree, std::uint64_t seed, int coeff_bound) {
  if (coeff_bound < 1) throw Error(ErrorCode::IndexOutOfRange, "coeff_bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-coeff_bound, coeff_bound - 1);
  Polynomial p(n_vars, degree);
  for (const auto& m : monomials_up_to_degree(n_vars, degree)) {
    int c = dist(rng);
    if (c >= 0) ++c;  // skip zero: map [0, bound-1] onto [1, bound]
    p.add_term(m, Rational(c));
  }
  return p;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys, int formal_degree) {
  if (xs.size() != ys.size() || xs.empty()) throw Error(ErrorCode::ShapeMismatch, "interpolation nodes");
  const std::size_t m = xs.size();
  // Divided differences in place.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (sgn(gap) == 0) throw Error(ErrorCode::SingularMatrix, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  // Horner expansion of the Newton form into ascending coefficients.
  std::vector<Rational> coeffs{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xs[i];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  if (static_cast<int>(coeffs.size()) - 1 > formal_degree) {
    for (std::size_t j = static_cast<std::size_t>(formal_degree) + 1; j < coeffs.size(); ++j) {
      if (sgn(coeffs[j]) != 0) throw Error(ErrorCode::DegreeTooHigh, "interpolant exceeds formal degree");
    }
  }
  Polynomial out(1, formal_degree);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) != 0) out.add_term(Monomial::variable(1, 0, static_cast<int>(j)), coeffs[j]);
  }
  return out;
}

}  // namespace subres
