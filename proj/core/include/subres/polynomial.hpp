#pragma once

#include "subres/monomial.hpp"
#include "subres/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace subres {

// Sparse polynomial over Q with a declared ("formal") degree. The formal degree
// is part of the value: a specialization whose top coefficients vanish still
// occupies degree-d slots in every matrix built from it.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(std::size_t n_vars, int formal_degree);

  static Polynomial constant(std::size_t n_vars, const Rational& value, int formal_degree = 0);
  /// The polynomial x_{index+1}.
  static Polynomial variable(std::size_t n_vars, std::size_t index);
  /// Univariate polynomial c_0 + c_1 x + ... from ascending coefficients; degree = size - 1.
  static Polynomial univariate(std::span<const Rational> ascending);

  std::size_t n_vars() const noexcept { return n_vars_; }
  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  /// Ascending coefficient vector a_0..a_d of a univariate polynomial (d = formal degree).
  std::vector<Rational> univariate_coefficients() const;

  /// Adds `c` to the coefficient of `m`. Throws DegreeTooHigh / ArityMismatch.
  void add_term(const Monomial& m, const Rational& c);

  /// Largest total degree among stored terms (-1 for the zero polynomial).
  int actual_degree() const;
  bool is_homogeneous() const;

  Polynomial with_degree(int formal_degree) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t n_vars_ = 0;
  int degree_ = 0;
  TermMap terms_;
};

/// Exact value at `point`. Throws ArityMismatch.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Homogeneous component of the formal degree (possibly zero).
Polynomial leading_form(const Polynomial& p);

/// Homogenization by a new last variable; homogeneous of the formal degree.
Polynomial homogenize(const Polynomial& p);

/// Sets the last variable to 1; formal degree is kept.
Polynomial dehomogenize(const Polynomial& p);

/// Power of a polynomial (formal degree multiplies).
Polynomial pow(const Polynomial& p, unsigned exponent);

/// Dense polynomial of all monomials of degree <= `degree`, with nonzero integer
/// coefficients uniform on [-coeff_bound, coeff_bound] \ {0}. Deterministic in seed.
Polynomial random_polynomial(std::size_t n_vars, int degree, std::uint64_t seed, int coeff_bound);

/// Unique polynomial of degree <= xs.size()-1 through (xs[i], ys[i]) (Newton form),
/// returned with the given formal degree. Nodes must be distinct.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys, int formal_degree);

}  // namespace subres
