#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace subres {

// Exponent vector x^a = x_1^{a_1} ... x_n^{a_n} with cached total degree.
//
// Ordering (used by every matrix in the library): total degree ascending, then
// within a degree the exponent vectors in lexicographically *descending* order,
// so x_1 comes before x_2 and x_1^2 before x_1 x_2 before x_2^2. For one
// variable this is the basis 1, x, x^2, ...
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t n_vars);
  static Monomial variable(std::size_t n_vars, std::size_t index, int power = 1);

  std::size_t n_vars() const noexcept { return exponents_.size(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  Monomial operator*(const Monomial& other) const;

  /// Appends one variable with the given exponent (homogenization helper).
  Monomial extended(int last_exponent) const;
  /// Drops the last variable.
  Monomial truncated() const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// All monomials of total degree exactly `degree` in `n_vars` variables, in monomial order.
std::vector<Monomial> monomials_of_degree(std::size_t n_vars, int degree);

/// All monomials of total degree at most `degree`, in monomial order.
std::vector<Monomial> monomials_up_to_degree(std::size_t n_vars, int degree);

}  // namespace subres
