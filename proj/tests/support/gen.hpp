#pragma once

// Seeded generators shared by the unit and acceptance tests.

#include "subres/instances.hpp"
#include "subres/matrix.hpp"
#include "subres/monomial.hpp"
#include "subres/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace subres::testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  int nonzero(int bound) {
    int v = integer(-bound, bound - 1);
    return v >= 0 ? v + 1 : v;
  }

  Rational rational(int bound = 9) {
    Rational r(integer(-bound, bound), integer(1, bound));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(int bound = 9) {
    Rational r(nonzero(bound), integer(1, bound));
    r.canonicalize();
    return r;
  }

  std::uint64_t next_seed() { return engine_(); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline LabeledMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 9) {
  LabeledMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.rational(bound);
  }
  return m;
}

/// Dense univariate polynomial of formal degree d with random rationals and nonzero top coefficient.
inline Polynomial random_univariate(Rng& rng, int d, int bound = 9) {
  std::vector<Rational> c;
  for (int i = 0; i < d; ++i) c.push_back(rng.rational(bound));
  c.push_back(rng.nonzero_rational(bound));
  return Polynomial::univariate(c);
}

/// Dense n-variate polynomial of formal degree d with random rational coefficients.
inline Polynomial random_dense(Rng& rng, std::size_t n, int d, int bound = 9) {
  Polynomial p(n, d);
  for (const auto& m : monomials_up_to_degree(n, d)) {
    p.add_term(m, m.degree() == d ? rng.nonzero_rational(bound) : rng.rational(bound));
  }
  return p;
}

inline std::vector<Rational> distinct_integers(Rng& rng, std::size_t count, int bound = 9) {
  std::vector<int> pool;
  for (int v = -bound; v <= bound; ++v) pool.push_back(v);
  rng.shuffle(pool);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(pool[i]);
  return out;
}

/// k distinct monomials of degree <= t in n variables, in random order.
inline std::vector<Monomial> random_selection(Rng& rng, std::size_t n, int t, std::size_t k) {
  auto pool = monomials_up_to_degree(n, t);
  if (k > pool.size()) throw std::invalid_argument("random_selection: k exceeds the monomial pool");
  rng.shuffle(pool);
  pool.resize(k);
  return pool;
}

inline std::vector<Monomial> univariate_powers(std::initializer_list<int> exps) {
  std::vector<Monomial> out;
  for (int e : exps) out.push_back(Monomial::variable(1, 0, e));
  return out;
}

/// Grid system of the first n degrees, random axes and random nonzero integer leads.
inline RootInstance grid_instance(Rng& rng, std::span<const int> degrees) {
  auto axes = random_axes(degrees, rng.next_seed());
  std::vector<Rational> leads;
  for (std::size_t i = 0; i < degrees.size(); ++i) leads.emplace_back(rng.nonzero(3));
  return grid_system(axes, leads);
}

inline RootInstance transformed_instance(Rng& rng, std::span<const int> degrees) {
  const auto grid = grid_instance(rng, degrees);
  return transform_system(grid, random_unimodular(degrees.size(), rng.next_seed()));
}

}  // namespace subres::testgen

namespace subres {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << m.to_string(); }

}  // namespace subres
