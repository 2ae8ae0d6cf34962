#pragma once

#include "subres/monomial.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace subres {

// n affine variables, degrees d_1..d_{n+1}, target order t.
struct DegreeSystem {
  int n = 0;
  std::vector<int> degrees;
  int t = 0;

  /// rho = (d_1 - 1) + ... + (d_n - 1)
  int rho() const;
  int t_star() const;
  /// Bezout number d_1 * ... * d_n.
  std::size_t bezout() const;
  int last_degree() const { return degrees.back(); }
  /// Throws ShapeMismatch / IndexOutOfRange on malformed systems.
  void validate() const;
};

/// Explicit choices of T_j (keyed by j); only allowed for j >= max(0, t - d_{n+1} + 1).
using TOverride = std::map<int, std::vector<Monomial>>;

struct MonomialSets {
  std::vector<Monomial> S;
  std::vector<std::vector<Monomial>> R;  // R_1 .. R_{n+1}
  std::vector<Monomial> T;               // T* occupies the first `s` entries
  std::size_t s = 0;
  std::size_t r = 0;                     // |R_{n+1}|
  std::size_t k = 0;
};

/// x^a with a_i < d_i for every i < n_constrained.
bool is_reduced(const Monomial& m, std::span<const int> degrees);

std::size_t binomial(long top, long bottom);

/// k = #{x^a : |a| <= t, a_i < d_i (i <= n), t - |a| < d_{n+1}} by enumeration over
/// a in Z^n (degrees has length n + 1).
std::size_t hilbert_count(std::span<const int> degrees, int n_vars_affine, int t);

/// tau_j = #{a : |a| = j, a_i < d_i} for n = degrees.size() variables.
std::size_t tau(std::span<const int> degrees, int j);

std::vector<std::vector<Monomial>> build_R(const DegreeSystem& sys);

struct TChoice {
  std::vector<Monomial> T;
  std::size_t s = 0;
};

/// T = union of T_j (default: reduced monomials of degree j), with the entries of
/// degree in (t, t*] first. Overrides must list tau_j distinct degree-j monomials.
TChoice build_T(const DegreeSystem& sys, const TOverride& overrides = {});

/// (-1)^sigma for the permutation taking `ambient` to (front..., rest of ambient in order).
/// Throws InvalidSelection if `front` is not a duplicate-free subset of `ambient`.
int permutation_sign(std::span<const Monomial> ambient, std::span<const Monomial> front);

/// sg(S): parity of bringing (1, x, ..., x^{t*}) to (S, x^{t+1..t*}, remaining in order).
int sign_of_S(std::span<const Monomial> S, int t, int t_star, std::span<const Monomial> ambient);

/// Assembles the monomial sets of a problem; checks |S| = k, deg <= t, distinctness,
/// and asserts the two counting identities N = k + sum|R_i| and k + r = #reduced(<= t).
MonomialSets validate_S(const DegreeSystem& sys, std::vector<Monomial> S, const TOverride& overrides = {});

}  // namespace subres
