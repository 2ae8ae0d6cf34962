#pragma once

#include "subres/matrix.hpp"
#include "subres/polynomial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace subres {

using Point = std::vector<Rational>;

// A system f_1..f_n together with its full list of common roots. Every
// polynomial vanishes at every root; the roots are pairwise distinct and there
// are d_1 * ... * d_n of them.
struct RootInstance {
  std::vector<Polynomial> polys;
  std::vector<Point> roots;
  /// Leading coefficient per polynomial (for grid-derived systems, the lead_i of the grid).
  std::vector<Rational> leads;

  std::size_t n_vars() const { return polys.empty() ? 0 : polys.front().n_vars(); }
};

/// lead * (x - r_1) ... (x - r_d). Throws ZeroLeadingCoefficient, IndexOutOfRange (no roots),
/// DuplicateAxisValue (repeated root).
RootInstance univariate_from_roots(std::span<const Rational> roots, const Rational& lead);

/// f_i = lead_i * prod_j (x_i - c_ij); roots form the Cartesian grid of the axes.
/// Throws DuplicateAxisValue, ZeroLeadingCoefficient, ShapeMismatch.
RootInstance grid_system(const std::vector<std::vector<Rational>>& axes, std::span<const Rational> leads);

/// g_i(x) = f_i(A x), roots A^{-1} xi. Throws SingularTransform, ShapeMismatch.
RootInstance transform_system(const RootInstance& inst, const LabeledMatrix& A);

/// p(A x) with the formal degree of p.
Polynomial substitute_linear(const Polynomial& p, const LabeledMatrix& A);

/// Entry (i, j) = points_j ^ T_i. Throws ShapeMismatch, ArityMismatch.
LabeledMatrix vandermonde(std::span<const Monomial> T, std::span<const Point> points);

/// Random integer matrix of determinant +-1: a product of shears and a signed permutation.
LabeledMatrix random_unimodular(std::size_t n, std::uint64_t seed);

/// For each degree d_i, d_i distinct integers with |c| <= bound.
std::vector<std::vector<Rational>> random_axes(std::span<const int> degrees, std::uint64_t seed, int bound = 9);

/// Every polynomial of `inst` vanishes at every root.
bool vanishes_on_roots(const RootInstance& inst);

}  // namespace subres
