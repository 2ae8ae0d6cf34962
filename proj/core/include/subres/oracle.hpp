#pragma once

#include "subres/matrix.hpp"
#include "subres/polynomial.hpp"

#include <cstddef>
#include <span>

// Slow, structurally independent reference implementations. They exist only to
// cross-check the main pipelines.
namespace subres::oracle {

/// Determinant by recursive first-row cofactor expansion. Throws NonSquareMatrix, TooLarge (> 8).
Rational det_cofactor(const LabeledMatrix& m);

/// Closed-form Hilbert function of a complete intersection:
/// sum over subsets I of (-1)^{|I|} C(t - sum_{i in I} d_i + n_vars, n_vars).
std::size_t hilbert_ie(std::span<const int> degrees, int n_vars, int t);

/// f_lead^{d2} g_lead^{d1} prod_{i,j} (alpha_i - beta_j).
Rational res_product(std::span<const Rational> f_roots, const Rational& f_lead, std::span<const Rational> g_roots,
                     const Rational& g_lead);

/// prod_{i<j} (x_j - x_i).
Rational vandermonde_product(std::span<const Rational> xs);

}  // namespace subres::oracle
