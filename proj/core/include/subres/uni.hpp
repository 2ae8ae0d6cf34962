#pragma once

#include "subres/matrix.hpp"
#include "subres/polynomial.hpp"

#include <span>
#include <utility>
#include <vector>

// Univariate subresultants of f (degree d1) and g (degree d2): Sylvester-type
// matrices, order-t subresultants with respect to a monomial set S, the scalar
// and polynomial subresultants, and their expressions in the roots of g.
//
// Sign conventions:
//  * Columns of M_f, M_g are the ascending basis 1, x, ..., x^{t*}; M_f rows
//    come first. delta_S_uni is the determinant of that stack after deletions.
//  * resultant() is the classical Sylvester determinant: rows x^{d2-1}f, ..., f,
//    x^{d1-1}g, ..., g over the descending basis x^{d1+d2-1}, ..., 1. It equals
//    scalar_subresultant(f, g, 0, 0) and a^{d2} b^{d1} prod(alpha_i - beta_j).
namespace subres::uni {

struct UniProblem {
  Polynomial f;
  Polynomial g;
  int t = 0;
  std::vector<Monomial> S;

  int d1() const { return f.degree(); }
  int d2() const { return g.degree(); }
  int t_star() const;
  /// k = t + 1 - max(0, t - d1 + 1) - max(0, t - d2 + 1)
  int k() const;
  /// Throws ArityMismatch / BadOrderRange / WrongCardinality / DegreeTooHigh / DuplicateMonomial.
  void validate() const;
};

std::vector<Monomial> ambient_basis(int t_star);

/// Rows x^a f (a = 0..t-d1) and x^b g (b = 0..t-d2) over 1, ..., x^{t*}.
std::pair<LabeledMatrix, LabeledMatrix> build_Mf_Mg(const UniProblem& p);

/// M_S: identity rows for S and x^{t+1..t*} stacked over M_f and M_g.
/// det(M_S) = sg(S) * delta_S_uni.
LabeledMatrix build_M_S(const UniProblem& p);

int sign_of_S(const UniProblem& p);

/// Order-t subresultant of f, g with respect to S.
Rational delta_S_uni(const UniProblem& p);

/// Scalar subresultant S_k^{(j)}, 0 <= j <= k <= min(d1, d2). Throws IndexOutOfRange.
Rational scalar_subresultant(const Polynomial& f, const Polynomial& g, int k, int j);
LabeledMatrix scalar_subresultant_matrix(const Polynomial& f, const Polynomial& g, int k, int j);

/// Sres_k = sum_j S_k^{(j)} x^j.
Polynomial sres_polynomial(const Polynomial& f, const Polynomial& g, int k);

LabeledMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g);
Rational resultant(const Polynomial& f, const Polynomial& g);

/// Vandermonde matrix (xi_j^{i}), i = 0..rows-1.
LabeledMatrix power_matrix(std::span<const Rational> roots, int rows);

/// sg(S) * lead^{t*-d2+1} * det(O_S) / V_{d2}, where g = lead * prod(x - root).
/// Throws SingularVandermonde (repeated roots), WrongCardinality.
Rational thm1_rhs(const Polynomial& f, std::span<const Rational> g_roots, const Rational& g_lead, int t,
                  std::span<const Monomial> S);
LabeledMatrix build_O_S(const Polynomial& f, std::span<const Rational> g_roots, int t,
                        std::span<const Monomial> S);

/// (-1)^{(d1-k)(d2-k)} lead^{d1-k} W(x) / V_{d2}, W the discrete Wronskian with rows
/// (x - xi) xi^i (i < k) and xi^i f(xi) (i < d2 - k); expanded by interpolation at x = 0..k.
Polynomial hong_sres_rhs(const Polynomial& f, std::span<const Rational> g_roots, const Rational& g_lead, int k);

/// s(x) = sum_j delta_S_uni(t, S_plus \ {x^{gamma_j}}) x^{gamma_j} for d2 <= t <= d1+d2-1.
/// Throws BadOrderRange, WrongCardinality.
Polynomial gen_sres_polynomial(const Polynomial& f, const Polynomial& g, int t, std::span<const Monomial> S_plus);

/// Root-side expression of gen_sres_polynomial:
///   eps * lead^{t-d2+1} * V^{-1} * (-x)^{gamma_0} * det[(xi^{D_i} + (-x)^{D_i}) xi^{gamma_{i-1}} ; xi^m f(xi)]
/// with D_i = gamma_i - gamma_{i-1} and eps = (-1)^{sum gamma - k(k-1)/2}.
/// When every gap D_i is odd this is, up to a global sign, the telescoping determinant
/// with rows (x^{D_i} - xi^{D_i}) xi^{gamma_{i-1}}; for even gaps the sign pattern above
/// is the one that matches the coefficient-side definition.
Polynomial gen_sres_roots_rhs(const Polynomial& f, std::span<const Rational> g_roots, const Rational& g_lead, int t,
                              std::span<const Monomial> S_plus);

/// The telescoping determinant with rows (x^{D_i} - xi^{D_i}) xi^{gamma_{i-1}}, unsigned-corrected.
/// Matches gen_sres_polynomial exactly when S_plus = {1, x, ..., x^k}.
Polynomial gen_sres_roots_telescoping(const Polynomial& f, std::span<const Rational> g_roots, const Rational& g_lead,
                                      int t, std::span<const Monomial> S_plus);

}  // namespace subres::uni
