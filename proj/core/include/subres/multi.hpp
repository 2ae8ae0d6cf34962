#pragma once

#include "subres/combinat.hpp"
#include "subres/instances.hpp"
#include "subres/matrix.hpp"
#include "subres/polynomial.hpp"

#include <span>
#include <utility>
#include <vector>

// Macaulay-Chardin subresultants of n + 1 polynomials f_1..f_{n+1} in n
// variables, their extraneous factors, the homogeneous subresultants of the
// leading forms of f_1..f_n, and the expressions of all of these in the common
// roots of f_1..f_n.
//
// Orderings: the big stack has the f_1 block first through the f_{n+1} block,
// rows inside a block in monomial order on R_i; columns follow build_basis.
// Determinants are therefore sign-deterministic, but the multivariate
// identities only hold up to a global sign per instance.
namespace subres::multi {

struct MultiProblem {
  DegreeSystem sys;
  std::vector<Polynomial> polys;  // f_1..f_{n+1}
  MonomialSets sets;
  TOverride overrides;

  std::size_t n() const { return static_cast<std::size_t>(sys.n); }
};

/// Checks arity and formal degrees of the polys against `sys` and validates S.
/// Throws ShapeMismatch / ArityMismatch / DegreeTooHigh plus validate_S errors.
MultiProblem make_problem(DegreeSystem sys, std::vector<Polynomial> polys, std::vector<Monomial> S,
                          TOverride overrides = {});

struct BasisTStar {
  std::vector<Monomial> monomials;  // T (T* first), then the remaining degree <= t monomials
  std::size_t N_star = 0;
};

BasisTStar build_basis(const DegreeSystem& sys, const MonomialSets& sets);

/// Rows (i, x^a), a in R_i, holding the coefficients of x^a f_i over the basis.
LabeledMatrix build_M_fi(const Polynomial& f_i, int i, std::span<const Monomial> R_i, const BasisTStar& basis);

/// M_{f_1} over ... over M_{f_{n+1}} on the full basis.
LabeledMatrix stacked_matrix(const MultiProblem& p);

/// The stack with the S and T* columns removed; square of size N - k.
LabeledMatrix macaulay_chardin_matrix(const MultiProblem& p);

/// Macaulay's extraneous minor of the stack of f_1..f_n (f_{n+1} plays no role).
LabeledMatrix extraneous_minor(const DegreeSystem& sys, std::span<const Polynomial> f_first_n, const BasisTStar& basis);
Rational extraneous_factor(const DegreeSystem& sys, std::span<const Polynomial> f_first_n, const BasisTStar& basis);
Rational extraneous_factor(const MultiProblem& p);

/// det(macaulay_chardin_matrix) / E(t). Throws ExtraneousFactorVanishes.
Rational delta_S(const MultiProblem& p);

/// Stack of M_{f_1}..M_{f_n} restricted to the columns K[x]_t \ T.
LabeledMatrix m_prime(const MultiProblem& p);

/// Leading forms of f_1..f_n.
std::vector<Polynomial> leading_forms(const MultiProblem& p);

/// The monomials of T of degree j, in stored order.
std::vector<Monomial> T_layer(const MonomialSets& sets, int j);

/// Rows (i, x^a), |a| = j - d_i, a_l < d_l for l < i; columns: degree-j monomials minus T_j.
/// Throws NotHomogeneous, InvariantViolation (non-square: wrong |T_j|).
LabeledMatrix homogeneous_Mj(std::span<const Polynomial> fbar, int j, std::span<const Monomial> T_j);

/// Extraneous minor of the full degree-j coefficient matrix of the x^a fbar_i: rows with
/// some a_l >= d_l (l > i), columns divisible by two distinct pure powers x_i^{d_i}, x_l^{d_l}.
LabeledMatrix homogeneous_extraneous_minor(std::span<const Polynomial> fbar, int j);

/// det(M_j) / E_j; 1 for j < 0. Throws ExtraneousFactorVanishes.
Rational homogeneous_delta(std::span<const Polynomial> fbar, int j, std::span<const Monomial> T_j);

/// Res(fbar_1, ..., fbar_n) up to sign: homogeneous_delta at j = rho + 1 with T_j empty.
Rational leading_resultant(std::span<const Polynomial> fbar);

/// Rows xi^gamma (S), xi^alpha (T*), xi^beta f_{n+1}(xi) (R_{n+1}); one column per root.
LabeledMatrix build_O_S(const MultiProblem& p, std::span<const Point> roots);

/// Generalized Vandermonde over T (stored order). Throws SingularVandermonde if singular.
LabeledMatrix V_T(const MultiProblem& p, std::span<const Point> roots);

/// prod_{j = t-d_{n+1}+1}^{t} homogeneous_delta(fbar, j, T_j).
Rational leading_delta_product(const MultiProblem& p);

/// prod(homogeneous deltas) * det(O_S) / det(V_T).
Rational thm2_rhs(const MultiProblem& p, std::span<const Point> roots);

struct DetIdentity {
  Rational lhs;  // det(M~_S) * det(V_T)
  Rational rhs;  // det(M') * det(O_S)
  /// Sign predicted by the block product: lhs = orientation_sign * rhs.
  int orientation_sign = 1;
};

/// Division-free form of the root formula; valid even when E(t) = 0.
DetIdentity thm2_det_identity(const MultiProblem& p, std::span<const Point> roots);

// Factors of the block-triangular decomposition of M' after reordering by
// descending degree: the diagonal blocks M_t, ..., M_{t-d_{n+1}+1} and the
// low-degree block E.
struct BlockFactors {
  Rational extraneous;        // E(t)
  Rational det_m_prime;       // det(M')
  Rational det_E_block;       // det(E)
  std::vector<int> js;        // t-d_{n+1}+1 .. t, only j >= 0
  std::vector<Rational> det_Mj;
  std::vector<Rational> E_j;
  /// Parity of reordering the rows and columns of the E(t) minor into the block
  /// order (E_t, ..., E_{t-d_{n+1}+1}, E): extraneous = orientation_sign * E_product().
  int orientation_sign = 1;

  Rational E_product() const;     // det(E) * prod E_j
  Rational Mj_product() const;    // det(E) * prod det(M_j)
};

LabeledMatrix E_block(const MultiProblem& p);
BlockFactors block_factors(const MultiProblem& p);

struct MinorRatios {
  std::vector<Rational> ratios;
  std::vector<std::pair<int, int>> used;
  std::vector<std::pair<int, int>> skipped;  // a_i b_j = a_j b_i
};

/// n = 2, d = (2, 2): (-1)^{i+j} det(V_{i,j}) / (a_i b_j - a_j b_i) over all pairs i < j,
/// coefficients indexed along (1, x1, x2, x1x2, x1^2, x2^2). Throws ShapeMismatch.
MinorRatios minor_ratio_check(const Polynomial& f1, const Polynomial& f2, std::span<const Point> roots);

/// s(x) = sum_j delta_S(S_plus \ {x^{gamma_j}}) x^{gamma_j}. S_plus has k + 1 entries.
Polynomial gen_subres_polynomial(const DegreeSystem& sys, const std::vector<Polynomial>& polys,
                                 const std::vector<Monomial>& S_plus, const TOverride& overrides = {});

/// Root-side value at `point`: prod(homogeneous deltas) / det(V_T) times the determinant whose
/// first column holds (-1)^j sigma(S_j) x^{gamma_j} next to the rows xi^{gamma_j}, followed by
/// the T* rows (0 | xi^alpha) and the rows (0 | xi^beta f_{n+1}(xi)). sigma(S_j) is the parity of
/// moving (S_j, T*) to the front of the basis. Agrees with s(point) up to one global sign.
Rational gen_subres_roots_value(const DegreeSystem& sys, const std::vector<Polynomial>& polys,
                                const std::vector<Monomial>& S_plus, std::span<const Point> roots,
                                const Point& point, const TOverride& overrides = {});

}  // namespace subres::multi
