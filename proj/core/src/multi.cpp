#include "subres/multi.hpp"

#include "subres/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace subres::multi {

namespace {

using ColumnIndex = std::map<Monomial, std::size_t>;

ColumnIndex index_of(std::span<const Monomial> cols) {
  ColumnIndex idx;
  for (std::size_t c = 0; c < cols.size(); ++c) idx.emplace(cols[c], c);
  return idx;
}

// Writes the coefficients of x^a f into `row` of m; every product monomial must be a column.
void fill_row(LabeledMatrix& m, std::size_t row, const Monomial& a, const Polynomial& f, const ColumnIndex& cols) {
  for (const auto& [mono, c] : f.terms()) {
    auto it = cols.find(a * mono);
    if (it == cols.end()) throw Error(ErrorCode::UnknownColumnLabel, (a * mono).to_string() + " is not a column");
    m(row, it->second) = c;
  }
}

void require_square(const LabeledMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::InvariantViolation, std::string(what) + " is " + std::to_string(m.rows()) + " x " +
                                                   std::to_string(m.cols()));
  }
}

// Number of pure powers x_l^{d_l} dividing x^a; the homogenizing variable counts with
// exponent `extra` against `extra_degree` when extra_degree > 0.
int pure_power_count(const Monomial& a, std::span<const int> degrees, int extra = 0, int extra_degree = 0) {
  int count = 0;
  for (std::size_t l = 0; l < degrees.size(); ++l) {
    if (a[l] >= degrees[l]) ++count;
  }
  if (extra_degree > 0 && extra >= extra_degree) ++count;
  return count;
}

bool later_power_divides(const Monomial& a, std::span<const int> degrees, std::size_t i) {
  for (std::size_t l = i + 1; l < degrees.size(); ++l) {
    if (a[l] >= degrees[l]) return true;
  }
  return false;
}

std::vector<Monomial> T_star_of(const MonomialSets& sets) {
  return {sets.T.begin(), sets.T.begin() + static_cast<std::ptrdiff_t>(sets.s)};
}

LabeledMatrix stack_first(const MultiProblem& p, std::size_t count, const BasisTStar& basis) {
  std::vector<LabeledMatrix> blocks;
  for (std::size_t i = 0; i < count; ++i) {
    blocks.push_back(build_M_fi(p.polys[i], static_cast<int>(i) + 1, p.sets.R[i], basis));
  }
  if (blocks.empty()) {
    LabeledMatrix empty(0, basis.monomials.size());
    empty.set_row_labels({});
    empty.set_col_labels(basis.monomials);
    return empty;
  }
  return vertical_stack(blocks);
}

std::vector<int> homogeneous_degrees(std::span<const Polynomial> fbar) {
  std::vector<int> d;
  const std::size_t n = fbar.size();
  for (const auto& f : fbar) {
    if (f.n_vars() != n) throw Error(ErrorCode::ArityMismatch, "expected n forms in n variables");
    if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f.to_string());
    d.push_back(f.degree());
  }
  return d;
}

// Rows (i, x^a) of the degree-j construction together with the full column list.
struct DegreeJRows {
  std::vector<RowLabel> labels;
  std::vector<int> owner;  // index i of the form
};

DegreeJRows degree_j_rows(std::span<const int> d, int j) {
  DegreeJRows out;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& a : monomials_of_degree(n, j - d[i])) {
      if (is_reduced(a, d.first(i))) {
        out.labels.push_back({static_cast<int>(i) + 1, a});
        out.owner.push_back(static_cast<int>(i));
      }
    }
  }
  return out;
}

Rational det_V_T(const MultiProblem& p, std::span<const Point> roots) {
  const Rational v = determinant(V_T(p, roots));
  if (sgn(v) == 0) throw Error(ErrorCode::SingularVandermonde, "V_T is singular for these roots");
  return v;
}

}  // namespace

MultiProblem make_problem(DegreeSystem sys, std::vector<Polynomial> polys, std::vector<Monomial> S,
                          TOverride overrides) {
  sys.validate();
  if (polys.size() != sys.degrees.size()) {
    throw Error(ErrorCode::ShapeMismatch,
                "expected " + std::to_string(sys.degrees.size()) + " polynomials, got " + std::to_string(polys.size()));
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].n_vars() != static_cast<std::size_t>(sys.n)) {
      throw Error(ErrorCode::ArityMismatch, "f_" + std::to_string(i + 1) + " has the wrong number of variables");
    }
    if (polys[i].degree() != sys.degrees[i]) {
      throw Error(ErrorCode::ShapeMismatch, "f_" + std::to_string(i + 1) + " has formal degree " +
                                                std::to_string(polys[i].degree()) + ", expected " +
                                                std::to_string(sys.degrees[i]));
    }
  }
  MultiProblem p;
  p.sets = validate_S(sys, std::move(S), overrides);
  p.sys = std::move(sys);
  p.polys = std::move(polys);
  p.overrides = std::move(overrides);
  return p;
}

BasisTStar build_basis(const DegreeSystem& sys, const MonomialSets& sets) {
  BasisTStar b;
  b.monomials = sets.T;
  const std::set<Monomial> in_T(sets.T.begin(), sets.T.end());
  for (const auto& m : monomials_up_to_degree(static_cast<std::size_t>(sys.n), sys.t)) {
    if (!in_T.contains(m)) b.monomials.push_back(m);
  }
  b.N_star = b.monomials.size();
  if (b.N_star != binomial(sys.t + sys.n, sys.n) + sets.s) {
    throw Error(ErrorCode::InvariantViolation, "N* != C(t+n, n) + s");
  }
  return b;
}

LabeledMatrix build_M_fi(const Polynomial& f_i, int i, std::span<const Monomial> R_i, const BasisTStar& basis) {
  const auto cols = index_of(basis.monomials);
  LabeledMatrix m(R_i.size(), basis.monomials.size());
  std::vector<RowLabel> labels;
  for (std::size_t r = 0; r < R_i.size(); ++r) {
    fill_row(m, r, R_i[r], f_i, cols);
    labels.push_back({i, R_i[r]});
  }
  m.set_row_labels(std::move(labels));
  m.set_col_labels(basis.monomials);
  return m;
}

LabeledMatrix stacked_matrix(const MultiProblem& p) {
  return stack_first(p, p.polys.size(), build_basis(p.sys, p.sets));
}

LabeledMatrix macaulay_chardin_matrix(const MultiProblem& p) {
  std::vector<Monomial> drop = p.sets.S;
  const auto star = T_star_of(p.sets);
  drop.insert(drop.end(), star.begin(), star.end());
  auto m = delete_columns(stacked_matrix(p), drop);
  require_square(m, "Macaulay-Chardin matrix");
  return m;
}

LabeledMatrix extraneous_minor(const DegreeSystem& sys, std::span<const Polynomial> f_first_n, const BasisTStar& basis) {
  sys.validate();
  const auto n = static_cast<std::size_t>(sys.n);
  if (f_first_n.size() != n) throw Error(ErrorCode::ShapeMismatch, "expected f_1..f_n");
  const auto R = build_R(sys);
  const auto cols = index_of(basis.monomials);
  const int last = sys.last_degree();
  std::span<const int> d(sys.degrees.data(), n);

  std::vector<std::size_t> col_idx;
  for (std::size_t c = 0; c < basis.monomials.size(); ++c) {
    const auto& m = basis.monomials[c];
    if (m.degree() <= sys.t && pure_power_count(m, d, sys.t - m.degree(), last) >= 2) col_idx.push_back(c);
  }

  std::vector<std::pair<std::size_t, Monomial>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& a : R[i]) {
      if (sys.t - d[i] - a.degree() >= last || later_power_divides(a, d, i)) rows.emplace_back(i, a);
    }
  }
  LabeledMatrix full(rows.size(), basis.monomials.size());
  std::vector<RowLabel> labels;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    fill_row(full, r, rows[r].second, f_first_n[rows[r].first], cols);
    labels.push_back({static_cast<int>(rows[r].first) + 1, rows[r].second});
  }
  full.set_row_labels(std::move(labels));
  full.set_col_labels(basis.monomials);
  std::vector<std::size_t> all_rows(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) all_rows[r] = r;
  auto minor = full.submatrix(all_rows, col_idx);
  require_square(minor, "extraneous minor");
  return minor;
}

Rational extraneous_factor(const DegreeSystem& sys, std::span<const Polynomial> f_first_n, const BasisTStar& basis) {
  return determinant(extraneous_minor(sys, f_first_n, basis));
}

Rational extraneous_factor(const MultiProblem& p) {
  return extraneous_factor(p.sys, std::span(p.polys).first(p.n()), build_basis(p.sys, p.sets));
}

Rational delta_S(const MultiProblem& p) {
  const Rational e = extraneous_factor(p);
  if (sgn(e) == 0) throw Error(ErrorCode::ExtraneousFactorVanishes, "E(t) = 0 at this specialization");
  return determinant(macaulay_chardin_matrix(p)) / e;
}

LabeledMatrix m_prime(const MultiProblem& p) {
  const auto basis = build_basis(p.sys, p.sets);
  auto m = delete_columns(stack_first(p, p.n(), basis), p.sets.T);
  require_square(m, "M'");
  return m;
}

std::vector<Polynomial> leading_forms(const MultiProblem& p) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < p.n(); ++i) out.push_back(leading_form(p.polys[i]));
  return out;
}

std::vector<Monomial> T_layer(const MonomialSets& sets, int j) {
  std::vector<Monomial> out;
  for (const auto& m : sets.T) {
    if (m.degree() == j) out.push_back(m);
  }
  return out;
}

LabeledMatrix homogeneous_Mj(std::span<const Polynomial> fbar, int j, std::span<const Monomial> T_j) {
  const auto d = homogeneous_degrees(fbar);
  const std::size_t n = fbar.size();
  if (j < 0) return LabeledMatrix(0, 0);
  if (T_j.size() != tau(d, j)) {
    throw Error(ErrorCode::WrongCardinality, "T_" + std::to_string(j) + " needs tau_j = " + std::to_string(tau(d, j)) +
                                                 " monomials");
  }
  std::set<Monomial> dropped;
  for (const auto& m : T_j) {
    if (m.n_vars() != n || m.degree() != j) throw Error(ErrorCode::InvalidSelection, "T_j entry " + m.to_string());
    if (!dropped.insert(m).second) throw Error(ErrorCode::DuplicateMonomial, m.to_string());
  }
  std::vector<Monomial> cols;
  for (const auto& m : monomials_of_degree(n, j)) {
    if (!dropped.contains(m)) cols.push_back(m);
  }
  const auto rows = degree_j_rows(d, j);
  const auto idx = index_of(cols);
  LabeledMatrix m(rows.labels.size(), cols.size());
  for (std::size_t r = 0; r < rows.labels.size(); ++r) {
    // T_j columns are absent from idx; their coefficients are simply not written.
    for (const auto& [mono, c] : fbar[static_cast<std::size_t>(rows.owner[r])].terms()) {
      auto it = idx.find(rows.labels[r].monomial * mono);
      if (it != idx.end()) m(r, it->second) = c;
    }
  }
  m.set_row_labels(rows.labels);
  m.set_col_labels(std::move(cols));
  require_square(m, "M_j");
  return m;
}

LabeledMatrix homogeneous_extraneous_minor(std::span<const Polynomial> fbar, int j) {
  const auto d = homogeneous_degrees(fbar);
  const std::size_t n = fbar.size();
  if (j < 0) return LabeledMatrix(0, 0);
  const auto cols = monomials_of_degree(n, j);
  const auto idx = index_of(cols);
  const auto rows = degree_j_rows(d, j);
  std::vector<std::size_t> row_idx;
  for (std::size_t r = 0; r < rows.labels.size(); ++r) {
    if (later_power_divides(rows.labels[r].monomial, d, static_cast<std::size_t>(rows.owner[r]))) row_idx.push_back(r);
  }
  std::vector<std::size_t> col_idx;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (pure_power_count(cols[c], d) >= 2) col_idx.push_back(c);
  }
  LabeledMatrix full(rows.labels.size(), cols.size());
  for (std::size_t r = 0; r < rows.labels.size(); ++r) {
    fill_row(full, r, rows.labels[r].monomial, fbar[static_cast<std::size_t>(rows.owner[r])], idx);
  }
  full.set_row_labels(rows.labels);
  full.set_col_labels(cols);
  auto minor = full.submatrix(row_idx, col_idx);
  require_square(minor, "E_j minor");
  return minor;
}

Rational homogeneous_delta(std::span<const Polynomial> fbar, int j, std::span<const Monomial> T_j) {
  if (j < 0) return Rational(1);
  const Rational e = determinant(homogeneous_extraneous_minor(fbar, j));
  if (sgn(e) == 0) {
    throw Error(ErrorCode::ExtraneousFactorVanishes, "E_" + std::to_string(j) + " = 0 at this specialization");
  }
  return determinant(homogeneous_Mj(fbar, j, T_j)) / e;
}

Rational leading_resultant(std::span<const Polynomial> fbar) {
  int rho = 0;
  for (int d : homogeneous_degrees(fbar)) rho += d - 1;
  return homogeneous_delta(fbar, rho + 1, {});
}

namespace {

// Rows xi^gamma (S), xi^alpha (T*), xi^beta f_{n+1}(xi) (R_{n+1}) without a squareness check.
LabeledMatrix root_rows(const MultiProblem& p, std::span<const Point> roots) {
  std::vector<Monomial> powers = p.sets.S;
  const auto star = T_star_of(p.sets);
  powers.insert(powers.end(), star.begin(), star.end());
  const auto& beta = p.sets.R.back();
  powers.insert(powers.end(), beta.begin(), beta.end());
  LabeledMatrix o(powers.size(), roots.size());
  for (std::size_t r = 0; r < powers.size(); ++r) {
    for (std::size_t c = 0; c < roots.size(); ++c) {
      Rational value = 1;
      for (std::size_t l = 0; l < roots[c].size(); ++l) value *= pow(roots[c][l], static_cast<unsigned>(powers[r][l]));
      o(r, c) = value;
    }
  }
  const std::size_t first_f_row = p.sets.S.size() + star.size();
  const Polynomial& last = p.polys.back();
  for (std::size_t c = 0; c < roots.size(); ++c) {
    const Rational value = evaluate(last, roots[c]);
    for (std::size_t r = first_f_row; r < o.rows(); ++r) o(r, c) *= value;
  }
  return o;
}

}  // namespace

LabeledMatrix build_O_S(const MultiProblem& p, std::span<const Point> roots) {
  if (roots.size() != p.sys.bezout()) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(p.sys.bezout()) + " roots");
  }
  auto o = root_rows(p, roots);
  require_square(o, "O_S");
  return o;
}

LabeledMatrix V_T(const MultiProblem& p, std::span<const Point> roots) {
  if (roots.size() != p.sys.bezout()) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(p.sys.bezout()) + " roots");
  }
  return vandermonde(p.sets.T, roots);
}

Rational leading_delta_product(const MultiProblem& p) {
  const auto fbar = leading_forms(p);
  Rational product = 1;
  for (int j = p.sys.t - p.sys.last_degree() + 1; j <= p.sys.t; ++j) {
    if (j < 0) continue;
    product *= homogeneous_delta(fbar, j, T_layer(p.sets, j));
  }
  return product;
}

Rational thm2_rhs(const MultiProblem& p, std::span<const Point> roots) {
  const Rational v = det_V_T(p, roots);
  return leading_delta_product(p) * determinant(build_O_S(p, roots)) / v;
}

DetIdentity thm2_det_identity(const MultiProblem& p, std::span<const Point> roots) {
  const Rational v = det_V_T(p, roots);
  DetIdentity out;
  out.lhs = determinant(macaulay_chardin_matrix(p)) * v;
  out.rhs = determinant(m_prime(p)) * determinant(build_O_S(p, roots));

  const auto basis = build_basis(p.sys, p.sets);
  std::vector<Monomial> front = p.sets.S;
  const auto star = T_star_of(p.sets);
  front.insert(front.end(), star.begin(), star.end());
  std::size_t first_rows = 0;
  for (std::size_t i = 0; i < p.n(); ++i) first_rows += p.sets.R[i].size();
  const int move = (p.sets.r * first_rows) % 2 == 0 ? 1 : -1;
  out.orientation_sign = permutation_sign(basis.monomials, front) * move;
  return out;
}

LabeledMatrix E_block(const MultiProblem& p) {
  const auto mp = m_prime(p);
  const int last = p.sys.last_degree();
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < mp.rows(); ++r) {
    const auto& label = mp.row_labels()[r];
    const int d_i = p.sys.degrees[static_cast<std::size_t>(label.tag - 1)];
    if (label.monomial.degree() <= p.sys.t - d_i - last) rows.push_back(r);
  }
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < mp.cols(); ++c) {
    if (mp.col_labels()[c].degree() <= p.sys.t - last) cols.push_back(c);
  }
  auto e = mp.submatrix(rows, cols);
  require_square(e, "E block of M'");
  return e;
}

Rational BlockFactors::E_product() const {
  Rational out = det_E_block;
  for (const auto& e : E_j) out *= e;
  return out;
}

Rational BlockFactors::Mj_product() const {
  Rational out = det_E_block;
  for (const auto& m : det_Mj) out *= m;
  return out;
}

namespace {

// Sign of the permutation taking `from` to `to` (same elements, no repeats).
template <typename T>
int reorder_sign(const std::vector<T>& from, const std::vector<T>& to) {
  if (from.size() != to.size()) throw Error(ErrorCode::InvariantViolation, "block labels do not cover the minor");
  std::map<T, std::size_t> pos;
  for (std::size_t i = 0; i < to.size(); ++i) pos.emplace(to[i], i);
  std::vector<std::size_t> perm;
  for (const auto& x : from) {
    auto it = pos.find(x);
    if (it == pos.end()) throw Error(ErrorCode::InvariantViolation, "block labels do not cover the minor");
    perm.push_back(it->second);
  }
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

BlockFactors block_factors(const MultiProblem& p) {
  BlockFactors out;
  const auto basis = build_basis(p.sys, p.sets);
  const auto minor = extraneous_minor(p.sys, std::span(p.polys).first(p.n()), basis);
  out.extraneous = determinant(minor);
  out.det_m_prime = determinant(m_prime(p));
  const auto e = E_block(p);
  out.det_E_block = determinant(e);
  std::vector<RowLabel> block_rows;
  std::vector<Monomial> block_cols;
  const auto fbar = leading_forms(p);
  for (int j = p.sys.t; j >= std::max(0, p.sys.t - p.sys.last_degree() + 1); --j) {
    out.js.insert(out.js.begin(), j);
    out.det_Mj.insert(out.det_Mj.begin(), determinant(homogeneous_Mj(fbar, j, T_layer(p.sets, j))));
    const auto ej = homogeneous_extraneous_minor(fbar, j);
    out.E_j.insert(out.E_j.begin(), determinant(ej));
    block_rows.insert(block_rows.end(), ej.row_labels().begin(), ej.row_labels().end());
    block_cols.insert(block_cols.end(), ej.col_labels().begin(), ej.col_labels().end());
  }
  block_rows.insert(block_rows.end(), e.row_labels().begin(), e.row_labels().end());
  block_cols.insert(block_cols.end(), e.col_labels().begin(), e.col_labels().end());
  out.orientation_sign = reorder_sign(minor.row_labels(), block_rows) * reorder_sign(minor.col_labels(), block_cols);
  return out;
}

MinorRatios minor_ratio_check(const Polynomial& f1, const Polynomial& f2, std::span<const Point> roots) {
  if (f1.n_vars() != 2 || f2.n_vars() != 2 || f1.degree() != 2 || f2.degree() != 2) {
    throw Error(ErrorCode::ShapeMismatch, "expected two conics in two variables");
  }
  if (roots.size() != 4) throw Error(ErrorCode::ShapeMismatch, "expected 4 common roots");
  const std::vector<Monomial> order = {Monomial({0, 0}), Monomial({1, 0}), Monomial({0, 1}),
                                       Monomial({1, 1}), Monomial({2, 0}), Monomial({0, 2})};
  MinorRatios out;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      const auto oi = static_cast<std::size_t>(i);
      const auto oj = static_cast<std::size_t>(j);
      const Rational denom = f1.coefficient(order[oi]) * f2.coefficient(order[oj]) -
                             f1.coefficient(order[oj]) * f2.coefficient(order[oi]);
      if (sgn(denom) == 0) {
        out.skipped.emplace_back(i, j);
        continue;
      }
      std::vector<Monomial> keep;
      for (std::size_t r = 0; r < 6; ++r) {
        if (r != oi && r != oj) keep.push_back(order[r]);
      }
      out.ratios.push_back(minus_one_pow(i + j) * determinant(vandermonde(keep, roots)) / denom);
      out.used.emplace_back(i, j);
    }
  }
  return out;
}

Polynomial gen_subres_polynomial(const DegreeSystem& sys, const std::vector<Polynomial>& polys,
                                 const std::vector<Monomial>& S_plus, const TOverride& overrides) {
  sys.validate();
  const std::size_t k = hilbert_count(sys.degrees, sys.n, sys.t);
  if (S_plus.size() != k + 1) {
    throw Error(ErrorCode::WrongCardinality, "S_plus needs k + 1 = " + std::to_string(k + 1) + " monomials");
  }
  Polynomial s(static_cast<std::size_t>(sys.n), sys.t);
  for (std::size_t j = 0; j < S_plus.size(); ++j) {
    std::vector<Monomial> S_j;
    for (std::size_t i = 0; i < S_plus.size(); ++i) {
      if (i != j) S_j.push_back(S_plus[i]);
    }
    s.add_term(S_plus[j], delta_S(make_problem(sys, polys, std::move(S_j), overrides)));
  }
  return s;
}

Rational gen_subres_roots_value(const DegreeSystem& sys, const std::vector<Polynomial>& polys,
                                const std::vector<Monomial>& S_plus, std::span<const Point> roots,
                                const Point& point, const TOverride& overrides) {
  sys.validate();
  const std::size_t k = hilbert_count(sys.degrees, sys.n, sys.t);
  if (S_plus.size() != k + 1) {
    throw Error(ErrorCode::WrongCardinality, "S_plus needs k + 1 = " + std::to_string(k + 1) + " monomials");
  }
  if (point.size() != static_cast<std::size_t>(sys.n)) throw Error(ErrorCode::ArityMismatch, "evaluation point");
  const auto base = make_problem(sys, polys, {S_plus.begin(), S_plus.begin() + static_cast<std::ptrdiff_t>(k)}, overrides);
  const auto basis = build_basis(base.sys, base.sets);
  const auto star = T_star_of(base.sets);

  // Rows S_plus, T*, R_{n+1}; the O_S-like block sits in columns 1..bezout.
  MultiProblem widened = base;
  widened.sets.S = S_plus;
  if (roots.size() != sys.bezout()) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(sys.bezout()) + " roots");
  }
  LabeledMatrix block = root_rows(widened, roots);  // k + 1 + s + r = bezout + 1 rows
  LabeledMatrix d(block.rows(), block.rows());
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) d(r, c + 1) = block(r, c);
  }
  for (std::size_t j = 0; j < S_plus.size(); ++j) {
    std::vector<Monomial> front;
    for (std::size_t i = 0; i < S_plus.size(); ++i) {
      if (i != j) front.push_back(S_plus[i]);
    }
    front.insert(front.end(), star.begin(), star.end());
    Rational x_gamma = 1;
    for (std::size_t l = 0; l < point.size(); ++l) x_gamma *= pow(point[l], static_cast<unsigned>(S_plus[j][l]));
    d(j, 0) = minus_one_pow(static_cast<long>(j)) * Rational(permutation_sign(basis.monomials, front)) * x_gamma;
  }
  return leading_delta_product(base) * determinant(d) / det_V_T(base, roots);
}

}  // namespace subres::multi
