#pragma once

#include "subres/monomial.hpp"
#include "subres/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace subres {

/// Row label of a Sylvester/Macaulay block: `tag` names the polynomial (or the
/// identity block) and `monomial` the multiplier x^a of that row.
struct RowLabel {
  int tag = 0;
  Monomial monomial;

  friend bool operator==(const RowLabel&, const RowLabel&) = default;
  friend auto operator<=>(const RowLabel&, const RowLabel&) = default;
};

// Dense row-major matrix of exact rationals whose rows and columns may carry
// monomial labels. Column labels are pairwise distinct monomials; row labels are
// pairwise distinct (tag, monomial) pairs.
class LabeledMatrix {
 public:
  LabeledMatrix() = default;
  LabeledMatrix(std::size_t rows, std::size_t cols);

  static LabeledMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  bool has_row_labels() const noexcept { return row_labels_.has_value(); }
  bool has_col_labels() const noexcept { return col_labels_.has_value(); }
  const std::vector<RowLabel>& row_labels() const;
  const std::vector<Monomial>& col_labels() const;
  void set_row_labels(std::vector<RowLabel> labels);
  void set_col_labels(std::vector<Monomial> labels);

  std::optional<std::size_t> find_column(const Monomial& label) const;

  /// Submatrix on the given row and column index lists (in that order); labels follow.
  LabeledMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  std::optional<std::vector<RowLabel>> row_labels_;
  std::optional<std::vector<Monomial>> col_labels_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers by the lcm of its denominators; the pivot at every step
/// is the candidate row of least total bit length (ties: lowest index).
/// The 0x0 determinant is 1. Throws NonSquareMatrix.
Rational determinant(const LabeledMatrix& m);

/// Removes the columns whose labels are in `drop`, keeping the order of the rest.
/// Throws UnknownColumnLabel if a monomial of `drop` labels no column.
LabeledMatrix delete_columns(const LabeledMatrix& m, std::span<const Monomial> drop);

/// Concatenates rows block by block. Blocks must share the same column-label
/// sequence (or all be unlabeled with equal column counts). Throws ColumnMismatch.
LabeledMatrix vertical_stack(std::span<const LabeledMatrix> blocks);

LabeledMatrix multiply(const LabeledMatrix& a, const LabeledMatrix& b);

/// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrix.
LabeledMatrix inverse(const LabeledMatrix& m);

LabeledMatrix identity_matrix(std::size_t n);

}  // namespace subres
