#include "subres/matrix.hpp"

#include "subres/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace subres {

LabeledMatrix::LabeledMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

LabeledMatrix LabeledMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  LabeledMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::ShapeMismatch, "ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

const std::vector<RowLabel>& LabeledMatrix::row_labels() const {
  if (!row_labels_) throw Error(ErrorCode::ShapeMismatch, "matrix has no row labels");
  return *row_labels_;
}

const std::vector<Monomial>& LabeledMatrix::col_labels() const {
  if (!col_labels_) throw Error(ErrorCode::ShapeMismatch, "matrix has no column labels");
  return *col_labels_;
}

void LabeledMatrix::set_row_labels(std::vector<RowLabel> labels) {
  if (labels.size() != rows_) throw Error(ErrorCode::ShapeMismatch, "row label count");
  std::set<RowLabel> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error(ErrorCode::DuplicateMonomial, "duplicate row label");
  row_labels_ = std::move(labels);
}

void LabeledMatrix::set_col_labels(std::vector<Monomial> labels) {
  if (labels.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "column label count");
  std::set<Monomial> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error(ErrorCode::DuplicateMonomial, "duplicate column label");
  col_labels_ = std::move(labels);
}

std::optional<std::size_t> LabeledMatrix::find_column(const Monomial& label) const {
  if (!col_labels_) return std::nullopt;
  auto it = std::find(col_labels_->begin(), col_labels_->end(), label);
  if (it == col_labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - col_labels_->begin());
}

LabeledMatrix LabeledMatrix::submatrix(std::span<const std::size_t> row_idx,
                                       std::span<const std::size_t> col_idx) const {
  LabeledMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r) {
    for (std::size_t c = 0; c < col_idx.size(); ++c) out(r, c) = (*this)(row_idx[r], col_idx[c]);
  }
  if (row_labels_) {
    std::vector<RowLabel> labels;
    labels.reserve(row_idx.size());
    for (auto r : row_idx) labels.push_back((*row_labels_)[r]);
    out.set_row_labels(std::move(labels));
  }
  if (col_labels_) {
    std::vector<Monomial> labels;
    labels.reserve(col_idx.size());
    for (auto c : col_idx) labels.push_back((*col_labels_)[c]);
    out.set_col_labels(std::move(labels));
  }
  return out;
}

void LabeledMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  if (row_labels_) std::swap((*row_labels_)[a], (*row_labels_)[b]);
}

namespace {

std::size_t bit_length(const Integer& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace

Rational determinant(const LabeledMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NonSquareMatrix,
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row; `scale` accumulates the multipliers.
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      Integer q = row_lcm / m(r, c).get_den();
      a[r * n + c] = m(r, c).get_num() * q;
    }
    scale *= row_lcm;
  }

  int parity = 1;
  Integer previous = 1;
  Integer tmp;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    std::size_t best_bits = 0;
    for (std::size_t i = k; i < n; ++i) {
      if (sgn(a[i * n + k]) == 0) continue;
      std::size_t bits = 0;
      for (std::size_t j = k; j < n; ++j) bits += bit_length(a[i * n + j]);
      if (pivot == n || bits < best_bits) {
        pivot = i;
        best_bits = bits;
      }
    }
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      parity = -parity;
    }
    const Integer& akk = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer aik = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& aij = a[i * n + j];
        mpz_mul(tmp.get_mpz_t(), aij.get_mpz_t(), akk.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), aik.get_mpz_t(), a[k * n + j].get_mpz_t());
        mpz_divexact(aij.get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    previous = akk;
  }

  Rational det(a[n * n - 1] * parity, scale);
  det.canonicalize();
  return det;
}

LabeledMatrix delete_columns(const LabeledMatrix& m, std::span<const Monomial> drop) {
  std::set<std::size_t> dropped;
  for (const auto& mono : drop) {
    auto c = m.find_column(mono);
    if (!c) throw Error(ErrorCode::UnknownColumnLabel, mono.to_string());
    dropped.insert(*c);
  }
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!dropped.count(c)) keep.push_back(c);
  }
  return m.submatrix(rows, keep);
}

LabeledMatrix vertical_stack(std::span<const LabeledMatrix> blocks) {
  if (blocks.empty()) return LabeledMatrix();
  const auto& first = blocks.front();
  std::size_t total_rows = 0;
  bool all_row_labels = true;
  for (const auto& b : blocks) {
    if (b.cols() != first.cols() || b.has_col_labels() != first.has_col_labels() ||
        (b.has_col_labels() && b.col_labels() != first.col_labels())) {
      throw Error(ErrorCode::ColumnMismatch, "blocks disagree on column labels");
    }
    total_rows += b.rows();
    all_row_labels = all_row_labels && b.has_row_labels();
  }
  LabeledMatrix out(total_rows, first.cols());
  std::vector<RowLabel> labels;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out(offset + r, c) = b(r, c);
    }
    if (all_row_labels) labels.insert(labels.end(), b.row_labels().begin(), b.row_labels().end());
    offset += b.rows();
  }
  if (all_row_labels) out.set_row_labels(std::move(labels));
  if (first.has_col_labels()) out.set_col_labels(first.col_labels());
  return out;
}

LabeledMatrix multiply(const LabeledMatrix& a, const LabeledMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "matrix product");
  LabeledMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

LabeledMatrix identity_matrix(std::size_t n) {
  LabeledMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

LabeledMatrix inverse(const LabeledMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquareMatrix, "inverse");
  const std::size_t n = m.rows();
  LabeledMatrix work(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) work(r, c) = m(r, c);
  LabeledMatrix inv = identity_matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(work(pivot, k)) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "inverse of a singular matrix");
    work.swap_rows(k, pivot);
    inv.swap_rows(k, pivot);
    const Rational p = work(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      work(k, c) /= p;
      inv(k, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || sgn(work(r, k)) == 0) continue;
      const Rational f = work(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

}  // namespace subres
