#include "subres/error.hpp"
#include "subres/matrix.hpp"
#include "subres/oracle.hpp"
#include "subres/rational.hpp"
#include "support/gen.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace subres;
using testgen::Rng;

namespace {

Monomial m2(int a, int b) { return Monomial({a, b}); }

// Columns (1, x1, x2, x1x2, x1^2, x2^2) with rows a, b, c.
LabeledMatrix example_stack() {
  LabeledMatrix m(3, 6);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = Rational(static_cast<long>(10 * r + c + 1));
  }
  m.set_col_labels({m2(0, 0), m2(1, 0), m2(0, 1), m2(1, 1), m2(2, 0), m2(0, 2)});
  return m;
}

}  // namespace

TEST(RationalTest, CanonicalStrings) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(parse_rational("-12"), Rational(-12));
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/3", "1.5", "1//2", " 3", "10/-4"}) {
    try {
      parse_rational(bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(RationalTest, ArithmeticIsExact) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.rational(1000);
    const Rational b = rng.rational(1000);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(parse_rational(to_string(a)), a);
  }
}

TEST(DeterminantTest, SmallCases) {
  EXPECT_EQ(determinant(identity_matrix(3)), 1);
  EXPECT_EQ(determinant(LabeledMatrix::from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(LabeledMatrix(0, 0)), 1);
  EXPECT_EQ(determinant(LabeledMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}})),
            Rational(1, 10) - Rational(1, 12));
  EXPECT_EQ(determinant(LabeledMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), 0);
}

TEST(DeterminantTest, NonSquareThrows) {
  try {
    determinant(LabeledMatrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonSquareMatrix);
  }
}

TEST(DeterminantTest, MatchesCofactorOracleSeeded) {
  Rng rng(2024);
  const auto m = testgen::random_matrix(rng, 6, 6);
  EXPECT_EQ(determinant(m), oracle::det_cofactor(m));
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 7));
    const auto a = testgen::random_matrix(rng, n, n, rng.integer(1, 30));
    EXPECT_EQ(determinant(a), oracle::det_cofactor(a)) << "trial " << trial;
  }
}

TEST(DeterminantTest, SparseAndSingularMatchOracle) {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 7));
    auto a = testgen::random_matrix(rng, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (rng.integer(0, 2) == 0) a(r, c) = 0;
      }
    }
    if (trial % 3 == 0) {
      for (std::size_t c = 0; c < n; ++c) a(n - 1, c) = a(0, c) * 3;
      EXPECT_EQ(determinant(a), 0);
    }
    EXPECT_EQ(determinant(a), oracle::det_cofactor(a));
  }
}

TEST(DeterminantTest, AlternatingUnderRowSwaps) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 8));
    auto a = testgen::random_matrix(rng, n, n);
    const Rational before = determinant(a);
    const auto i = static_cast<std::size_t>(rng.integer(0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(rng.integer(0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    a.swap_rows(i, j);
    EXPECT_EQ(determinant(a), -before);
  }
}

TEST(DeterminantTest, BlockUpperTriangularFactors) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = static_cast<std::size_t>(rng.integer(1, 4));
    const auto q = static_cast<std::size_t>(rng.integer(1, 4));
    const auto A = testgen::random_matrix(rng, p, p);
    const auto B = testgen::random_matrix(rng, q, q);
    const auto C = testgen::random_matrix(rng, p, q);
    LabeledMatrix M(p + q, p + q);
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) M(r, c) = A(r, c);
      for (std::size_t c = 0; c < q; ++c) M(r, p + c) = C(r, c);
    }
    for (std::size_t r = 0; r < q; ++r) {
      for (std::size_t c = 0; c < q; ++c) M(p + r, p + c) = B(r, c);
    }
    EXPECT_EQ(determinant(M), determinant(A) * determinant(B));
  }
}

TEST(DeterminantTest, LargeIntegerEntries) {
  // Hilbert-like matrix: known nonzero determinant, checked against the inverse.
  const std::size_t n = 9;
  LabeledMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) h(r, c) = Rational(1, static_cast<long>(r + c + 1));
  }
  const Rational d = determinant(h);
  EXPECT_NE(sgn(d), 0);
  EXPECT_EQ(determinant(inverse(h)) * d, 1);
}

TEST(MatrixTest, InverseRoundTrip) {
  Rng rng(3);
  const auto a = testgen::random_matrix(rng, 5, 5);
  ASSERT_NE(sgn(determinant(a)), 0);
  EXPECT_EQ(multiply(a, inverse(a)), identity_matrix(5));
  try {
    inverse(LabeledMatrix::from_rows({{1, 2}, {2, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(DeleteColumnsTest, EmptyDropIsIdentity) {
  const auto m = example_stack();
  EXPECT_EQ(delete_columns(m, {}), m);
}

TEST(DeleteColumnsTest, ExampleSelectionLeavesThreeColumns) {
  const auto m = example_stack();
  const std::vector<Monomial> drop = {m2(1, 0), m2(1, 1), m2(2, 0)};
  const auto r = delete_columns(m, drop);
  ASSERT_EQ(r.rows(), 3u);
  ASSERT_EQ(r.cols(), 3u);
  EXPECT_EQ(r.col_labels(), (std::vector<Monomial>{m2(0, 0), m2(0, 1), m2(0, 2)}));
  EXPECT_EQ(r(1, 1), m(1, 2));
  EXPECT_EQ(r(2, 2), m(2, 5));
}

TEST(DeleteColumnsTest, DropEverythingAndUnknownLabel) {
  const auto m = example_stack();
  const auto all = m.col_labels();
  const auto r = delete_columns(m, all);
  EXPECT_EQ(r.rows(), 3u);
  EXPECT_EQ(r.cols(), 0u);
  const std::vector<Monomial> bad = {m2(3, 0)};
  try {
    delete_columns(m, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownColumnLabel);
  }
}

TEST(DeleteColumnsTest, DropOrderDoesNotMatter) {
  Rng rng(8);
  auto m = testgen::random_matrix(rng, 3, 6);
  m.set_col_labels(example_stack().col_labels());
  std::vector<Monomial> drop = {m2(2, 0), m2(1, 0), m2(1, 1)};
  const Rational d = determinant(delete_columns(m, drop));
  std::sort(drop.begin(), drop.end());
  do {
    EXPECT_EQ(determinant(delete_columns(m, drop)), d);
  } while (std::next_permutation(drop.begin(), drop.end()));
}

TEST(VerticalStackTest, ShapesAndLabels) {
  Rng rng(4);
  auto a = testgen::random_matrix(rng, 2, 4);
  auto b = testgen::random_matrix(rng, 3, 4);
  const LabeledMatrix one[] = {a};
  EXPECT_EQ(vertical_stack(one), a);
  const LabeledMatrix two[] = {a, b};
  const auto s = vertical_stack(two);
  EXPECT_EQ(s.rows(), 5u);
  EXPECT_EQ(s.cols(), 4u);
  EXPECT_EQ(s(3, 2), b(1, 2));

  a.set_col_labels({m2(0, 0), m2(1, 0), m2(0, 1), m2(2, 0)});
  b.set_col_labels({m2(0, 0), m2(1, 0), m2(0, 1), m2(0, 2)});
  const LabeledMatrix clash[] = {a, b};
  try {
    vertical_stack(clash);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ColumnMismatch);
  }
}

TEST(VerticalStackTest, RowLabelsConcatenate) {
  LabeledMatrix a(1, 2);
  LabeledMatrix b(1, 2);
  a.set_row_labels({{1, Monomial({0})}});
  b.set_row_labels({{2, Monomial({0})}});
  const LabeledMatrix blocks[] = {a, b};
  const auto s = vertical_stack(blocks);
  ASSERT_TRUE(s.has_row_labels());
  EXPECT_EQ(s.row_labels()[1].tag, 2);
}

TEST(LabeledMatrixTest, LabelValidation) {
  LabeledMatrix m(2, 2);
  try {
    m.set_col_labels({m2(0, 0), m2(0, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateMonomial);
  }
  try {
    m.set_col_labels({m2(0, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
}
