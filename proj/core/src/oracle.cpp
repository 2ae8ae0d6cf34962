#include "subres/oracle.hpp"

#include "subres/error.hpp"

#include <vector>

namespace subres::oracle {

namespace {

Rational cofactor(const LabeledMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.rows()) return Rational(1);
  Rational total = 0;
  for (std::size_t pos = 0; pos < cols.size(); ++pos) {
    const std::size_t c = cols[pos];
    if (sgn(m(row, c)) == 0) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pos));
    const Rational minor = cofactor(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(pos), c);
    if (pos % 2 == 0) {
      total += m(row, c) * minor;
    } else {
      total -= m(row, c) * minor;
    }
  }
  return total;
}

}  // namespace

Rational det_cofactor(const LabeledMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquareMatrix, "cofactor expansion needs a square matrix");
  if (m.rows() > 8) throw Error(ErrorCode::TooLarge, "cofactor oracle is limited to 8 x 8");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  return cofactor(m, cols, 0);
}

std::size_t hilbert_ie(std::span<const int> degrees, int n_vars, int t) {
  const std::size_t s = degrees.size();
  long total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    long shift = 0;
    int parity = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask & (std::size_t{1} << i)) {
        shift += degrees[i];
        ++parity;
      }
    }
    const long top = t - shift + n_vars;
    long term = 0;
    if (top >= n_vars) {
      // C(top, n_vars) by the multiplicative formula
      term = 1;
      for (long i = 1; i <= n_vars; ++i) term = term * (top - n_vars + i) / i;
    }
    total += (parity % 2 == 0) ? term : -term;
  }
  return static_cast<std::size_t>(total);
}

Rational res_product(std::span<const Rational> f_roots, const Rational& f_lead, std::span<const Rational> g_roots,
                     const Rational& g_lead) {
  Rational value = pow(f_lead, static_cast<unsigned>(g_roots.size())) * pow(g_lead, static_cast<unsigned>(f_roots.size()));
  for (const auto& a : f_roots) {
    for (const auto& b : g_roots) value *= a - b;
  }
  return value;
}

Rational vandermonde_product(std::span<const Rational> xs) {
  Rational value = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) value *= xs[j] - xs[i];
  }
  return value;
}

}  // namespace subres::oracle
