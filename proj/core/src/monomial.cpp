#include "subres/monomial.hpp"

#include "subres/error.hpp"

#include <numeric>

namespace subres {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw Error(ErrorCode::ParseError, "negative exponent in monomial");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::one(std::size_t n_vars) { return Monomial(std::vector<int>(n_vars, 0)); }

Monomial Monomial::variable(std::size_t n_vars, std::size_t index, int power) {
  std::vector<int> e(n_vars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.n_vars() != n_vars()) throw Error(ErrorCode::ArityMismatch, "monomial product");
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::extended(int last_exponent) const {
  std::vector<int> e(exponents_);
  e.push_back(last_exponent);
  return Monomial(std::move(e));
}

Monomial Monomial::truncated() const {
  std::vector<int> e(exponents_.begin(), exponents_.end() - (exponents_.empty() ? 0 : 1));
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.n_vars() != b.n_vars()) return a.n_vars() <=> b.n_vars();
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  // Lexicographically larger exponent vectors come first within a degree.
  return b.exponents_ <=> a.exponents_;
}

namespace {

void compositions(std::size_t n_vars, int remaining, std::vector<int>& prefix, std::vector<Monomial>& out) {
  if (prefix.size() + 1 == n_vars) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    prefix.push_back(e);
    compositions(n_vars, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n_vars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (n_vars == 0) {
    if (degree == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> prefix;
  prefix.reserve(n_vars);
  compositions(n_vars, degree, prefix, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t n_vars, int degree) {
  std::vector<Monomial> out;
  for (int j = 0; j <= degree; ++j) {
    auto layer = monomials_of_degree(n_vars, j);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace subres
