#include "subres/combinat.hpp"

#include "subres/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace subres {

int DegreeSystem::rho() const {
  int r = 0;
  for (int i = 0; i < n; ++i) r += degrees[static_cast<std::size_t>(i)] - 1;
  return r;
}

int DegreeSystem::t_star() const { return std::max(rho(), t); }

std::size_t DegreeSystem::bezout() const {
  std::size_t b = 1;
  for (int i = 0; i < n; ++i) b *= static_cast<std::size_t>(degrees[static_cast<std::size_t>(i)]);
  return b;
}

void DegreeSystem::validate() const {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "need at least one affine variable");
  if (degrees.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n + 1) + " degrees");
  }
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorCode::IndexOutOfRange, "degrees must be positive");
  }
  if (t < 0) throw Error(ErrorCode::BadOrderRange, "t must be non-negative");
}

bool is_reduced(const Monomial& m, std::span<const int> degrees) {
  for (std::size_t i = 0; i < degrees.size() && i < m.n_vars(); ++i) {
    if (m[i] >= degrees[i]) return false;
  }
  return true;
}

std::size_t binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  std::size_t result = 1;
  for (long i = 1; i <= bottom; ++i) {
    result = result * static_cast<std::size_t>(top - bottom + i) / static_cast<std::size_t>(i);
  }
  return result;
}

std::size_t hilbert_count(std::span<const int> degrees, int n_vars_affine, int t) {
  if (degrees.size() != static_cast<std::size_t>(n_vars_affine) + 1) {
    throw Error(ErrorCode::ShapeMismatch, "hilbert_count expects n + 1 degrees");
  }
  const int last = degrees.back();
  std::size_t k = 0;
  for (const auto& m : monomials_up_to_degree(static_cast<std::size_t>(n_vars_affine), t)) {
    if (is_reduced(m, degrees.first(static_cast<std::size_t>(n_vars_affine))) && t - m.degree() < last) ++k;
  }
  return k;
}

std::size_t tau(std::span<const int> degrees, int j) {
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(degrees.size(), j)) {
    if (is_reduced(m, degrees)) ++count;
  }
  return count;
}

std::vector<std::vector<Monomial>> build_R(const DegreeSystem& sys) {
  sys.validate();
  const auto n = static_cast<std::size_t>(sys.n);
  std::vector<std::vector<Monomial>> R(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    std::span<const int> earlier(sys.degrees.data(), i);
    for (const auto& m : monomials_up_to_degree(n, sys.t - sys.degrees[i])) {
      if (is_reduced(m, earlier)) R[i].push_back(m);
    }
  }
  return R;
}

TChoice build_T(const DegreeSystem& sys, const TOverride& overrides) {
  sys.validate();
  const auto n = static_cast<std::size_t>(sys.n);
  std::span<const int> first_n(sys.degrees.data(), n);
  const int free_from = std::max(0, sys.t - sys.last_degree() + 1);
  const int rho = sys.rho();
  const int t_star = sys.t_star();

  for (const auto& [j, chosen] : overrides) {
    if (j < free_from) {
      throw Error(ErrorCode::InvalidSelection,
                  "T_" + std::to_string(j) + " is fixed for j < " + std::to_string(free_from));
    }
    if (chosen.size() != tau(first_n, j)) {
      throw Error(ErrorCode::WrongCardinality, "T_" + std::to_string(j) + " must have tau_j entries");
    }
    std::set<Monomial> seen;
    for (const auto& m : chosen) {
      if (m.n_vars() != n || m.degree() != j) {
        throw Error(ErrorCode::InvalidSelection, "T_" + std::to_string(j) + " entry " + m.to_string());
      }
      if (!seen.insert(m).second) throw Error(ErrorCode::DuplicateMonomial, m.to_string());
    }
  }

  std::vector<Monomial> star;
  std::vector<Monomial> rest;
  for (int j = 0; j <= rho; ++j) {
    std::vector<Monomial> layer;
    if (auto it = overrides.find(j); it != overrides.end()) {
      layer = it->second;
    } else {
      for (const auto& m : monomials_of_degree(n, j)) {
        if (is_reduced(m, first_n)) layer.push_back(m);
      }
    }
    auto& target = (j > sys.t && j <= t_star) ? star : rest;
    target.insert(target.end(), layer.begin(), layer.end());
  }
  TChoice out;
  out.s = star.size();
  out.T = std::move(star);
  out.T.insert(out.T.end(), rest.begin(), rest.end());
  return out;
}

int permutation_sign(std::span<const Monomial> ambient, std::span<const Monomial> front) {
  std::vector<std::size_t> order;
  std::vector<bool> used(ambient.size(), false);
  for (const auto& m : front) {
    auto it = std::find(ambient.begin(), ambient.end(), m);
    if (it == ambient.end()) throw Error(ErrorCode::InvalidSelection, m.to_string() + " not in ambient basis");
    const auto pos = static_cast<std::size_t>(it - ambient.begin());
    if (used[pos]) throw Error(ErrorCode::InvalidSelection, "repeated " + m.to_string());
    used[pos] = true;
    order.push_back(pos);
  }
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (!used[i]) order.push_back(i);
  }
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (order[i] > order[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int sign_of_S(std::span<const Monomial> S, int t, int t_star, std::span<const Monomial> ambient) {
  std::vector<Monomial> front(S.begin(), S.end());
  for (const auto& m : ambient) {
    if (m.degree() > t && m.degree() <= t_star) front.push_back(m);
  }
  return permutation_sign(ambient, front);
}

MonomialSets validate_S(const DegreeSystem& sys, std::vector<Monomial> S, const TOverride& overrides) {
  sys.validate();
  const auto n = static_cast<std::size_t>(sys.n);
  MonomialSets sets;
  sets.k = hilbert_count(sys.degrees, sys.n, sys.t);
  if (S.size() != sets.k) {
    throw Error(ErrorCode::WrongCardinality,
                "|S| = " + std::to_string(S.size()) + " but k = " + std::to_string(sets.k));
  }
  std::set<Monomial> seen;
  for (const auto& m : S) {
    if (m.n_vars() != n) throw Error(ErrorCode::ArityMismatch, "S entry " + m.to_string());
    if (m.degree() > sys.t) throw Error(ErrorCode::DegreeTooHigh, "S entry " + m.to_string());
    if (!seen.insert(m).second) throw Error(ErrorCode::DuplicateMonomial, "S entry " + m.to_string());
  }
  sets.S = std::move(S);
  sets.R = build_R(sys);
  auto tc = build_T(sys, overrides);
  sets.T = std::move(tc.T);
  sets.s = tc.s;
  sets.r = sets.R.back().size();

  std::size_t rows = 0;
  for (const auto& Ri : sets.R) rows += Ri.size();
  if (binomial(sys.t + sys.n, sys.n) != sets.k + rows) {
    throw Error(ErrorCode::InvariantViolation, "C(t+n, n) != k + sum |R_i|");
  }
  std::size_t reduced = 0;
  std::span<const int> first_n(sys.degrees.data(), n);
  for (const auto& m : monomials_up_to_degree(n, sys.t)) {
    if (is_reduced(m, first_n)) ++reduced;
  }
  if (sets.k + sets.r != reduced) throw Error(ErrorCode::InvariantViolation, "k + r != #reduced monomials");
  if (sets.T.size() != sys.bezout()) throw Error(ErrorCode::InvariantViolation, "|T| != Bezout number");
  return sets;
}

}  // namespace subres
