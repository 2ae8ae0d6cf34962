#include "subres/instances.hpp"

#include "subres/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace subres {

namespace {

void require_distinct(std::span<const Rational> values, const char* what) {
  std::set<Rational> seen;
  for (const auto& v : values) {
    if (!seen.insert(v).second) throw Error(ErrorCode::DuplicateAxisValue, std::string(what) + " repeats " + to_string(v));
  }
}

Rational power_product(const Point& point, const Monomial& m) {
  Rational value = 1;
  for (std::size_t i = 0; i < m.n_vars(); ++i) {
    if (m[i] != 0) value *= pow(point[i], static_cast<unsigned>(m[i]));
  }
  return value;
}

}  // namespace

RootInstance univariate_from_roots(std::span<const Rational> roots, const Rational& lead) {
  if (sgn(lead) == 0) throw Error(ErrorCode::ZeroLeadingCoefficient, "lead must be nonzero");
  if (roots.empty()) throw Error(ErrorCode::IndexOutOfRange, "need at least one root");
  require_distinct(roots, "root list");
  Polynomial g = Polynomial::constant(1, lead);
  for (const auto& r : roots) {
    const Rational lin[] = {-r, Rational(1)};
    g = g * Polynomial::univariate(lin);
  }
  RootInstance inst;
  inst.polys.push_back(std::move(g));
  for (const auto& r : roots) inst.roots.push_back({r});
  inst.leads.push_back(lead);
  return inst;
}

RootInstance grid_system(const std::vector<std::vector<Rational>>& axes, std::span<const Rational> leads) {
  const std::size_t n = axes.size();
  if (n == 0 || leads.size() != n) throw Error(ErrorCode::ShapeMismatch, "need one lead per axis");
  RootInstance inst;
  for (std::size_t i = 0; i < n; ++i) {
    if (axes[i].empty()) throw Error(ErrorCode::ShapeMismatch, "empty axis");
    if (sgn(leads[i]) == 0) throw Error(ErrorCode::ZeroLeadingCoefficient, "lead must be nonzero");
    require_distinct(axes[i], "axis");
    Polynomial f = Polynomial::constant(n, leads[i]);
    for (const auto& c : axes[i]) f = f * (Polynomial::variable(n, i) - Polynomial::constant(n, c, 1));
    inst.polys.push_back(std::move(f));
    inst.leads.push_back(leads[i]);
  }
  // Cartesian product, first axis varying slowest.
  inst.roots.push_back({});
  for (const auto& axis : axes) {
    std::vector<Point> next;
    for (const auto& prefix : inst.roots) {
      for (const auto& c : axis) {
        Point p = prefix;
        p.push_back(c);
        next.push_back(std::move(p));
      }
    }
    inst.roots = std::move(next);
  }
  return inst;
}

Polynomial substitute_linear(const Polynomial& p, const LabeledMatrix& A) {
  const std::size_t n = p.n_vars();
  if (A.rows() != n || A.cols() != n) throw Error(ErrorCode::ShapeMismatch, "transform must be n x n");
  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial form(n, 1);
    for (std::size_t j = 0; j < n; ++j) form.add_term(Monomial::variable(n, j), A(i, j));
    forms.push_back(std::move(form));
  }
  Polynomial out(n, p.degree());
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) term = term * pow(forms[i], static_cast<unsigned>(m[i]));
    }
    out += term.with_degree(p.degree());
  }
  return out;
}

RootInstance transform_system(const RootInstance& inst, const LabeledMatrix& A) {
  const std::size_t n = inst.n_vars();
  if (A.rows() != n || A.cols() != n) throw Error(ErrorCode::ShapeMismatch, "transform must be n x n");
  LabeledMatrix inv;
  try {
    inv = inverse(A);
  } catch (const Error&) {
    throw Error(ErrorCode::SingularTransform, "transform is not invertible");
  }
  RootInstance out;
  for (const auto& f : inst.polys) out.polys.push_back(substitute_linear(f, A));
  for (const auto& xi : inst.roots) {
    Point y(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) y[i] += inv(i, j) * xi[j];
    }
    out.roots.push_back(std::move(y));
  }
  out.leads = inst.leads;
  return out;
}

LabeledMatrix vandermonde(std::span<const Monomial> T, std::span<const Point> points) {
  if (T.size() != points.size()) throw Error(ErrorCode::ShapeMismatch, "|T| != number of points");
  LabeledMatrix v(T.size(), points.size());
  for (std::size_t i = 0; i < T.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (points[j].size() != T[i].n_vars()) throw Error(ErrorCode::ArityMismatch, "point arity");
      v(i, j) = power_product(points[j], T[i]);
    }
  }
  return v;
}

LabeledMatrix random_unimodular(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> shear(-2, 2);
  LabeledMatrix a = identity_matrix(n);
  for (std::size_t round = 0; round < 2 * n; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const int c = shear(rng);
        if (c == 0) continue;
        LabeledMatrix e = identity_matrix(n);
        e(i, j) = c;
        a = multiply(a, e);
      }
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  LabeledMatrix p(n, n);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = flip(rng) ? -1 : 1;
  return multiply(a, p);
}

std::vector<std::vector<Rational>> random_axes(std::span<const int> degrees, std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::vector<int> pool(static_cast<std::size_t>(2 * bound + 1));
  std::iota(pool.begin(), pool.end(), -bound);
  std::vector<std::vector<Rational>> axes;
  for (int d : degrees) {
    if (d < 1 || d > static_cast<int>(pool.size())) throw Error(ErrorCode::IndexOutOfRange, "axis size");
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Rational> axis;
    for (int i = 0; i < d; ++i) axis.emplace_back(pool[static_cast<std::size_t>(i)]);
    axes.push_back(std::move(axis));
  }
  return axes;
}

bool vanishes_on_roots(const RootInstance& inst) {
  for (const auto& f : inst.polys) {
    for (const auto& xi : inst.roots) {
      if (sgn(evaluate(f, xi)) != 0) return false;
    }
  }
  return true;
}

}  // namespace subres
