#include "suites.hpp"

#include "subres/combinat.hpp"
#include "subres/error.hpp"
#include "subres/instances.hpp"
#include "subres/multi.hpp"
#include "subres/oracle.hpp"
#include "subres/uni.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace subres::cli {

namespace {

using nlohmann::json;

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 step: well-spread, reproducible per-instance seeds.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Rational nonzero(int bound) {
    const int v = integer(1, bound);
    return Rational(integer(0, 1) == 0 ? v : -v);
  }

  std::uint64_t seed() { return engine_(); }

  std::vector<Monomial> selection(std::size_t n_vars, int t, std::size_t k) {
    auto pool = monomials_up_to_degree(n_vars, t);
    std::shuffle(pool.begin(), pool.end(), engine_);
    pool.resize(k);
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  void check(bool ok, std::uint64_t seed, const std::string& invariant, json detail = json::object()) {
    const std::size_t index = report_.instances++;
    if (ok) {
      ++report_.passed;
      return;
    }
    detail["instance"] = index;
    detail["seed"] = seed;
    detail["invariant"] = invariant;
    report_.failures.push_back(std::move(detail));
  }

  void error(std::uint64_t seed, const std::string& invariant, const Error& e) {
    check(false, seed, invariant, {{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
  }

  SuiteReport& report() { return report_; }

 private:
  SuiteReport& report_;
};

json values(const Rational& lhs, const Rational& rhs) { return {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}}; }

json values(const Polynomial& lhs, const Polynomial& rhs) { return {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}}; }

int uni_k(int d1, int d2, int t) { return t + 1 - std::max(0, t - d1 + 1) - std::max(0, t - d2 + 1); }

struct UniInstance {
  Polynomial f;
  Polynomial g;
  std::vector<Rational> roots;
  Rational lead;
};

UniInstance uni_instance(Draw& draw, int d1, int d2) {
  const int deg[] = {d2};
  UniInstance u;
  u.roots = random_axes(deg, draw.seed())[0];
  u.lead = draw.nonzero(4);
  u.g = univariate_from_roots(u.roots, u.lead).polys[0];
  u.f = random_polynomial(1, d1, draw.seed(), 9);
  return u;
}

RootInstance grid(Draw& draw, std::span<const int> degrees) {
  std::vector<Rational> leads;
  for (std::size_t i = 0; i < degrees.size(); ++i) leads.push_back(draw.nonzero(3));
  return grid_system(random_axes(degrees, draw.seed()), leads);
}

// A linear change of coordinates of a grid; redrawn while V_T is singular for the default T.
RootInstance transformed(Draw& draw, const DegreeSystem& sys, SuiteReport& report) {
  const std::span<const int> first_n(sys.degrees.data(), static_cast<std::size_t>(sys.n));
  const auto base = grid(draw, first_n);
  const auto T = build_T(sys).T;
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto inst = transform_system(base, random_unimodular(static_cast<std::size_t>(sys.n), draw.seed()));
    if (sgn(determinant(vandermonde(T, inst.roots))) != 0) return inst;
    ++report.redraws;
  }
  throw Error(ErrorCode::SingularVandermonde, "no transform with a nonsingular V_T in 64 draws");
}

std::vector<Polynomial> with_last(const RootInstance& inst, Polynomial last) {
  auto polys = inst.polys;
  polys.push_back(std::move(last));
  return polys;
}

void suite_thm1(const SuiteOptions& o, Recorder& rec) {
  std::uint64_t index = 0;
  for (int d1 = 1; d1 <= o.max_degree; ++d1) {
    for (int d2 = 1; d2 <= o.max_degree; ++d2) {
      const std::uint64_t seed = instance_seed(o.seed, index++);
      Draw draw(seed);
      const auto u = uni_instance(draw, d1, d2);
      for (int t = 0; t <= d1 + d2 - 1; ++t) {
        for (int c = 0; c < o.count; ++c) {
          const auto S = draw.selection(1, t, static_cast<std::size_t>(uni_k(d1, d2, t)));
          try {
            const uni::UniProblem p{u.f, u.g, t, S};
            const Rational lhs = uni::delta_S_uni(p);
            const Rational rhs = uni::thm1_rhs(u.f, u.roots, u.lead, t, S);
            rec.check(lhs == rhs, seed, "delta_S_uni = thm1_rhs", values(lhs, rhs));
            const Rational det_ms = determinant(uni::build_M_S(p));
            rec.check(det_ms == uni::sign_of_S(p) * lhs, seed, "det(M_S) = sg(S) delta_S_uni", values(det_ms, lhs));
          } catch (const Error& e) {
            rec.error(seed, "thm1", e);
          }
        }
      }
    }
  }
}

void suite_hong(const SuiteOptions& o, Recorder& rec) {
  for (int i = 0; i < o.count; ++i) {
    const std::uint64_t seed = instance_seed(o.seed, static_cast<std::uint64_t>(i));
    Draw draw(seed);
    const int d1 = draw.integer(1, o.max_degree), d2 = draw.integer(1, o.max_degree);
    const auto u = uni_instance(draw, d1, d2);
    for (int k = 0; k <= std::min(d1, d2); ++k) {
      if (k == d1 && k == d2) continue;  // the scalar determinants are empty there
      try {
        const auto lhs = uni::hong_sres_rhs(u.f, u.roots, u.lead, k);
        const auto rhs = uni::sres_polynomial(u.f, u.g, k);
        rec.check(lhs == rhs, seed, "hong_sres_rhs = sres_polynomial", values(lhs, rhs));
      } catch (const Error& e) {
        rec.error(seed, "hong", e);
      }
    }
  }
}

void suite_koko(const SuiteOptions& o, Recorder& rec) {
  for (int i = 0; i < o.count; ++i) {
    const std::uint64_t seed = instance_seed(o.seed, static_cast<std::uint64_t>(i));
    Draw draw(seed);
    const int d1 = draw.integer(1, o.max_degree), d2 = draw.integer(1, o.max_degree);
    const auto u = uni_instance(draw, d1, d2);
    const int t = draw.integer(d2, d1 + d2 - 1);
    const int k = d2 - std::max(0, t - d1 + 1);
    auto S_plus = draw.selection(1, t, static_cast<std::size_t>(k + 1));
    std::sort(S_plus.begin(), S_plus.end());
    try {
      const auto lhs = uni::gen_sres_roots_rhs(u.f, u.roots, u.lead, t, S_plus);
      const auto rhs = uni::gen_sres_polynomial(u.f, u.g, t, S_plus);
      rec.check(lhs == rhs, seed, "gen_sres_roots_rhs = gen_sres_polynomial", values(lhs, rhs));
    } catch (const Error& e) {
      rec.error(seed, "koko", e);
    }
  }
}

void suite_poisson_uni(const SuiteOptions& o, Recorder& rec) {
  for (int i = 0; i < o.count; ++i) {
    const std::uint64_t seed = instance_seed(o.seed, static_cast<std::uint64_t>(i));
    Draw draw(seed);
    const int d1 = draw.integer(1, o.max_degree), d2 = draw.integer(1, o.max_degree);
    const auto u = uni_instance(draw, d1, d2);
    try {
      const Rational res = uni::resultant(u.f, u.g);
      Rational prod = minus_one_pow(static_cast<long>(d1) * d2) * pow(u.lead, static_cast<unsigned>(d1));
      for (const auto& xi : u.roots) {
        const Rational point[] = {xi};
        prod *= evaluate(u.f, point);
      }
      rec.check(res == prod, seed, "Res(f, g) = (-1)^(d1 d2) b^d1 prod f(xi)", values(res, prod));
      const Rational delta = uni::delta_S_uni({u.f, u.g, d1 + d2 - 1, {}});
      const Rational expected = minus_one_pow(static_cast<long>(d1) * d2) * res;
      rec.check(delta == expected, seed, "delta_empty = (-1)^(d1 d2) Res(f, g)", values(delta, expected));
    } catch (const Error& e) {
      rec.error(seed, "poisson-uni", e);
    }
  }
}

DegreeSystem random_triple(Draw& draw, int max_degree) {
  DegreeSystem sys{2, {draw.integer(1, max_degree), draw.integer(1, max_degree), draw.integer(1, max_degree)}, 0};
  sys.t = draw.integer(0, sys.rho() + sys.last_degree());
  return sys;
}

void suite_thm2(const SuiteOptions& o, Recorder& rec) {
  for (int i = 0; i < o.count; ++i) {
    const std::uint64_t seed = instance_seed(o.seed, static_cast<std::uint64_t>(i));
    Draw draw(seed);
    const auto sys = random_triple(draw, o.max_degree);
    try {
      const std::span<const int> first_n(sys.degrees.data(), 2);
      const auto inst = i % 2 == 0 ? grid(draw, first_n) : transformed(draw, sys, rec.report());
      const auto polys = with_last(inst, random_polynomial(2, sys.last_degree(), draw.seed(), 9));
      const auto p = multi::make_problem(sys, polys, draw.selection(2, sys.t, hilbert_count(sys.degrees, 2, sys.t)));
      const auto id = multi::thm2_det_identity(p, inst.roots);
      rec.check(abs(id.lhs) == abs(id.rhs), seed, "|det(M~_S) det(V_T)| = |det(M') det(O_S)|", values(id.lhs, id.rhs));
      rec.check(id.lhs == id.orientation_sign * id.rhs, seed, "det(M~_S) det(V_T) = sign det(M') det(O_S)",
                values(id.lhs, id.rhs));
      Rational delta;
      Rational rhs;
      try {
        delta = multi::delta_S(p);
        rhs = multi::thm2_rhs(p, inst.roots);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ExtraneousFactorVanishes) continue;
        throw;
      }
      rec.check(abs(delta) == abs(rhs), seed, "|delta_S| = |prod Delta_bar det(O_S) / det(V_T)|", values(delta, rhs));
    } catch (const Error& e) {
      rec.error(seed, "thm2", e);
    }
  }
}

void suite_poisson_multi(const SuiteOptions& o, Recorder& rec) {
  const int top = std::min(o.max_degree, 3);
  int valid = 0;
  for (int i = 0; valid < o.count && i < 20 * o.count; ++i) {
    const std::uint64_t seed = instance_seed(o.seed, static_cast<std::uint64_t>(i));
    Draw draw(seed);
    DegreeSystem sys{2, {draw.integer(1, top), draw.integer(1, top), draw.integer(1, top)}, 0};
    sys.t = sys.rho() + sys.last_degree();
    try {
      const std::span<const int> first_n(sys.degrees.data(), 2);
      const auto inst = i % 2 == 0 ? grid(draw, first_n) : transformed(draw, sys, rec.report());
      const auto polys = with_last(inst, random_polynomial(2, sys.last_degree(), draw.seed(), 9));
      const auto p = multi::make_problem(sys, polys, {});
      if (multi::extraneous_factor(p) == 0) {
        ++rec.report().redraws;
        continue;
      }
      ++valid;
      const Rational delta = multi::delta_S(p);
      Rational rhs = pow(abs(multi::leading_resultant(multi::leading_forms(p))), static_cast<unsigned>(sys.last_degree()));
      for (const auto& xi : inst.roots) rhs *= abs(evaluate(polys.back(), xi));
      rec.check(abs(delta) == rhs, seed, "|delta_empty| = |Res(f_bar)|^d3 prod |f3(xi)|", values(delta, rhs));
    } catch (const Error& e) {
      rec.error(seed, "poisson-multi", e);
    }
  }
  if (valid < o.count) {
    rec.check(false, o.seed, "poisson-multi found enough instances with E(t) != 0", {{"found", valid}});
  }
}

void suite_rar(const SuiteOptions& o, Recorder& rec) {
  for (int i = 0; i < o.count; ++i) {
    const std::uint64_t seed = instance_seed(o.seed, static_cast<std::uint64_t>(i));
    Draw draw(seed);
    const auto sys = random_triple(draw, o.max_degree);
    try {
      std::vector<Polynomial> polys;
      for (int d : sys.degrees) polys.push_back(random_polynomial(2, d, draw.seed(), 9));
      const auto p = multi::make_problem(sys, polys, draw.selection(2, sys.t, hilbert_count(sys.degrees, 2, sys.t)));
      const auto f = multi::block_factors(p);
      rec.check(f.extraneous == f.orientation_sign * f.E_product(), seed, "E(t) = det(E) prod E_j",
                values(f.extraneous, f.E_product()));
      rec.check(abs(f.det_m_prime) == abs(f.Mj_product()), seed, "|det(M')| = |det(E) prod det(M_j)|",
                values(f.det_m_prime, f.Mj_product()));
    } catch (const Error& e) {
      rec.error(seed, "rar", e);
    }
  }
}

void suite_counts(const SuiteOptions& o, Recorder& rec) {
  const int top = std::min(o.max_degree, 4);
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> d(static_cast<std::size_t>(n) + 1, 1);
    while (true) {
      int rho = 0;
      for (int i = 0; i < n; ++i) rho += d[static_cast<std::size_t>(i)] - 1;
      for (int t = 0; t <= rho + d.back(); ++t) {
        const DegreeSystem sys{n, d, t};
        const std::size_t k = hilbert_count(d, n, t);
        const std::size_t k_ie = oracle::hilbert_ie(d, n, t);
        json detail = {{"degrees", d}, {"t", t}};
        rec.check(k == k_ie, 0, "hilbert_count = hilbert_ie", detail);
        const auto R = build_R(sys);
        std::size_t rows = 0;
        for (const auto& Ri : R) rows += Ri.size();
        rec.check(binomial(t + n, n) == k + rows, 0, "C(t+n, n) = k + sum |R_i|", detail);
        std::size_t reduced = 0;
        for (const auto& m : monomials_up_to_degree(static_cast<std::size_t>(n), t)) {
          if (is_reduced(m, std::span(d).first(static_cast<std::size_t>(n)))) ++reduced;
        }
        rec.check(k + R.back().size() == reduced, 0, "k + r = #reduced monomials of degree <= t", detail);
        rec.check(build_T(sys).T.size() == sys.bezout(), 0, "|T| = d_1 ... d_n", detail);
      }
      std::size_t i = 0;
      while (i < d.size() && d[i] == top) d[i++] = 1;
      if (i == d.size()) break;
      ++d[i];
    }
  }
}

void suite_minor_ratio(const SuiteOptions& o, Recorder& rec) {
  const DegreeSystem sys{2, {2, 2, 1}, 0};
  for (int i = 0; i < o.count; ++i) {
    const std::uint64_t seed = instance_seed(o.seed, static_cast<std::uint64_t>(i));
    Draw draw(seed);
    try {
      const auto inst = transformed(draw, sys, rec.report());
      const auto r = multi::minor_ratio_check(inst.polys[0], inst.polys[1], inst.roots);
      bool same = !r.ratios.empty();
      for (const auto& v : r.ratios) same = same && v == r.ratios.front();
      json detail = {{"used", r.used.size()}, {"skipped", r.skipped.size()}};
      if (!r.ratios.empty()) detail["first"] = to_string(r.ratios.front());
      rec.check(same, seed, "all minor ratios coincide", detail);
    } catch (const Error& e) {
      rec.error(seed, "minor-ratio", e);
    }
  }
}

void suite_oracles(const SuiteOptions& o, Recorder& rec) {
  for (int i = 0; i < o.count; ++i) {
    const std::uint64_t seed = instance_seed(o.seed, static_cast<std::uint64_t>(i));
    Draw draw(seed);
    const auto n = static_cast<std::size_t>(draw.integer(1, 7));
    LabeledMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Rational v(draw.integer(-9, 9), draw.integer(1, 9));
        v.canonicalize();
        m(r, c) = v;
      }
    }
    const Rational bareiss = determinant(m);
    const Rational cofactor = oracle::det_cofactor(m);
    rec.check(bareiss == cofactor, seed, "determinant = det_cofactor", values(bareiss, cofactor));

    const int d1 = draw.integer(1, o.max_degree), d2 = draw.integer(1, o.max_degree);
    const int df[] = {d1};
    const int dg[] = {d2};
    const auto fr = random_axes(df, draw.seed())[0];
    const auto gr = random_axes(dg, draw.seed())[0];
    const Rational a = draw.nonzero(4), b = draw.nonzero(4);
    const Rational res = uni::resultant(univariate_from_roots(fr, a).polys[0], univariate_from_roots(gr, b).polys[0]);
    const Rational prod = oracle::res_product(fr, a, gr, b);
    rec.check(res == prod, seed, "resultant = res_product", values(res, prod));
  }
}

using SuiteFn = void (*)(const SuiteOptions&, Recorder&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"thm1", suite_thm1},         {"thm2", suite_thm2},   {"poisson-uni", suite_poisson_uni},
      {"poisson-multi", suite_poisson_multi}, {"rar", suite_rar}, {"hong", suite_hong},
      {"koko", suite_koko},         {"counts", suite_counts}, {"minor-ratio", suite_minor_ratio},
      {"oracles", suite_oracles},
  };
  return suites;
}

}  // namespace

json SuiteReport::to_json(std::uint64_t seed) const {
  return {{"suite", suite}, {"seed", seed},       {"instances", instances}, {"passed", passed},
          {"redraws", redraws}, {"failures", failures}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteReport report;
  report.suite = name;
  Recorder rec(report);
  if (name == "all") {
    for (const auto& [suite, fn] : registry()) {
      SuiteReport part;
      part.suite = suite;
      Recorder part_rec(part);
      fn(options, part_rec);
      report.instances += part.instances;
      report.passed += part.passed;
      report.redraws += part.redraws;
      for (auto f : part.failures) {
        f["suite"] = suite;
        report.failures.push_back(std::move(f));
      }
    }
    return report;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
  it->second(options, rec);
  return report;
}

}  // namespace subres::cli
