// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "subres/combinat.hpp"
#include "subres/error.hpp"
#include "subres/instances.hpp"
#include "subres/multi.hpp"
#include "subres/oracle.hpp"
#include "subres/uni.hpp"
#include "support/gen.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace subres;
using testgen::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    if (!ok) ++failed_;
  }
  int checked() const { return checked_; }
  int failed() const { return failed_; }
  Outcome outcome(std::string detail) const {
    if (failed_ > 0) detail += "; " + std::to_string(failed_) + " failed, first: " + first_failure_;
    return {failed_ == 0, detail};
  }

 private:
  int checked_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

std::string str(const Rational& v) { return to_string(v); }

Rational eval1(const Polynomial& p, const Rational& x) {
  const Rational pt[] = {x};
  return evaluate(p, pt);
}

std::vector<Polynomial> with_last(const RootInstance& inst, Polynomial last) {
  auto polys = inst.polys;
  polys.push_back(std::move(last));
  return polys;
}

std::vector<Monomial> powers(std::initializer_list<int> exps) { return testgen::univariate_powers(exps); }

int uni_k(int d1, int d2, int t) { return t + 1 - std::max(0, t - d1 + 1) - std::max(0, t - d2 + 1); }

// Transformed grid whose default V_T is nonsingular; singular draws are discarded and counted.
RootInstance transformed_nonsingular(Rng& rng, const DegreeSystem& sys, int& redraws) {
  const auto T = build_T(sys).T;
  for (;;) {
    auto inst = testgen::transformed_instance(rng, std::span(sys.degrees).first(static_cast<std::size_t>(sys.n)));
    if (determinant(vandermonde(T, inst.roots)) != 0) return inst;
    ++redraws;
  }
}

Outcome criterion1() {
  Rng rng(101);
  Tally tally;
  const uni::UniProblem fixed{testgen::random_univariate(rng, 5), Polynomial::univariate(std::vector<Rational>{1, 3, 2}), 4,
                              powers({1, 4})};
  const Rational v = uni::delta_S_uni(fixed);
  tally.expect(v == 7, "b = (1, 3, 2) gave " + str(v));
  for (int trial = 0; trial < 20; ++trial) {
    const Rational b0 = rng.rational(), b1 = rng.rational(), b2 = rng.nonzero_rational();
    const std::vector<Rational> b = {b0, b1, b2};
    const uni::UniProblem p{testgen::random_univariate(rng, 5), Polynomial::univariate(b), 4, powers({1, 4})};
    const Rational expected = b0 * b1 * b1 - b0 * b0 * b2;
    const Rational got = uni::delta_S_uni(p);
    tally.expect(got == expected, "trial " + std::to_string(trial) + ": " + str(got) + " != " + str(expected));
  }
  return tally.outcome("b = (1, 3, 2) -> " + str(v) + "; " + std::to_string(tally.checked()) + " instances");
}

Outcome criterion2() {
  Rng rng(102);
  Tally tally;
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = testgen::random_univariate(rng, 2);
    const Rational a2 = f.coefficient(Monomial::variable(1, 0, 2));
    const uni::UniProblem p{f, testgen::random_univariate(rng, 5), 3, powers({0, 1})};
    const Rational got = uni::delta_S_uni(p);
    tally.expect(got == a2 * a2, "trial " + std::to_string(trial) + ": " + str(got));
  }
  return tally.outcome(std::to_string(tally.checked()) + " instances");
}

Outcome criterion3() {
  Rng rng(103);
  Tally tally;
  for (int d1 = 1; d1 <= 6; ++d1) {
    for (int d2 = 1; d2 <= 6; ++d2) {
      const auto roots = testgen::distinct_integers(rng, static_cast<std::size_t>(d2));
      const Rational b = rng.nonzero(4);
      const auto g = univariate_from_roots(roots, b).polys[0];
      const auto f = testgen::random_univariate(rng, d1);
      for (int t = 0; t <= d1 + d2 - 1; ++t) {
        for (int rep = 0; rep < 3; ++rep) {
          const auto S = testgen::random_selection(rng, 1, t, static_cast<std::size_t>(uni_k(d1, d2, t)));
          const Rational lhs = uni::delta_S_uni({f, g, t, S});
          const Rational rhs = uni::thm1_rhs(f, roots, b, t, S);
          tally.expect(lhs == rhs, "d=(" + std::to_string(d1) + "," + std::to_string(d2) + ") t=" + std::to_string(t));
        }
      }
    }
  }
  Outcome o = tally.outcome(std::to_string(tally.checked()) + " identities");
  if (tally.checked() < 500) o = {false, o.detail + "; fewer than 500"};
  return o;
}

Outcome criterion4() {
  Rng rng(104);
  Tally tally;
  for (int d1 = 1; d1 <= 5; ++d1) {
    for (int d2 = 1; d2 <= 5; ++d2) {
      const auto f = testgen::random_univariate(rng, d1);
      const auto g = testgen::random_univariate(rng, d2);
      const std::string tag = "d=(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
      tally.expect(uni::delta_S_uni({f, g, d1 + d2 - 1, {}}) == minus_one_pow(d1 * d2) * uni::resultant(f, g),
                   tag + " empty S");
      for (int k = 0; k <= std::min(d1, d2); ++k) {
        const int t = d1 + d2 - k - 1;
        if (k > t) continue;  // k = d1 = d2 = 1 has no order-t system
        for (int j = 0; j <= k; ++j) {
          std::vector<Monomial> S_j;
          for (int i = 0; i <= k; ++i) {
            if (i != j) S_j.push_back(Monomial::variable(1, 0, i));
          }
          const Rational lhs = uni::delta_S_uni({f, g, t, S_j});
          const Rational rhs = minus_one_pow((d1 - k) * (d2 - k)) * uni::scalar_subresultant(f, g, k, j);
          tally.expect(lhs == rhs, tag + " k=" + std::to_string(k) + " j=" + std::to_string(j));
        }
      }
    }
  }
  return tally.outcome(std::to_string(tally.checked()) + " signed equalities");
}

Outcome criterion5() {
  Rng rng(105);
  Tally hong, koko;
  for (int trial = 0; trial < 30; ++trial) {
    const int d1 = rng.integer(1, 5), d2 = rng.integer(1, 5);
    const auto roots = testgen::distinct_integers(rng, static_cast<std::size_t>(d2));
    const Rational b = rng.nonzero(4);
    const auto g = univariate_from_roots(roots, b).polys[0];
    const auto f = testgen::random_univariate(rng, d1);
    for (int k = 0; k <= std::min(d1, d2); ++k) {
      if (k == d1 && k == d2) continue;  // both scalar determinants are empty there
      hong.expect(uni::hong_sres_rhs(f, roots, b, k) == uni::sres_polynomial(f, g, k),
                  "hong trial " + std::to_string(trial) + " k=" + std::to_string(k));
    }
  }
  for (int trial = 0; trial < 30; ++trial) {
    const int d1 = rng.integer(1, 5), d2 = rng.integer(1, 5);
    const auto roots = testgen::distinct_integers(rng, static_cast<std::size_t>(d2));
    const Rational b = rng.nonzero(4);
    const auto g = univariate_from_roots(roots, b).polys[0];
    const auto f = testgen::random_univariate(rng, d1);
    const int t = rng.integer(d2, d1 + d2 - 1);
    const int k = uni_k(d1, d2, t);
    auto S_plus = testgen::random_selection(rng, 1, t, static_cast<std::size_t>(k + 1));
    std::sort(S_plus.begin(), S_plus.end());
    koko.expect(uni::gen_sres_roots_rhs(f, roots, b, t, S_plus) == uni::gen_sres_polynomial(f, g, t, S_plus),
                "koko trial " + std::to_string(trial));
  }
  Outcome h = hong.outcome("hong " + std::to_string(hong.checked()) + " equalities on 30 instances");
  Outcome k = koko.outcome("koko 30 instances");
  return {h.pass && k.pass, h.detail + "; " + k.detail};
}

const std::vector<Monomial>& conic_order() {
  static const std::vector<Monomial> order = {Monomial({0, 0}), Monomial({1, 0}), Monomial({0, 1}),
                                              Monomial({1, 1}), Monomial({2, 0}), Monomial({0, 2})};
  return order;
}

Polynomial conic(const std::vector<Rational>& c) {
  Polynomial p(2, 2);
  for (std::size_t i = 0; i < 6; ++i) p.add_term(conic_order()[i], c[i]);
  return p;
}

Outcome criterion6() {
  Rng rng(106);
  Tally tally;
  const std::vector<Monomial> S = {Monomial({1, 0}), Monomial({1, 1}), Monomial({2, 0})};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> a, b, c;
    for (int i = 0; i < 6; ++i) {
      a.push_back(rng.nonzero_rational());
      b.push_back(rng.nonzero_rational());
      c.push_back(rng.nonzero_rational());
    }
    const auto p = multi::make_problem({2, {2, 2, 2}, 2}, {conic(a), conic(b), conic(c)}, S);
    const Rational expected = c[0] * (a[2] * b[5] - a[5] * b[2]) - c[2] * (a[0] * b[5] - a[5] * b[0]) +
                              c[5] * (a[0] * b[2] - a[2] * b[0]);
    tally.expect(multi::delta_S(p) == expected, "trial " + std::to_string(trial));
  }
  return tally.outcome(std::to_string(tally.checked()) + " coefficient sets");
}

struct Thm2Run {
  Tally det_identity;     // criterion 7
  int nontrivial = 0;
  int redraws = 0;
  Tally full_form;        // criterion 8
  int full_form_skipped = 0;
  Tally rar;              // criterion 9
  Tally counting;         // criterion 11 share
};

const std::vector<std::vector<int>> kTriples = {{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {1, 2, 2}, {2, 3, 3}};

void check_counts(Tally& tally, const DegreeSystem& sys) {
  const std::size_t n = static_cast<std::size_t>(sys.n);
  const std::size_t k = hilbert_count(sys.degrees, sys.n, sys.t);
  const auto R = build_R(sys);
  std::size_t rows = 0;
  for (const auto& Ri : R) rows += Ri.size();
  std::size_t reduced = 0;
  for (const auto& m : monomials_up_to_degree(n, sys.t)) {
    if (is_reduced(m, std::span(sys.degrees).first(n))) ++reduced;
  }
  std::ostringstream tag;
  tag << "n=" << sys.n << " t=" << sys.t;
  tally.expect(binomial(sys.t + sys.n, sys.n) == k + rows, tag.str() + " square");
  tally.expect(k + R.back().size() == reduced, tag.str() + " key");
}

Thm2Run run_thm2() {
  Rng rng(107);
  Thm2Run run;
  for (const auto& d : kTriples) {
    const int top = (d[0] - 1) + (d[1] - 1) + d[2];
    for (int t = 0; t <= top; ++t) {
      const DegreeSystem sys{2, d, t};
      check_counts(run.counting, sys);
      const std::size_t k = hilbert_count(d, 2, t);
      // Two grid and two transformed instances per (system, t).
      for (int kind = 0; kind < 4; ++kind) {
        const auto inst = kind % 2 == 0 ? testgen::grid_instance(rng, std::span(d).first(2))
                                    : transformed_nonsingular(rng, sys, run.redraws);
        const auto polys = with_last(inst, testgen::random_dense(rng, 2, d[2]));
        for (int rep = 0; rep < 2; ++rep) {
          // Prefer an S for which det(M~_S) det(V_T) is nonzero so the identity is not 0 = 0.
          multi::MultiProblem p;
          multi::DetIdentity id;
          for (int attempt = 0; attempt < 40; ++attempt) {
            p = multi::make_problem(sys, polys, testgen::random_selection(rng, 2, t, k));
            id = multi::thm2_det_identity(p, inst.roots);
            if (id.lhs != 0) break;
          }
          std::ostringstream tag;
          tag << "d=(" << d[0] << "," << d[1] << "," << d[2] << ") t=" << t << (kind % 2 == 0 ? " grid" : " transformed");
          run.det_identity.expect(abs(id.lhs) == abs(id.rhs), tag.str());
          if (id.lhs != 0) ++run.nontrivial;

          const auto factors = multi::block_factors(p);
          run.rar.expect(factors.extraneous == factors.orientation_sign * factors.E_product(), tag.str() + " signed");
          run.rar.expect(abs(factors.extraneous) == abs(factors.E_product()), tag.str() + " magnitude");

          bool defined = factors.extraneous != 0;
          for (const auto& e : factors.E_j) defined = defined && e != 0;
          if (!defined) {
            ++run.full_form_skipped;
            continue;
          }
          run.full_form.expect(abs(multi::delta_S(p)) == abs(multi::thm2_rhs(p, inst.roots)), tag.str());
        }
      }
    }
  }
  return run;
}

Outcome criterion10() {
  Rng rng(110);
  Tally tally;
  const std::vector<std::vector<int>> triples = {{2, 2, 2}, {2, 2, 1}, {1, 2, 2}, {2, 3, 1}, {3, 2, 2}};
  int used = 0, redraws = 0, skipped = 0;
  for (int i = 0; used < 10; ++i) {
    const auto& d = triples[static_cast<std::size_t>(i) % triples.size()];
    const int t = (d[0] - 1) + (d[1] - 1) + d[2];
    const DegreeSystem sys{2, d, t};
    const auto inst = i % 2 == 0 ? testgen::grid_instance(rng, std::span(d).first(2))
                                 : transformed_nonsingular(rng, sys, redraws);
    const auto p = multi::make_problem(sys, with_last(inst, testgen::random_dense(rng, 2, d[2])), {});
    if (multi::extraneous_factor(p) == 0) {
      ++skipped;
      continue;
    }
    ++used;
    Rational rhs = pow(abs(multi::leading_resultant(multi::leading_forms(p))), static_cast<unsigned>(d[2]));
    for (const auto& xi : inst.roots) rhs *= abs(evaluate(p.polys.back(), xi));
    tally.expect(abs(multi::delta_S(p)) == rhs, "multivariate instance " + std::to_string(i));
  }
  int uni_checked = 0;
  for (int d1 = 1; d1 <= 5; ++d1) {
    for (int d2 = 1; d2 <= 5; ++d2) {
      const auto roots = testgen::distinct_integers(rng, static_cast<std::size_t>(d2));
      const Rational b = rng.nonzero(4);
      const auto g = univariate_from_roots(roots, b).polys[0];
      const auto f = testgen::random_univariate(rng, d1);
      Rational prod = minus_one_pow(d1 * d2) * pow(b, static_cast<unsigned>(d1));
      for (const auto& xi : roots) prod *= eval1(f, xi);
      tally.expect(uni::resultant(f, g) == prod, "univariate d=(" + std::to_string(d1) + "," + std::to_string(d2) + ")");
      ++uni_checked;
    }
  }
  return tally.outcome(std::to_string(used) + " multivariate instances (" + std::to_string(skipped) +
                       " with E(t) = 0 skipped), " + std::to_string(uni_checked) + " signed univariate");
}

Outcome criterion11(const Tally& from_thm2) {
  Tally tally;
  for (int d1 = 1; d1 <= 6; ++d1) {
    for (int d2 = 1; d2 <= 6; ++d2) {
      for (int t = 0; t <= d1 + d2 - 1; ++t) {
        check_counts(tally, {1, {d2, d1}, t});
        tally.expect(hilbert_count(std::vector<int>{d2, d1}, 1, t) == static_cast<std::size_t>(uni_k(d1, d2, t)),
                     "univariate k");
      }
    }
  }
  int sweep = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> d(static_cast<std::size_t>(n) + 1, 1);
    for (;;) {
      int rho = 0;
      for (int i = 0; i < n; ++i) rho += d[static_cast<std::size_t>(i)] - 1;
      for (int t = 0; t <= rho + d.back(); ++t) {
        tally.expect(hilbert_count(d, n, t) == oracle::hilbert_ie(d, n, t), "hilbert sweep n=" + std::to_string(n));
        ++sweep;
      }
      std::size_t i = 0;
      while (i < d.size() && d[i] == 4) d[i++] = 1;
      if (i == d.size()) break;
      ++d[i];
    }
  }
  Outcome o = tally.outcome(std::to_string(tally.checked() - sweep) + " univariate counting checks, " +
                            std::to_string(from_thm2.checked()) + " bivariate, " + std::to_string(sweep) +
                            " hilbert_count = hilbert_ie");
  if (from_thm2.failed() > 0) o = {false, o.detail + "; bivariate failures: " + std::to_string(from_thm2.failed())};
  return o;
}

Outcome criterion12() {
  Rng rng(112);
  Tally tally;
  const int d[] = {2, 2};
  std::size_t ratios = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = testgen::transformed_instance(rng, d);
    const auto r = multi::minor_ratio_check(inst.polys[0], inst.polys[1], inst.roots);
    tally.expect(!r.ratios.empty(), "trial " + std::to_string(trial) + " has no defined ratio");
    for (const auto& v : r.ratios) tally.expect(v == r.ratios.front(), "trial " + std::to_string(trial));
    ratios += r.ratios.size();
  }
  return tally.outcome("10 instances, " + std::to_string(ratios) + " ratios");
}

Outcome criterion13() {
  Rng rng(113);
  Tally tally;
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(1 + i % 7);
    const auto m = testgen::random_matrix(rng, n, n);
    tally.expect(determinant(m) == oracle::det_cofactor(m), "matrix " + std::to_string(i));
  }
  for (int i = 0; i < 50; ++i) {
    const int d1 = rng.integer(1, 5), d2 = rng.integer(1, 5);
    const auto fr = testgen::distinct_integers(rng, static_cast<std::size_t>(d1));
    const auto gr = testgen::distinct_integers(rng, static_cast<std::size_t>(d2));
    const Rational a = rng.nonzero(4), b = rng.nonzero(4);
    const auto f = univariate_from_roots(fr, a).polys[0];
    const auto g = univariate_from_roots(gr, b).polys[0];
    tally.expect(uni::resultant(f, g) == oracle::res_product(fr, a, gr, b), "pair " + std::to_string(i));
  }
  return tally.outcome("200 matrices up to 7x7, 50 resultant pairs");
}

using Clock = std::chrono::steady_clock;

// `prior_seconds` covers work done before `body`, shared with other criteria.
bool report(int id, double limit_seconds, const std::function<Outcome()>& body, double prior_seconds = 0) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = prior_seconds + std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    o.pass = false;
    o.detail += "; exceeded " + std::to_string(limit_seconds) + " s";
  }
  std::printf("Criterion %2d: %s  %.3f s  %s\n", id, o.pass ? "PASS" : "FAIL", seconds, o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, 1.0, criterion1);
  ok &= report(2, 0, criterion2);
  ok &= report(3, 30.0, criterion3);
  ok &= report(4, 0, criterion4);
  ok &= report(5, 0, criterion5);
  ok &= report(6, 0, criterion6);

  Thm2Run thm2;
  const auto start = Clock::now();
  try {
    thm2 = run_thm2();
  } catch (const std::exception& e) {
    thm2.det_identity.expect(false, std::string("exception: ") + e.what());
  }
  const double thm2_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  ok &= report(7, 120.0, [&] {
    Outcome o = thm2.det_identity.outcome(std::to_string(thm2.det_identity.checked()) + " identities (" +
                                          std::to_string(thm2.nontrivial) + " nonzero), " +
                                          std::to_string(thm2.redraws) + " transforms redrawn");
    if (thm2.nontrivial < 150) o = {false, o.detail + "; fewer than 150 nonzero identities"};
    return o;
  }, thm2_seconds);
  ok &= report(8, 0, [&] {
    Outcome o = thm2.full_form.outcome(std::to_string(thm2.full_form.checked()) + " instances, " +
                                       std::to_string(thm2.full_form_skipped) + " with a vanishing E(t) or E_j");
    if (thm2.full_form.checked() == 0) o = {false, "no instance with nonvanishing extraneous factors"};
    return o;
  });
  const bool rar_ok = report(9, 0, [&] {
    return thm2.rar.outcome(std::to_string(thm2.rar.checked() / 2) + " systems, signed and magnitude");
  });
  ok &= rar_ok;
  if (!rar_ok) {
    for (int id = 10; id <= 13; ++id) std::printf("Criterion %2d: FAIL  aborted by the criterion 9 tripwire\n", id);
    return 1;
  }
  ok &= report(10, 0, criterion10);
  ok &= report(11, 0, [&] { return criterion11(thm2.counting); });
  ok &= report(12, 0, criterion12);
  ok &= report(13, 0, criterion13);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
