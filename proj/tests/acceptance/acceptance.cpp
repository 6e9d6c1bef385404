// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "pnrd/errors.hpp"
#include "pnrd/oracle.hpp"
#include "pnrd/regularity.hpp"
#include "support/generators.hpp"

using namespace pnrd;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

RationalPolynomial N() { return RationalPolynomial::monomial(Rational(1), 1); }

bool same_result(const RegularityResult& a, const RegularityResult& b) {
  if (a.m != b.m || a.g != b.g || a.window_lo != b.window_lo || a.window_hi != b.window_hi ||
      !(a.cauchy_bound == b.cauchy_bound) || a.table.size() != b.table.size()) {
    return false;
  }
  for (size_t k = 0; k < a.table.size(); ++k) {
    const auto& x = a.table[k];
    const auto& y = b.table[k];
    if (x.m != y.m || x.holds != y.holds || x.cells.size() != y.cells.size()) return false;
    for (size_t c = 0; c < x.cells.size(); ++c) {
      if (!(x.cells[c].value == y.cells[c].value) || x.cells[c].positive != y.cells[c].positive) return false;
    }
  }
  return true;
}

Outcome criterion1() {
  Outcome o;
  const auto ctx = oracle::split_context(2);
  const auto m = oracle::SymMatrix::from_rows({{0, 0}, {0, 1}});
  const auto l = oracle::from_sym_matrix(ctx, m);
  const HilbertData h = pnrd_pencil(ctx, l);
  o.check(h.scaled == N() * N() + N(), "Hilbert polynomial");
  o.check(euler_char(ctx, l) == Rational(0), "chi");
  const RootProfile p = index(ctx, l);
  o.check(p.positive == 0 && p.zero == 1 && p.negative == 1, "index / dim K");
  o.check(weak_index(ctx, l) == 1, "weak index");
  const auto v = vanishing_ranges(ctx, l);
  o.check(v.vanish_high == std::vector<int>{2} && v.vanish_low.empty(), "H^2 vanishing");
  o.check(classify(ctx, l).label == "WIT(1)-generic", "classification");
  const auto r = reg_cont(ctx, l);
  o.check(r.m == 1, "reg_cont");
  o.check(oracle::oracle_regcont(m, r.window_lo, r.window_hi) == 1, "oracle enumeration");
  o.detail = "q = " + to_string(h.scaled) + ", chi = 0, i = 0, dimK = 1, j = 1, reg_cont = " + std::to_string(r.m);
  return o;
}

Outcome criterion2() {
  Outcome o;
  testgen::Engine rng(2002);
  std::vector<VarietyContext> contexts;
  // Every template alone first, so all kinds and types are covered.
  for (auto t : testgen::kAllTemplates) {
    ContextDescription d;
    d.components = {testgen::make_component(t, "A", 1)};
    contexts.push_back(build_context(d));
  }
  while (contexts.size() < 60) contexts.push_back(testgen::random_context(rng, 6, true));

  int quaternion = 0;
  for (const auto& ctx : contexts) {
    const int g = ctx.dimension();
    for (const auto& c : ctx.components()) quaternion += c->algebra()->kind() == AlgebraKind::Quaternion;
    const auto id = SymmetricClass::identity(ctx);
    const auto zero = SymmetricClass::zero(ctx);
    o.check(g <= 6, "g <= 6");
    o.check(pnrd_eval(ctx, id) == Rational(1), "pNrd(id) = 1");
    o.check(pnrd_pencil(ctx, zero).q == N().pow(static_cast<unsigned>(g)), "q_0 = N^g");
    const auto r0 = reg_cont(ctx, zero);
    const auto r1 = reg_cont(ctx, id);
    o.check(r0.m == g, "reg_cont(0) = g");
    o.check(r1.m == g - 1, "reg_cont(id) = g - 1");
    const auto sz = static_cast<size_t>(g);
    o.check(oracle::oracle_regcont(oracle::SymMatrix::scalar(sz, Rational(0)), r0.window_lo - 5, r0.window_hi + 5) == g,
            "oracle reg_cont(0)");
    o.check(oracle::oracle_regcont(oracle::SymMatrix::scalar(sz, Rational(1)), r1.window_lo - 5, r1.window_hi + 5) ==
                g - 1,
            "oracle reg_cont(id)");
  }
  o.detail = std::to_string(contexts.size()) + " contexts, " + std::to_string(quaternion) + " quaternion factors";
  return o;
}

Outcome criterion3() {
  Outcome o;
  testgen::Engine rng(3003);
  int degenerate = 0, with_index = 0;
  const int total = 240;
  for (int trial = 0; trial < total; ++trial) {
    const int g = testgen::uniform_int(rng, 1, 5);
    const auto ctx = oracle::split_context(g);
    const auto m = trial % 5 == 4 ? testgen::random_degenerate_matrix(rng, g) : testgen::random_sym_matrix(rng, g, 20);
    const auto cls = oracle::from_sym_matrix(ctx, m);
    const auto in = oracle::oracle_inertia(m);
    const RootProfile p = index(ctx, cls);
    const auto r = reg_cont(ctx, cls);
    o.check(euler_char(ctx, cls) == oracle::oracle_chi(m), "euler_char = oracle_chi");
    o.check(p.positive == in.minus, "index = n_minus");
    o.check(p.zero == in.zero, "dim K = n_zero");
    o.check(r.m == oracle::oracle_regcont(m, r.window_lo - 3, r.window_hi + 3), "reg_cont = oracle_regcont");
    degenerate += in.zero > 0;
    with_index += in.minus > 0;
  }
  o.detail = std::to_string(total) + " matrices (" + std::to_string(degenerate) + " degenerate, " +
             std::to_string(with_index) + " with positive index)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  testgen::Engine rng(4004);
  int classes = 0;
  while (classes < 120) {
    const auto ctx = testgen::random_quaternion_context(rng);
    for (int k = 0; k < 3; ++k, ++classes) {
      const auto alpha = testgen::random_symmetric(ctx, rng);
      const RationalPolynomial f = pnrd_square(ctx, alpha);
      const auto q = exact_sqrt(f);
      o.check(q.has_value() && *q * *q == f, "F is a square");
      const HilbertData h = pnrd_pencil(ctx, alpha);
      o.check(h.profile.real_total() == ctx.dimension(), "profile sums to g");
    }
  }
  o.detail = std::to_string(classes) + " classes over quaternion contexts";
  return o;
}

Outcome criterion5() {
  Outcome o;
  testgen::Engine rng(5005);
  int nonzero = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto ctx = testgen::random_context(rng, 5);
    const int r = testgen::uniform_int(rng, 1, 5);
    const auto det = trial % 4 == 0 ? SymmetricClass::zero(ctx) : testgen::random_symmetric(ctx, rng, 4, 2);
    const auto inv = bundle_invariants(ctx, BundleClass::make(det, r));
    o.check(inv.chi_bundle * Rational(r).pow(ctx.dimension() - 1) == euler_char(ctx, det), "chi r^{g-1}");
    if (inv.chi_bundle.is_zero()) {
      o.check(!inv.ordK.has_value(), "no ordK when chi = 0");
    } else {
      ++nonzero;
      o.check(inv.ordK.has_value() && *inv.ordK == inv.chi_bundle * inv.chi_bundle, "ordK = chi^2");
    }
  }
  o.detail = "60 (det, r) pairs, " + std::to_string(nonzero) + " with chi != 0";
  return o;
}

Outcome criterion6() {
  Outcome o;
  testgen::Engine rng(6006);
  for (int trial = 0; trial < 30; ++trial) {
    ContextDescription d;
    d.components = {testgen::make_component(testgen::Template::RationalI, "A1", testgen::uniform_int(rng, 1, 2)),
                    testgen::make_component(testgen::Template::RationalI, "A2", testgen::uniform_int(rng, 1, 2))};
    const auto ctx = build_context(d);
    const auto d1 = testgen::random_symmetric(ctx, rng, 6, 3);
    const auto d2 = testgen::random_symmetric(ctx, rng, 6, 3);
    const int r = testgen::uniform_int(rng, 2, 4);
    const Rational rr(r);
    const auto big = reg_cont_bundle(ctx, BundleClass::make(d1.scaled(rr) + d2.scaled(rr), r * r));
    const auto small = reg_cont_bundle(ctx, BundleClass::make(d1 + d2, r));
    o.check(same_result(big, small), "identical regularity output");
  }
  o.detail = "30 (delta1, delta2, r) triples";
  return o;
}

Outcome criterion7() {
  Outcome o;
  testgen::Engine rng(7007);
  int families = 0;
  auto run_family = [&](const VarietyContext& ctx) {
    ++families;
    for (int k = 0; k < 20; ++k) {
      const auto alpha = testgen::random_symmetric(ctx, rng);
      const Rational t = testgen::random_rational(rng, 9, 4);
      const RationalPolynomial q = pnrd_pencil(ctx, alpha).q;
      o.check(pnrd_eval(ctx, SymmetricClass::identity(ctx).scaled(t) + alpha) == q(t), "pNrd(t id + alpha) = q(t)");
    }
  };
  run_family(oracle::split_context(3));
  for (auto t : testgen::kAllTemplates) {
    ContextDescription d;
    d.components = {testgen::make_component(t, "A", 1)};
    run_family(build_context(d));
  }
  run_family(testgen::random_context(rng, 6));
  o.detail = std::to_string(families) + " families x 20 pairs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "E x E golden case", 1.0, criterion1},
      {2, "normalization and trivial families", 30.0, criterion2},
      {3, "oracle differential suite", 60.0, criterion3},
      {4, "perfect squares and real roots over quaternion contexts", 60.0, criterion4},
      {5, "bundle formulas", 10.0, criterion5},
      {6, "scaling / product coherence", 0.0, criterion6},
      {7, "shift coherence", 0.0, criterion7},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.check(false, "time limit exceeded");
    all = all && o.pass;

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (o.pass ? "PASS" : "FAIL") << " (" << timing;
    if (c.limit_s > 0) std::cout << " < " << c.limit_s << "s";
    std::cout << ") " << o.detail;
    if (!o.pass) std::cout << " -- first failure: " << o.first_failure;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
