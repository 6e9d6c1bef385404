#include "doctest.h"
#include "pnrd/errors.hpp"
#include "pnrd/oracle.hpp"
#include "pnrd/riemannroch.hpp"
#include "support/generators.hpp"

using namespace pnrd;

namespace {

testgen::Engine rng(4242);

RationalPolynomial N() { return RationalPolynomial::monomial(Rational(1), 1); }
RationalPolynomial C(const Rational& c) { return RationalPolynomial::constant(c); }

SymmetricClass sym(const VarietyContext& ctx, const std::vector<std::vector<Rational>>& rows) {
  return oracle::from_sym_matrix(ctx, oracle::SymMatrix::from_rows(rows));
}

}  // namespace

TEST_CASE("E x E pencil") {
  const auto ctx = oracle::split_context(2);
  const auto l = sym(ctx, {{0, 0}, {0, 1}});
  const HilbertData h = pnrd_pencil(ctx, l);
  CHECK(h.q == N() * N() + N());
  CHECK(pnrd_square(ctx, l) == (N() * N() + N()).pow(2));
  CHECK(h.profile.positive == 0);
  CHECK(h.profile.zero == 1);
  CHECK(h.profile.negative == 1);
  CHECK(pnrd_eval(ctx, l) == Rational(0));
  CHECK(euler_char(ctx, l) == Rational(0));

  const auto v = vanishing_ranges(ctx, l);
  CHECK(v.vanish_low.empty());
  CHECK(v.vanish_high == std::vector<int>{2});
}

TEST_CASE("normalization, homogeneity and small examples") {
  const auto ctx = oracle::split_context(2);
  const auto id = SymmetricClass::identity(ctx);
  CHECK(pnrd_eval(ctx, id) == Rational(1));
  CHECK(pnrd_pencil(ctx, id).q == (N() + C(1)).pow(2));
  CHECK(pnrd_pencil(ctx, SymmetricClass::zero(ctx)).q == N().pow(2));
  CHECK(pnrd_eval(ctx, sym(ctx, {{2, 1}, {1, 1}})) == Rational(1));
  CHECK(euler_char(ctx, id.scaled(Rational(2))) == Rational(4));

  auto p = index(ctx, id.scaled(Rational(-1)));
  CHECK(p.positive == 2);
  CHECK(p.zero == 0);
  CHECK(p.negative == 0);
  p = index(ctx, id);
  CHECK(p.positive == 0);
  CHECK(p.negative == 2);

  auto v = vanishing_ranges(ctx, id);
  CHECK(v.vanish_low.empty());
  CHECK(v.vanish_high == std::vector<int>{2, 1});
  v = vanishing_ranges(ctx, id.scaled(Rational(-1)));
  CHECK(v.vanish_low == std::vector<int>{0, 1});
  CHECK(v.vanish_high.empty());
}

TEST_CASE("sqrt_deg_phi scales chi and the Hilbert polynomial only") {
  ComponentDescription e;
  e.name = "E";
  e.mult_r = 2;
  ContextDescription d;
  d.sqrt_deg_phi = Rational(3, 2);
  d.components = {e};
  const auto ctx = build_context(d);
  const auto id = SymmetricClass::identity(ctx);
  CHECK(pnrd_eval(ctx, id) == Rational(1));
  CHECK(euler_char(ctx, id) == Rational(3, 2));
  CHECK(pnrd_pencil(ctx, id).scaled == (N() + C(1)).pow(2).scaled(Rational(3, 2)));
}

TEST_CASE("non-square products are reported") {
  // A type I factor over Q(sqrt 2) with g = 1 has e = 1, so F = P is a
  // product of two conjugate linear factors.
  ContextDescription d;
  auto s = testgen::make_component(testgen::Template::Sqrt2I, "S", 1);
  s.dim_g = 1;
  d.components = {s};
  const auto ctx = build_context(d);
  const auto c = ctx.components()[0];
  const auto x = SymmetricClass::make(ctx, {AlgebraElement::from_coords(c, {{{{Rational(0), Rational(1)}}}})});
  try {
    pnrd_pencil(ctx, x);
    FAIL("expected NotAPerfectSquare");
  } catch (const Error& e) {
    CHECK(e.code() == "NotAPerfectSquare");
    CHECK(e.kind() == ErrorKind::Computation);
  }
  // Rational points of the same factor are fine.
  CHECK(pnrd_eval(ctx, SymmetricClass::identity(ctx).scaled(Rational(5))) == Rational(5));
}

TEST_CASE("shift coherence and homogeneity on random contexts") {
  for (int trial = 0; trial < 12; ++trial) {
    const auto ctx = testgen::random_context(rng);
    const int g = ctx.dimension();
    const auto alpha = testgen::random_symmetric(ctx, rng);
    const HilbertData h = pnrd_pencil(ctx, alpha);
    CHECK(h.q.degree() == g);
    CHECK(h.profile.real_total() == g);

    const Rational t = testgen::random_rational(rng, 7, 3);
    CHECK(pnrd_eval(ctx, SymmetricClass::identity(ctx).scaled(t) + alpha) == h.q(t));

    Rational c = testgen::random_rational(rng, 5, 3);
    if (c.is_zero()) c = Rational(-2, 3);
    const RationalPolynomial qc = pnrd_pencil(ctx, alpha.scaled(c)).q;
    // q_{c alpha}(N) = c^g q_alpha(N / c)
    CHECK(qc == h.q.rescale(c.inverse()).scaled(c.pow(g)));
    CHECK(pnrd_eval(ctx, alpha.scaled(c)) == c.pow(g) * pnrd_eval(ctx, alpha));
  }
}

TEST_CASE("bundle invariants") {
  const auto ctx = oracle::split_context(2);
  const auto id = SymmetricClass::identity(ctx);
  const auto b = bundle_invariants(ctx, BundleClass::make(id.scaled(Rational(2)), 2));
  CHECK(b.chi_det == Rational(4));
  CHECK(b.chi_bundle == Rational(2));
  CHECK(b.index_bundle == 0);
  CHECK(b.ordK == Rational(4));

  const auto l = sym(ctx, {{0, 0}, {0, 1}});
  const auto z = bundle_invariants(ctx, BundleClass::make(l, 3));
  CHECK(z.chi_bundle == Rational(0));
  CHECK_FALSE(z.ordK.has_value());
  CHECK(z.dimK_bundle == 1);

  const auto one = bundle_invariants(ctx, BundleClass::make(l, 1));
  CHECK(one.chi_bundle == euler_char(ctx, l));
  CHECK(one.index_bundle == index(ctx, l).positive);

  CHECK_THROWS_AS(BundleClass::make(l, 0), Error);

  // Hilbert polynomial of the rank-2 bundle with det 2 id: chi(E(N)) = (2N+2)^2 / 2.
  const auto hp = bundle_hilbert(ctx, BundleClass::make(id.scaled(Rational(2)), 2));
  CHECK(hp == (N().scaled(Rational(2)) + C(2)).pow(2).scaled(Rational(1, 2)));
  CHECK(hp(Rational(0)) == b.chi_bundle);
}
