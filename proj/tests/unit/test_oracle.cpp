#include "doctest.h"
#include "pnrd/errors.hpp"
#include "pnrd/oracle.hpp"
#include "pnrd/regularity.hpp"
#include "support/generators.hpp"

using namespace pnrd;
using namespace pnrd::oracle;

namespace {
testgen::Engine rng(5150);
}

TEST_CASE("oracle determinant") {
  CHECK(oracle_chi(SymMatrix::from_rows({{0, 0}, {0, 1}})) == Rational(0));
  CHECK(oracle_chi(SymMatrix::scalar(3, Rational(1))) == Rational(1));
  CHECK(oracle_chi(SymMatrix::scalar(2, Rational(2))) == Rational(4));
  CHECK(oracle_chi(SymMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 3), Rational(1, 4)}})) ==
        Rational(1, 72));
  CHECK(oracle_chi(SymMatrix::from_rows({{0, 1}, {1, 0}})) == Rational(-1));
  CHECK(oracle_chi(SymMatrix::from_rows({{Rational(-7, 3)}})) == Rational(-7, 3));
}

TEST_CASE("oracle inertia") {
  auto in = oracle_inertia(SymMatrix::from_rows({{0, 0}, {0, 1}}));
  CHECK(in.plus == 1);
  CHECK(in.zero == 1);
  CHECK(in.minus == 0);
  in = oracle_inertia(SymMatrix::scalar(2, Rational(-1)));
  CHECK(in.minus == 2);
  in = oracle_inertia(SymMatrix::from_rows({{2, 1}, {1, 1}}));
  CHECK(in.plus == 2);
  in = oracle_inertia(SymMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  CHECK(in.plus == 1);
  CHECK(in.minus == 1);
  CHECK(in.zero == 1);
}

TEST_CASE("oracle regularity") {
  CHECK(oracle_regcont(SymMatrix::scalar(2, Rational(0)), -10, 10) == 2);
  CHECK(oracle_regcont(SymMatrix::scalar(2, Rational(1)), -10, 10) == 1);
  CHECK(oracle_regcont(SymMatrix::from_rows({{0, 0}, {0, 1}}), -10, 10) == 1);
  CHECK_THROWS_AS(oracle_regcont(SymMatrix::scalar(2, Rational(0)), -10, 1), Error);
}

TEST_CASE("symmetric matrices are checked") {
  CHECK_THROWS_AS(SymMatrix::from_rows({{0, 1}, {2, 0}}), Error);
  CHECK_THROWS_AS(SymMatrix::from_rows({{0, 1}}), Error);
}

TEST_CASE("Sylvester's law of inertia") {
  for (int trial = 0; trial < 40; ++trial) {
    const int g = testgen::uniform_int(rng, 1, 5);
    const SymMatrix m = trial % 2 ? testgen::random_sym_matrix(rng, g, 9) : testgen::random_degenerate_matrix(rng, g);
    const Inertia a = oracle_inertia(m);
    const Inertia b = oracle_inertia(m.congruent(testgen::random_invertible(rng, g)));
    CHECK(a.plus == b.plus);
    CHECK(a.zero == b.zero);
    CHECK(a.minus == b.minus);
    CHECK(a.plus + a.zero + a.minus == g);
    CHECK((a.zero > 0) == oracle_chi(m).is_zero());
  }
}

TEST_CASE("split-context bridge") {
  const auto ctx = split_context(3);
  CHECK(is_split_context(ctx));
  const auto m = testgen::random_sym_matrix(rng, 3);
  CHECK(to_sym_matrix(ctx, from_sym_matrix(ctx, m)).matrix() == m.matrix());

  ContextDescription d;
  d.components = {testgen::make_component(testgen::Template::HamiltonIII1, "H", 1)};
  const auto h = build_context(d);
  CHECK_FALSE(is_split_context(h));
  CHECK_THROWS_AS(to_sym_matrix(h, SymmetricClass::identity(h)), Error);
}

TEST_CASE("index is independent of the congruence class in the split model") {
  for (int trial = 0; trial < 20; ++trial) {
    const int g = testgen::uniform_int(rng, 1, 4);
    const auto ctx = split_context(g);
    const auto m = testgen::random_sym_matrix(rng, g, 9);
    const auto moved = m.congruent(testgen::random_invertible(rng, g));
    CHECK(index(ctx, from_sym_matrix(ctx, m)).positive == index(ctx, from_sym_matrix(ctx, moved)).positive);
  }
}
