#include <random>

#include "doctest.h"
#include "pnrd/determinant.hpp"
#include "pnrd/errors.hpp"
#include "pnrd/number_field.hpp"
#include "pnrd/roots.hpp"
#include "support/generators.hpp"

using namespace pnrd;

namespace {

RationalPolynomial N() { return RationalPolynomial::monomial(Rational(1), 1); }
RationalPolynomial C(const Rational& c) { return RationalPolynomial::constant(c); }

FieldPtr sqrt2() { return NumberField::make(rational_poly({-2, 0, 1})); }
FieldPtr gaussian() { return NumberField::make(rational_poly({1, 0, 1})); }

FieldElement elem(const FieldPtr& f, std::initializer_list<Rational> c) { return FieldElement(f, RationalPolynomial(c)); }

// Laplace expansion, kept separate from the library determinant.
template <class R>
R laplace(const std::vector<std::vector<R>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  R acc = m[0][0] - m[0][0];
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<R>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<R> row;
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    R term = m[0][c] * laplace(minor);
    acc = c % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

// Matrix of multiplication by p over Q[N] in the power basis of the field;
// its determinant is the norm of p as an element of Z[N].
RationalPolynomial regular_norm(const CenterPolynomial& p, const FieldPtr& f) {
  const size_t t = static_cast<size_t>(f->degree());
  std::vector<std::vector<RationalPolynomial>> m(t, std::vector<RationalPolynomial>(t));
  FieldElement basis = f->one();
  for (size_t j = 0; j < t; ++j) {
    for (int k = 0; k <= p.degree(); ++k) {
      const auto coords = (p[static_cast<size_t>(k)] * basis).coordinates();
      for (size_t i = 0; i < t; ++i) m[i][j] = m[i][j] + RationalPolynomial::monomial(coords[i], k);
    }
    basis = basis * f->generator();
  }
  return laplace(m);
}

testgen::Engine rng(20261016);

RationalPolynomial random_poly(int deg) {
  std::vector<Rational> c;
  for (int i = 0; i < deg; ++i) c.push_back(testgen::random_rational(rng, 9, 4));
  c.push_back(testgen::random_positive(rng, 5, 3));
  return RationalPolynomial(c);
}

}  // namespace

TEST_CASE("rationals stay reduced and parse strictly") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse("+3"), Error);
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
}

TEST_CASE("field arithmetic") {
  const auto f = sqrt2();
  const auto a = f->generator();
  CHECK(a * a == f->from_rational(2));
  CHECK(a.inverse() == elem(f, {0, Rational(1, 2)}));
  CHECK(field_arithmetic(a, a.inverse(), FieldOp::Mul) == f->one());

  const auto q = gaussian();
  const auto i = q->generator();
  CHECK((q->one() + i) * (q->one() - i) == q->from_rational(2));
  CHECK_THROWS_AS(q->zero().inverse(), Error);
  CHECK_THROWS_AS(a + i, Error);
}

TEST_CASE("number field validation") {
  CHECK_THROWS_AS(NumberField::make(rational_poly({-4, 0, 1})), Error);  // rational root
  CHECK_THROWS_AS(NumberField::make(rational_poly({1, 2, 1})), Error);   // not squarefree
  CHECK_THROWS_AS(NumberField::make(rational_poly({1, 0, 2})), Error);   // not monic
  CHECK(sqrt2()->real_embeddings() == 2);
  CHECK(gaussian()->real_embeddings() == 0);
  CHECK(sqrt2()->generator().trace() == Rational(0));
  CHECK(sqrt2()->one().trace() == Rational(2));
}

TEST_CASE("field norm") {
  CHECK(nf_norm(elem(sqrt2(), {3, 1})) == Rational(7));
  CHECK(nf_norm(sqrt2()->one()) == Rational(1));
  CHECK(nf_norm(elem(gaussian(), {2, 1})) == Rational(5));
  CHECK(nf_norm(sqrt2()->zero()) == Rational(0));
}

TEST_CASE("field norm is multiplicative and matches the regular representation") {
  const std::vector<FieldPtr> fields = {sqrt2(), gaussian(), NumberField::make(rational_poly({-2, 0, 0, 1})),
                                        NumberField::make(rational_poly({1, -3, 0, 1}))};
  for (const auto& f : fields) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> ca, cb;
      for (int k = 0; k < f->degree(); ++k) {
        ca.push_back(testgen::random_rational(rng, 7, 3));
        cb.push_back(testgen::random_rational(rng, 7, 3));
      }
      const FieldElement a(f, RationalPolynomial(ca)), b(f, RationalPolynomial(cb));
      CHECK(nf_norm(a * b) == nf_norm(a) * nf_norm(b));
      CHECK(C(nf_norm(a)) == regular_norm(CenterPolynomial::constant(a), f));
    }
  }
}

TEST_CASE("root profiles") {
  auto p = sturm_root_profile(N() * N() + N());
  CHECK(p.positive == 0);
  CHECK(p.zero == 1);
  CHECK(p.negative == 1);

  p = sturm_root_profile((N() - C(1)).pow(2) * (N() + C(2)));
  CHECK(p.positive == 2);
  CHECK(p.zero == 0);
  CHECK(p.negative == 1);

  p = sturm_root_profile(N().pow(4));
  CHECK(p.zero == 4);
  CHECK(p.real_total() == 4);

  p = sturm_root_profile(N() * N() + C(1));
  CHECK(p.real_total() == 0);
  CHECK_FALSE(p.all_real());
  CHECK_THROWS_AS(sturm_root_profile(RationalPolynomial{}), Error);
}

TEST_CASE("root profile of random real-rooted products") {
  for (int trial = 0; trial < 60; ++trial) {
    const int deg = testgen::uniform_int(rng, 1, 7);
    RationalPolynomial p = C(testgen::random_positive(rng, 5, 5));
    int pos = 0, zero = 0, neg = 0;
    for (int k = 0; k < deg; ++k) {
      // Small pool of roots so that repeated roots are common.
      const Rational root(testgen::uniform_int(rng, -3, 3), testgen::uniform_int(rng, 1, 2));
      p = p * (N() - C(root));
      (root.sign() > 0 ? pos : root.sign() < 0 ? neg : zero) += 1;
    }
    const RootProfile r = sturm_root_profile(p);
    CHECK(r.positive == pos);
    CHECK(r.zero == zero);
    CHECK(r.negative == neg);
    CHECK(r.real_total() == deg);

    const Rational b = cauchy_bound(p);
    CHECK(count_distinct_roots(p, -b - Rational(1, 1000), b) == count_distinct_roots(p, std::nullopt, std::nullopt));

    const RootCounter counter(p);
    for (int t = -4; t <= 4; ++t) {
      const RootProfile shifted = sturm_root_profile(p.shift(Rational(t)));
      CHECK(counter.count_above(Rational(t)) == shifted.positive);
    }
    const auto enc = integer_root_enclosure(p);
    REQUIRE(enc.has_value());
    CHECK(count_distinct_roots(p, Rational(enc->first) - Rational(1, 1000), Rational(enc->second)) ==
          count_distinct_roots(p, std::nullopt, std::nullopt));
    CHECK(sign_at(p, Rational(mpz_class(enc->first - 1))) != 0);
  }
}

TEST_CASE("exact square roots") {
  const auto q = N() * N() + C(3) * N() + C(1);
  CHECK(exact_sqrt(q * q) == q);
  CHECK(exact_sqrt((N() + C(1)).pow(6)) == (N() + C(1)).pow(3));
  CHECK_FALSE(exact_sqrt(N() * N() + N() + C(1)).has_value());
  CHECK_FALSE(exact_sqrt(N().pow(3)).has_value());
  CHECK_FALSE(exact_sqrt(C(-1) * N() * N()).has_value());
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_poly(testgen::uniform_int(rng, 0, 5));
    const auto r = exact_sqrt(p * p);
    REQUIRE(r.has_value());
    CHECK(*r == p);
  }
}

TEST_CASE("cauchy bound") {
  CHECK(cauchy_bound(N() * N() + N()) == Rational(2));
  CHECK(cauchy_bound(N() * N() - C(3) * N() + C(2)) == Rational(4));
  CHECK(cauchy_bound((N() + C(1)).pow(2)) == Rational(3));
}

TEST_CASE("conjugate product descent") {
  const auto f = sqrt2();
  const auto a = f->generator();
  const CenterPolynomial x = CenterPolynomial::monomial(f->one(), 1);
  CHECK(conjugate_product_descend(x - CenterPolynomial::constant(a), f) == N() * N() - C(2));
  CHECK(conjugate_product_descend(CenterPolynomial::constant(f->one()), f) == C(1));
  CHECK(conjugate_product_descend(lift(N() + C(1), f), f) == (N() + C(1)).pow(2));
}

TEST_CASE("descent is multiplicative and matches the regular representation") {
  const std::vector<FieldPtr> fields = {sqrt2(), gaussian(), NumberField::make(rational_poly({1, 1, 1})),
                                        NumberField::make(rational_poly({-2, 0, 0, 1}))};
  for (const auto& f : fields) {
    for (int trial = 0; trial < 8; ++trial) {
      auto random_center_poly = [&](int deg) {
        std::vector<FieldElement> c;
        for (int k = 0; k <= deg; ++k) {
          std::vector<Rational> v;
          for (int l = 0; l < f->degree(); ++l) v.push_back(testgen::random_rational(rng, 5, 3));
          c.emplace_back(f, RationalPolynomial(v));
        }
        c.back() = f->one();
        return CenterPolynomial(c);
      };
      const auto p = random_center_poly(testgen::uniform_int(rng, 1, 3));
      const auto q = random_center_poly(testgen::uniform_int(rng, 0, 2));
      const auto dp = conjugate_product_descend(p, f);
      CHECK(dp.degree() == p.degree() * f->degree());
      CHECK(conjugate_product_descend(p * q, f) == dp * conjugate_product_descend(q, f));
      CHECK(dp == regular_norm(p, f));
    }
  }
}

TEST_CASE("determinant strategies agree") {
  for (int trial = 0; trial < 30; ++trial) {
    const size_t n = static_cast<size_t>(testgen::uniform_int(rng, 1, 7));
    Matrix<Rational> m(n, n, Rational(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        m(i, j) = testgen::uniform_int(rng, 0, 3) == 0 ? Rational(0) : testgen::random_rational(rng, 6, 3);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    const Rational expected = laplace(rows);
    CHECK(bareiss_determinant(m) == expected);
    CHECK(cofactor_determinant(m) == expected);
  }
}
