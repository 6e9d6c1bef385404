#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pnrd/polynomial.hpp"

namespace pnrd {

/// Real-root census of a rational polynomial, counted with multiplicity.
struct RootProfile {
  RationalPolynomial poly;
  int positive = 0;
  int zero = 0;
  int negative = 0;

  int real_total() const { return positive + zero + negative; }
  bool all_real() const { return real_total() == poly.degree(); }
};

/// Sign of p(x): -1, 0 or 1.
int sign_at(const RationalPolynomial& p, const Rational& x);

/// Sturm chain p, p', -rem(...), ... with every member rescaled by a positive
/// rational (sign changes are unaffected).
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

/// Sign changes (zeros skipped) of a Sturm chain at x, or at -inf / +inf.
int sign_changes(const std::vector<RationalPolynomial>& chain, const Rational& x);
int sign_changes_at_infinity(const std::vector<RationalPolynomial>& chain, bool positive_side);

/// Number of distinct real roots of a nonzero p in (lo, hi]; an empty bound
/// stands for -infinity / +infinity.
int count_distinct_roots(const RationalPolynomial& p, const std::optional<Rational>& lo,
                         const std::optional<Rational>& hi);

/// Squarefree layers s_1, s_2, ...: s_j vanishes exactly at the roots of p of
/// multiplicity >= j, each simply.
std::vector<RationalPolynomial> multiplicity_layers(const RationalPolynomial& p);

/// Positive / zero / negative root counts with multiplicity. Throws
/// Computation "ZeroPolynomial" on p = 0.
RootProfile sturm_root_profile(const RationalPolynomial& p);

/// 1 + max |a_i / a_n|: every real root lies in [-B, B].
Rational cauchy_bound(const RationalPolynomial& p);

/// Counts, with multiplicity, real roots strictly above a threshold. The
/// multiplicity layers and their Sturm chains are built once, so repeated
/// queries along a scan are cheap.
class RootCounter {
 public:
  explicit RootCounter(const RationalPolynomial& p);

  int count_above(const Rational& t) const;
  int count_real() const;
  const RationalPolynomial& poly() const { return poly_; }

 private:
  RationalPolynomial poly_;
  std::vector<std::vector<RationalPolynomial>> chains_;
};

/// Smallest integer range [lo, hi] containing every real root of p, found by
/// Sturm bisection inside the Cauchy interval. nullopt when p has no real
/// roots.
std::optional<std::pair<mpz_class, mpz_class>> integer_root_enclosure(const RationalPolynomial& p);

}  // namespace pnrd
