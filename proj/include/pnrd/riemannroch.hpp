#pragma once

#include <vector>

#include "pnrd/roots.hpp"
#include "pnrd/wedderburn.hpp"

namespace pnrd {

/// Pencil data for a class alpha.
struct HilbertData {
  /// pNrd(N*id + alpha), monic of degree g.
  RationalPolynomial q;
  /// q * sqrt(deg phi): chi(N*lambda + D).
  RationalPolynomial scaled;
  RootProfile profile;
};

/// Computes q as the polynomial square root of prod_i P_i^{e_i}, where P_i is
/// the reduced characteristic polynomial of block i descended to Q[N].
/// Computation errors: NotAPerfectSquare, NonRealRoots.
HilbertData pnrd_pencil(const VarietyContext& ctx, const SymmetricClass& alpha);

/// F = prod_i P_i^{e_i} before the square root is taken; degree 2g.
RationalPolynomial pnrd_square(const VarietyContext& ctx, const SymmetricClass& alpha);

Rational pnrd_eval(const VarietyContext& ctx, const SymmetricClass& alpha);
Rational euler_char(const VarietyContext& ctx, const SymmetricClass& alpha);

/// positive = i(D), zero = dim K, negative = g - i - dim K.
RootProfile index(const VarietyContext& ctx, const SymmetricClass& alpha);

struct VanishingRanges {
  std::vector<int> vanish_low;   // H^j = 0 for 0 <= j < i
  std::vector<int> vanish_high;  // H^{g-j} = 0 for 0 <= j < neg
};

VanishingRanges vanishing_ranges(const VarietyContext& ctx, const SymmetricClass& alpha);

/// Numerical data of a semihomogeneous bundle: the class of its determinant
/// and its rank. gamma = det_class / rank.
struct BundleClass {
  SymmetricClass det_class;
  int rank;
  SymmetricClass gamma;

  /// Throws Validation "InvalidRank" for rank < 1.
  static BundleClass make(const SymmetricClass& det_class, int rank);
};

struct BundleInvariants {
  Rational chi_det;
  Rational chi_bundle;
  int index_bundle = 0;
  int dimK_bundle = 0;
  std::optional<Rational> ordK;
};

BundleInvariants bundle_invariants(const VarietyContext& ctx, const BundleClass& b);

/// Hilbert polynomial of the bundle: sqrt(deg phi) * q_det(r N) / r^{g-1}.
RationalPolynomial bundle_hilbert(const VarietyContext& ctx, const BundleClass& b);

}  // namespace pnrd
