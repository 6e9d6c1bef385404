#pragma once

#include <vector>

#include "pnrd/matrix.hpp"
#include "pnrd/rational.hpp"
#include "pnrd/wedderburn.hpp"

// Reference computations for the split model E^g, where a class is a
// symmetric rational g x g matrix. Nothing here goes through polynomials,
// number fields or the templated determinant.

namespace pnrd::oracle {

class SymMatrix {
 public:
  /// Throws Validation "NotSymmetric" or "ShapeMismatch".
  explicit SymMatrix(Matrix<Rational> m);
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static SymMatrix scalar(size_t n, const Rational& c);

  size_t size() const { return m_.rows(); }
  const Rational& operator()(size_t i, size_t j) const { return m_(i, j); }
  const Matrix<Rational>& matrix() const { return m_; }

  /// M + c I
  SymMatrix shifted(const Rational& c) const;
  /// A^T M A
  SymMatrix congruent(const Matrix<Rational>& a) const;

 private:
  Matrix<Rational> m_;
};

struct Inertia {
  int plus = 0;
  int zero = 0;
  int minus = 0;
};

/// det(M), by integer fraction-free elimination after clearing denominators.
Rational oracle_chi(const SymMatrix& m);

/// Signature by symmetric congruence elimination.
Inertia oracle_inertia(const SymMatrix& m);

/// First m in [lo, hi] with det(M + (m-i)I) = 0 or n_minus(M + (m-i)I) != i for
/// every i in 1..g. Throws Computation "WindowExhausted" otherwise.
long oracle_regcont(const SymMatrix& m, long lo, long hi);

/// True when ctx is one Field component over Q with g_1 = 1, identity base
/// involution and H = I, i.e. the model where classes are symmetric matrices.
bool is_split_context(const VarietyContext& ctx);

/// Throws Validation "NotSplitContext" when is_split_context fails.
SymMatrix to_sym_matrix(const VarietyContext& ctx, const SymmetricClass& cls);
SymmetricClass from_sym_matrix(const VarietyContext& ctx, const SymMatrix& m);

/// The split context for E^g.
VarietyContext split_context(int g);

}  // namespace pnrd::oracle
