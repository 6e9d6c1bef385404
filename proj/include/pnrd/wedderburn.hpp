#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pnrd/matrix.hpp"
#include "pnrd/number_field.hpp"

namespace pnrd {

// ---------------------------------------------------------------------------
// Division algebras over a number field center.

enum class AlgebraKind { Field, Quaternion };
enum class AlbertType { I, II, III, IV };

std::string to_string(AlgebraKind k);
std::string to_string(AlbertType t);

/// Either the center Z itself (m = 1) or the quaternion algebra (a, b)_Z with
/// i^2 = a, j^2 = b, ij = -ji = k (m = 2).
class DivisionAlgebra {
 public:
  static std::shared_ptr<const DivisionAlgebra> field(FieldPtr center);
  /// Throws Validation "InvalidAlgebra" when a or b is zero.
  static std::shared_ptr<const DivisionAlgebra> quaternion(FieldPtr center, FieldElement a, FieldElement b);

  AlgebraKind kind() const { return kind_; }
  const FieldPtr& center() const { return center_; }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  /// Degree m of the algebra over its center (m^2 = dimension).
  int degree() const { return kind_ == AlgebraKind::Field ? 1 : 2; }
  int dimension() const { return kind_ == AlgebraKind::Field ? 1 : 4; }

 private:
  DivisionAlgebra(AlgebraKind kind, FieldPtr center, FieldElement a, FieldElement b)
      : kind_(kind), center_(std::move(center)), a_(std::move(a)), b_(std::move(b)) {}

  AlgebraKind kind_;
  FieldPtr center_;
  FieldElement a_, b_;
};

using AlgebraPtr = std::shared_ptr<const DivisionAlgebra>;

/// Element of a DivisionAlgebra: one center coordinate for the Field kind,
/// (x, y, z, w) for x + yi + zj + wk in the Quaternion kind.
class DivisionElement {
 public:
  DivisionElement(AlgebraPtr algebra, std::vector<FieldElement> coords);
  static DivisionElement from_center(AlgebraPtr algebra, const FieldElement& c);
  /// The unit 1, i, j or k (index 0..3).
  static DivisionElement unit(AlgebraPtr algebra, size_t index);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<FieldElement>& coords() const { return c_; }

  bool is_zero() const;
  DivisionElement zero_like() const;
  DivisionElement one_like() const;
  DivisionElement scaled(const Rational& s) const;
  DivisionElement times_center(const FieldElement& z) const;

  DivisionElement operator-() const;
  friend DivisionElement operator+(const DivisionElement& a, const DivisionElement& b);
  friend DivisionElement operator-(const DivisionElement& a, const DivisionElement& b);
  friend DivisionElement operator*(const DivisionElement& a, const DivisionElement& b);
  friend bool operator==(const DivisionElement& a, const DivisionElement& b);

  /// Standard involution (quaternion conjugation; identity on a field).
  DivisionElement conjugate() const;
  FieldElement reduced_norm() const;
  FieldElement reduced_trace() const;
  /// Throws Computation "DivisionByZero" when the reduced norm vanishes.
  DivisionElement inverse() const;
  bool is_pure() const;

  /// Matrix of left multiplication over the center in the basis (1, i, j, k).
  Matrix<FieldElement> left_regular() const;

  /// Applies a center endomorphism coordinatewise.
  DivisionElement map_center(const FieldElement& generator_image) const;

 private:
  AlgebraPtr alg_;
  std::vector<FieldElement> c_;
};

std::ostream& operator<<(std::ostream& os, const DivisionElement& e);

// ---------------------------------------------------------------------------
// Input description (plain rationals, before any field is built).

/// Center element in the power basis.
using CenterCoords = std::vector<Rational>;
/// Division-algebra element: one CenterCoords per unit (1 for fields, 4 for quaternions).
using AlgebraCoords = std::vector<CenterCoords>;
/// r x r matrix of AlgebraCoords, row-major nesting.
using BlockCoords = std::vector<std::vector<AlgebraCoords>>;

enum class BaseInvolution { Identity, FieldConjugation, QuaternionStandard, QuaternionTwisted };

std::string to_string(BaseInvolution b);

struct ComponentDescription {
  std::string name;
  int dim_g = 1;
  int mult_r = 1;
  RationalPolynomial center_min_poly = rational_poly({0, 1});
  AlgebraKind kind = AlgebraKind::Field;
  CenterCoords quaternion_a;
  CenterCoords quaternion_b;
  AlbertType albert_type = AlbertType::I;
  BaseInvolution base = BaseInvolution::Identity;
  CenterCoords conj_generator_image;
  AlgebraCoords twist;
  std::optional<BlockCoords> gram;
};

struct ContextDescription {
  Rational sqrt_deg_phi{1};
  std::vector<ComponentDescription> components;
};

// ---------------------------------------------------------------------------
// Components, elements, contexts.

struct InvolutionSpec {
  BaseInvolution base = BaseInvolution::Identity;
  std::optional<FieldElement> conj_image;
  std::optional<DivisionElement> twist;
  Matrix<DivisionElement> gram;
};

class AlgebraElement;

/// One simple factor M_r(Delta) of End^0(A) together with its Rosati data.
class WedderburnComponent {
 public:
  const std::string& name() const { return name_; }
  int dim_g() const { return g_; }
  int mult_r() const { return r_; }
  const AlgebraPtr& algebra() const { return alg_; }
  const FieldPtr& center() const { return alg_->center(); }
  int center_degree() const { return alg_->center()->degree(); }
  int algebra_degree() const { return alg_->degree(); }
  /// e = 2g / (t m)
  int exponent() const { return exponent_; }
  /// n = r m, degree of the reduced characteristic polynomial.
  int reduced_degree() const { return r_ * alg_->degree(); }
  AlbertType albert_type() const { return type_; }
  const InvolutionSpec& involution() const { return inv_; }
  const Matrix<DivisionElement>& gram_inverse() const { return gram_inv_; }

  /// Entrywise base involution.
  DivisionElement apply_base(const DivisionElement& x) const;

  /// Validated construction; see build_context for the checks performed.
  static std::shared_ptr<const WedderburnComponent> build(const ComponentDescription& d);

 private:
  WedderburnComponent() = default;

  std::string name_;
  int g_ = 1;
  int r_ = 1;
  AlgebraPtr alg_;
  int exponent_ = 0;
  AlbertType type_ = AlbertType::I;
  InvolutionSpec inv_;
  Matrix<DivisionElement> gram_inv_;
};

using ComponentPtr = std::shared_ptr<const WedderburnComponent>;

/// An r x r matrix over Delta belonging to one component.
class AlgebraElement {
 public:
  AlgebraElement(ComponentPtr component, Matrix<DivisionElement> matrix);
  static AlgebraElement identity(const ComponentPtr& component);
  static AlgebraElement zero(const ComponentPtr& component);
  /// Builds from coordinates; throws Validation "ShapeMismatch".
  static AlgebraElement from_coords(const ComponentPtr& component, const BlockCoords& coords);

  const ComponentPtr& component() const { return comp_; }
  const Matrix<DivisionElement>& matrix() const { return m_; }
  const DivisionElement& operator()(size_t i, size_t j) const { return m_(i, j); }

  AlgebraElement scaled(const Rational& s) const;
  AlgebraElement operator-() const { return scaled(Rational(-1)); }
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  BlockCoords to_coords() const;

 private:
  ComponentPtr comp_;
  Matrix<DivisionElement> m_;
};

/// H^{-1} * iota(M)^T * H.
AlgebraElement rosati_apply(const WedderburnComponent& component, const AlgebraElement& e);

/// Trd_{R/Q}: reduced trace over the center followed by the field trace.
Rational reduced_trace_to_rationals(const AlgebraElement& e);

struct PositivityReport {
  bool positive = false;
  /// 1-based order of the first nonpositive leading principal minor.
  std::optional<size_t> failing_minor;
  std::vector<Rational> minors;
  Matrix<Rational> gram;
};

/// Gram matrix of (u, v) -> Trd_{R/Q}(u * rosati(v)) over the standard Q-basis
/// of M_r(Delta), tested for positive definiteness by leading minors.
PositivityReport check_positivity(const WedderburnComponent& component);

/// Reduced characteristic polynomial of the pencil N*1 + e, monic of degree
/// r*m over the center. Throws Computation "SquareExtractionFailed" when the
/// quaternion block determinant is not a square.
CenterPolynomial reduced_charpoly(const WedderburnComponent& component, const AlgebraElement& e);

/// The product of components plus sqrt(deg phi).
class VarietyContext {
 public:
  VarietyContext(std::vector<ComponentPtr> components, Rational sqrt_deg_phi);

  const std::vector<ComponentPtr>& components() const { return comps_; }
  const Rational& sqrt_deg_phi() const { return sqrt_deg_phi_; }
  /// g = sum r_i g_i
  int dimension() const { return g_; }
  std::optional<size_t> index_of(const std::string& name) const;

  friend bool operator==(const VarietyContext& a, const VarietyContext& b) { return a.comps_ == b.comps_; }

 private:
  std::vector<ComponentPtr> comps_;
  Rational sqrt_deg_phi_;
  int g_ = 0;
};

/// Validates every component and assembles the context. Errors (Validation):
/// InvalidCenter, InvalidAlgebra, InvalidComponent, NonIntegralExponent,
/// TypeConstraintViolation, InvalidInvolution, NonPositiveInvolution.
VarietyContext build_context(const ContextDescription& description);

/// A Rosati-fixed element of End^0, one block per component.
class SymmetricClass {
 public:
  /// Throws Validation "ContextMismatch" or "NotSymmetric".
  static SymmetricClass make(const VarietyContext& ctx, std::vector<AlgebraElement> blocks);
  static SymmetricClass identity(const VarietyContext& ctx);
  static SymmetricClass zero(const VarietyContext& ctx);

  const std::vector<AlgebraElement>& blocks() const { return blocks_; }

  /// c when every block equals c times the identity.
  std::optional<Rational> scalar_value() const;

  SymmetricClass scaled(const Rational& c) const;
  friend SymmetricClass operator+(const SymmetricClass& x, const SymmetricClass& y);
  friend bool operator==(const SymmetricClass& x, const SymmetricClass& y) { return x.blocks_ == y.blocks_; }

 private:
  explicit SymmetricClass(std::vector<AlgebraElement> blocks) : blocks_(std::move(blocks)) {}
  static void require_symmetric(const std::vector<AlgebraElement>& blocks);

  std::vector<AlgebraElement> blocks_;
};

}  // namespace pnrd
