#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "pnrd/polynomial.hpp"
#include "pnrd/rational.hpp"

namespace pnrd {

class FieldElement;

/// Q[x]/(f) for a monic squarefree f with no rational root (degree 1 encodes
/// Q). Irreducibility beyond that is not verified.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Validates and builds the field. Throws Validation "InvalidCenter".
  static std::shared_ptr<const NumberField> make(RationalPolynomial min_poly);
  static std::shared_ptr<const NumberField> rationals();

  const RationalPolynomial& min_poly() const { return min_poly_; }
  int degree() const { return min_poly_.degree(); }

  /// Tr(x^k) for k = 0 .. degree-1.
  const std::vector<Rational>& power_traces() const { return power_traces_; }

  FieldElement generator() const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& r) const;

  /// Number of real roots of the defining polynomial.
  int real_embeddings() const { return real_roots_; }

  bool same_as(const NumberField& o) const { return this == &o || min_poly_ == o.min_poly_; }

 private:
  struct Token {};

 public:
  NumberField(Token, RationalPolynomial min_poly);

 private:
  RationalPolynomial min_poly_;
  std::vector<Rational> power_traces_;
  int real_roots_ = 0;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field in the power basis 1, x, ..., x^{t-1}.
class FieldElement {
 public:
  FieldElement(FieldPtr field, RationalPolynomial repr);
  FieldElement(FieldPtr field, const Rational& c);

  const FieldPtr& field() const { return field_; }
  const RationalPolynomial& repr() const { return repr_; }
  /// Coordinates in the power basis, padded to the field degree.
  std::vector<Rational> coordinates() const;

  bool is_zero() const { return repr_.is_zero(); }
  std::optional<Rational> as_rational() const;

  FieldElement zero_like() const { return FieldElement(field_, RationalPolynomial{}); }
  FieldElement one_like() const { return FieldElement(field_, Rational(1)); }
  FieldElement scaled(const Rational& s) const;
  FieldElement inverse() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Image under the field endomorphism sending the generator to `image`.
  FieldElement substitute(const FieldElement& image) const;

  /// Trace of the multiplication-by-this map over Q.
  Rational trace() const;

 private:
  FieldPtr field_;
  RationalPolynomial repr_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

enum class FieldOp { Add, Sub, Mul, Inv };

/// Ring/field operation in a shared parent field; `b` is ignored for Inv.
/// Throws Computation "DivisionByZero" for inv(0) and Validation
/// "MismatchedField" for elements of different fields.
FieldElement field_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op);

/// Field norm N_{Z/Q}(e) = Res_x(min_poly, repr).
Rational nf_norm(const FieldElement& e);

/// Square root of a field element that happens to be a rational square.
std::optional<FieldElement> exact_sqrt(const FieldElement& e);

FieldElement exact_div(const FieldElement& a, const FieldElement& b);

using CenterPolynomial = Polynomial<FieldElement>;

/// Product of all conjugates of p over the embeddings of its coefficient
/// field, computed as Res_y(min_poly(y), P(y, N)). The result has degree
/// t * deg(p). `field` is needed when p is zero or constant.
RationalPolynomial conjugate_product_descend(const CenterPolynomial& p, const FieldPtr& field);

/// Lifts a rational polynomial to the center.
CenterPolynomial lift(const RationalPolynomial& p, const FieldPtr& field);

}  // namespace pnrd
