#include "pnrd/number_field.hpp"

#include <sstream>

#include "pnrd/determinant.hpp"
#include "pnrd/errors.hpp"
#include "pnrd/roots.hpp"

namespace pnrd {

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool has_rational_root(const RationalPolynomial& f) {
  if (f.coeff(0).is_zero()) return true;
  mpz_class den_lcm = 1;
  for (const auto& c : f.coefficients()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  const RationalPolynomial scaled = f.scaled(Rational(den_lcm));
  const mpz_class c0 = scaled.coeff(0).num();
  const mpz_class cn = scaled.leading().num();
  for (const auto& a : divisors(c0)) {
    for (const auto& b : divisors(cn)) {
      const Rational cand(a, b);
      if (f(cand).is_zero() || f(-cand).is_zero()) return true;
    }
  }
  return false;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !a.field()->same_as(*b.field())) {
    throw validation_error("MismatchedField", "field elements belong to different number fields");
  }
}

}  // namespace

NumberField::NumberField(Token, RationalPolynomial min_poly) : min_poly_(std::move(min_poly)) {
  const int t = degree();
  // x^m mod f for m = 0 .. 2t-2, then Tr(x^k) as the trace of multiplication by x^k.
  std::vector<RationalPolynomial> powers;
  RationalPolynomial xm = RationalPolynomial::constant(Rational(1));
  const RationalPolynomial x = RationalPolynomial::monomial(Rational(1), 1);
  for (int m = 0; m <= 2 * t - 2; ++m) {
    powers.push_back(xm);
    xm = (xm * x) % min_poly_;
  }
  for (int k = 0; k < t; ++k) {
    Rational tr(0);
    for (int j = 0; j < t; ++j) {
      const auto& col = powers[static_cast<size_t>(k + j)];
      if (j <= col.degree()) tr += col[static_cast<size_t>(j)];
    }
    power_traces_.push_back(tr);
  }
  real_roots_ = count_distinct_roots(min_poly_, std::nullopt, std::nullopt);
}

FieldPtr NumberField::make(RationalPolynomial min_poly) {
  if (min_poly.degree() < 1) {
    throw validation_error("InvalidCenter", "minimal polynomial must have degree >= 1");
  }
  if (!(min_poly.leading() == Rational(1))) {
    throw validation_error("InvalidCenter", "minimal polynomial must be monic: " + to_string(min_poly, "x"));
  }
  if (gcd(min_poly, min_poly.derivative()).degree() > 0) {
    throw validation_error("InvalidCenter", "minimal polynomial is not squarefree: " + to_string(min_poly, "x"));
  }
  if (min_poly.degree() > 1 && has_rational_root(min_poly)) {
    throw validation_error("InvalidCenter", "minimal polynomial has a rational root: " + to_string(min_poly, "x"));
  }
  return std::make_shared<const NumberField>(Token{}, std::move(min_poly));
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = make(rational_poly({0, 1}));
  return q;
}

FieldElement NumberField::generator() const {
  return FieldElement(shared_from_this(), RationalPolynomial::monomial(Rational(1), 1));
}
FieldElement NumberField::zero() const { return FieldElement(shared_from_this(), RationalPolynomial{}); }
FieldElement NumberField::one() const { return FieldElement(shared_from_this(), Rational(1)); }
FieldElement NumberField::from_rational(const Rational& r) const { return FieldElement(shared_from_this(), r); }

FieldElement::FieldElement(FieldPtr field, RationalPolynomial repr) : field_(std::move(field)), repr_(std::move(repr)) {
  if (repr_.degree() >= field_->degree()) repr_ = repr_ % field_->min_poly();
}

FieldElement::FieldElement(FieldPtr field, const Rational& c)
    : field_(std::move(field)), repr_(RationalPolynomial::constant(c)) {}

std::vector<Rational> FieldElement::coordinates() const {
  std::vector<Rational> out(static_cast<size_t>(field_->degree()), Rational(0));
  for (int i = 0; i <= repr_.degree(); ++i) out[static_cast<size_t>(i)] = repr_[static_cast<size_t>(i)];
  return out;
}

std::optional<Rational> FieldElement::as_rational() const {
  if (repr_.degree() > 0) return std::nullopt;
  return repr_.is_zero() ? Rational(0) : repr_[0];
}

FieldElement FieldElement::scaled(const Rational& s) const { return FieldElement(field_, repr_.scaled(s)); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw computation_error("DivisionByZero", "inverse of zero field element");
  // Extended Euclid: track u with u * repr = r (mod f).
  RationalPolynomial r0 = field_->min_poly(), r1 = repr_;
  RationalPolynomial u0, u1 = RationalPolynomial::constant(Rational(1));
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RationalPolynomial u = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  if (r1.is_zero()) {
    throw computation_error("DivisionByZero", "field element is a zero divisor modulo a reducible minimal polynomial");
  }
  return FieldElement(field_, u1.scaled(r1[0].inverse()));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, -repr_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.repr_ + b.repr_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.repr_ - b.repr_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.field_->degree() == 1) return FieldElement(a.field_, a.repr_ * b.repr_);
  return FieldElement(a.field_, (a.repr_ * b.repr_) % a.field_->min_poly());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return (a.field_ == b.field_ || a.field_->same_as(*b.field_)) && a.repr_ == b.repr_;
}

FieldElement FieldElement::substitute(const FieldElement& image) const {
  require_same_field(*this, image);
  FieldElement acc = zero_like();
  for (int i = repr_.degree(); i >= 0; --i) {
    acc = acc * image + FieldElement(field_, repr_[static_cast<size_t>(i)]);
  }
  return acc;
}

Rational FieldElement::trace() const {
  Rational tr(0);
  const auto& traces = field_->power_traces();
  for (int i = 0; i <= repr_.degree(); ++i) tr += repr_[static_cast<size_t>(i)] * traces[static_cast<size_t>(i)];
  return tr;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  if (e.field()->degree() == 1) return os << (e.is_zero() ? Rational(0) : e.repr()[0]);
  return os << to_string(e.repr(), "a");
}

FieldElement field_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Inv: return a.inverse();
  }
  throw std::logic_error("unknown field operation");
}

Rational nf_norm(const FieldElement& e) {
  if (e.is_zero()) return Rational(0);
  return resultant(e.field()->min_poly(), e.repr());
}

std::optional<FieldElement> exact_sqrt(const FieldElement& e) {
  const auto r = e.as_rational();
  if (!r) return std::nullopt;
  const auto s = exact_sqrt(*r);
  if (!s) return std::nullopt;
  return FieldElement(e.field(), *s);
}

FieldElement exact_div(const FieldElement& a, const FieldElement& b) { return a / b; }

RationalPolynomial conjugate_product_descend(const CenterPolynomial& p, const FieldPtr& field) {
  if (p.is_zero()) return {};
  const int t = field->degree();
  // P(y, N) = sum_l (sum_k coord_l(p_k) N^k) y^l
  std::vector<RationalPolynomial> in_y(static_cast<size_t>(t));
  for (int l = 0; l < t; ++l) {
    std::vector<Rational> coeffs;
    for (const auto& c : p.coefficients()) coeffs.push_back(c.coordinates()[static_cast<size_t>(l)]);
    in_y[static_cast<size_t>(l)] = RationalPolynomial(std::move(coeffs));
  }
  int n = t - 1;
  while (n > 0 && in_y[static_cast<size_t>(n)].is_zero()) --n;
  if (n == 0) return in_y[0].pow(static_cast<unsigned>(t));

  // Sylvester matrix of f(y) (degree t) and P(y, N) (degree n) over Q[N].
  const size_t size = static_cast<size_t>(t + n);
  Matrix<RationalPolynomial> syl(size, size, RationalPolynomial{});
  const RationalPolynomial& f = field->min_poly();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= t; ++k)
      syl(static_cast<size_t>(i), static_cast<size_t>(i + k)) = RationalPolynomial::constant(f.coeff(t - k));
  for (int i = 0; i < t; ++i)
    for (int k = 0; k <= n; ++k)
      syl(static_cast<size_t>(n + i), static_cast<size_t>(i + k)) = in_y[static_cast<size_t>(n - k)];
  return determinant(syl);
}

CenterPolynomial lift(const RationalPolynomial& p, const FieldPtr& field) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) coeffs.emplace_back(field, c);
  return CenterPolynomial(std::move(coeffs));
}

}  // namespace pnrd
