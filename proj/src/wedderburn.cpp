#include "pnrd/wedderburn.hpp"

#include <random>
#include <set>
#include <sstream>

#include "pnrd/determinant.hpp"
#include "pnrd/errors.hpp"

namespace pnrd {

std::string to_string(AlgebraKind k) { return k == AlgebraKind::Field ? "field" : "quaternion"; }

std::string to_string(AlbertType t) {
  switch (t) {
    case AlbertType::I: return "I";
    case AlbertType::II: return "II";
    case AlbertType::III: return "III";
    case AlbertType::IV: return "IV";
  }
  return "?";
}

std::string to_string(BaseInvolution b) {
  switch (b) {
    case BaseInvolution::Identity: return "identity";
    case BaseInvolution::FieldConjugation: return "field_conjugation";
    case BaseInvolution::QuaternionStandard: return "quaternion_standard";
    case BaseInvolution::QuaternionTwisted: return "quaternion_twisted";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// DivisionAlgebra / DivisionElement

AlgebraPtr DivisionAlgebra::field(FieldPtr center) {
  FieldElement zero = center->zero();
  return AlgebraPtr(new DivisionAlgebra(AlgebraKind::Field, std::move(center), zero, zero));
}

AlgebraPtr DivisionAlgebra::quaternion(FieldPtr center, FieldElement a, FieldElement b) {
  if (a.is_zero() || b.is_zero()) {
    throw validation_error("InvalidAlgebra", "quaternion parameters a and b must be nonzero");
  }
  return AlgebraPtr(new DivisionAlgebra(AlgebraKind::Quaternion, std::move(center), std::move(a), std::move(b)));
}

DivisionElement::DivisionElement(AlgebraPtr algebra, std::vector<FieldElement> coords)
    : alg_(std::move(algebra)), c_(std::move(coords)) {
  if (c_.size() != static_cast<size_t>(alg_->dimension())) {
    throw validation_error("ShapeMismatch", "division algebra element has " + std::to_string(c_.size()) +
                                                " coordinates, expected " + std::to_string(alg_->dimension()));
  }
  for (const auto& x : c_) {
    if (!x.field()->same_as(*alg_->center())) {
      throw validation_error("MismatchedField", "coordinate outside the algebra's center");
    }
  }
}

DivisionElement DivisionElement::from_center(AlgebraPtr algebra, const FieldElement& c) {
  std::vector<FieldElement> coords(static_cast<size_t>(algebra->dimension()), c.zero_like());
  coords[0] = c;
  return DivisionElement(std::move(algebra), std::move(coords));
}

DivisionElement DivisionElement::unit(AlgebraPtr algebra, size_t index) {
  const FieldElement zero = algebra->center()->zero();
  std::vector<FieldElement> coords(static_cast<size_t>(algebra->dimension()), zero);
  coords.at(index) = algebra->center()->one();
  return DivisionElement(std::move(algebra), std::move(coords));
}

bool DivisionElement::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

DivisionElement DivisionElement::zero_like() const {
  return DivisionElement(alg_, std::vector<FieldElement>(c_.size(), c_[0].zero_like()));
}

DivisionElement DivisionElement::one_like() const { return from_center(alg_, c_[0].one_like()); }

DivisionElement DivisionElement::scaled(const Rational& s) const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.scaled(s));
  return DivisionElement(alg_, std::move(out));
}

DivisionElement DivisionElement::times_center(const FieldElement& z) const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x * z);
  return DivisionElement(alg_, std::move(out));
}

DivisionElement DivisionElement::operator-() const { return scaled(Rational(-1)); }

namespace {

void require_same_algebra(const DivisionElement& a, const DivisionElement& b) {
  if (a.algebra() != b.algebra()) {
    const auto& x = *a.algebra();
    const auto& y = *b.algebra();
    if (x.kind() != y.kind() || !x.center()->same_as(*y.center()) || !(x.a() == y.a()) || !(x.b() == y.b())) {
      throw validation_error("MismatchedAlgebra", "elements of different division algebras");
    }
  }
}

}  // namespace

DivisionElement operator+(const DivisionElement& a, const DivisionElement& b) {
  require_same_algebra(a, b);
  std::vector<FieldElement> out;
  out.reserve(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) out.push_back(a.c_[i] + b.c_[i]);
  return DivisionElement(a.alg_, std::move(out));
}

DivisionElement operator-(const DivisionElement& a, const DivisionElement& b) {
  require_same_algebra(a, b);
  std::vector<FieldElement> out;
  out.reserve(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) out.push_back(a.c_[i] - b.c_[i]);
  return DivisionElement(a.alg_, std::move(out));
}

DivisionElement operator*(const DivisionElement& p, const DivisionElement& q) {
  require_same_algebra(p, q);
  if (p.alg_->kind() == AlgebraKind::Field) return DivisionElement(p.alg_, {p.c_[0] * q.c_[0]});
  const FieldElement& a = p.alg_->a();
  const FieldElement& b = p.alg_->b();
  const FieldElement ab = a * b;
  const auto& [x1, y1, z1, w1] = std::tie(p.c_[0], p.c_[1], p.c_[2], p.c_[3]);
  const auto& [x2, y2, z2, w2] = std::tie(q.c_[0], q.c_[1], q.c_[2], q.c_[3]);
  return DivisionElement(p.alg_, {
                                     x1 * x2 + a * y1 * y2 + b * z1 * z2 - ab * w1 * w2,
                                     y1 * x2 + x1 * y2 + b * w1 * z2 - b * z1 * w2,
                                     z1 * x2 - a * w1 * y2 + x1 * z2 + a * y1 * w2,
                                     w1 * x2 - z1 * y2 + y1 * z2 + x1 * w2,
                                 });
}

bool operator==(const DivisionElement& a, const DivisionElement& b) { return a.c_ == b.c_; }

DivisionElement DivisionElement::conjugate() const {
  if (alg_->kind() == AlgebraKind::Field) return *this;
  return DivisionElement(alg_, {c_[0], -c_[1], -c_[2], -c_[3]});
}

FieldElement DivisionElement::reduced_norm() const {
  if (alg_->kind() == AlgebraKind::Field) return c_[0];
  const FieldElement& a = alg_->a();
  const FieldElement& b = alg_->b();
  return c_[0] * c_[0] - a * c_[1] * c_[1] - b * c_[2] * c_[2] + a * b * c_[3] * c_[3];
}

FieldElement DivisionElement::reduced_trace() const {
  if (alg_->kind() == AlgebraKind::Field) return c_[0];
  return c_[0].scaled(Rational(2));
}

DivisionElement DivisionElement::inverse() const {
  const FieldElement n = reduced_norm();
  if (n.is_zero()) throw computation_error("DivisionByZero", "element has zero reduced norm");
  if (alg_->kind() == AlgebraKind::Field) return DivisionElement(alg_, {c_[0].inverse()});
  return conjugate().times_center(n.inverse());
}

bool DivisionElement::is_pure() const { return alg_->kind() == AlgebraKind::Quaternion && c_[0].is_zero(); }

Matrix<FieldElement> DivisionElement::left_regular() const {
  if (alg_->kind() == AlgebraKind::Field) return Matrix<FieldElement>(1, 1, c_[0]);
  const FieldElement& a = alg_->a();
  const FieldElement& b = alg_->b();
  const FieldElement ab = a * b;
  const auto& [x, y, z, w] = std::tie(c_[0], c_[1], c_[2], c_[3]);
  return Matrix<FieldElement>(4, 4,
                              {
                                  x, a * y, b * z, -(ab * w),  //
                                  y, x, b * w, -(b * z),       //
                                  z, -(a * w), x, a * y,       //
                                  w, -z, y, x,                 //
                              });
}

DivisionElement DivisionElement::map_center(const FieldElement& generator_image) const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.substitute(generator_image));
  return DivisionElement(alg_, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const DivisionElement& e) {
  if (e.coords().size() == 1) return os << e.coords()[0];
  static const char* kUnits[] = {"", "i", "j", "k"};
  os << "(";
  bool first = true;
  for (size_t u = 0; u < 4; ++u) {
    if (e.coords()[u].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << e.coords()[u] << ")" << kUnits[u];
  }
  if (first) os << "0";
  return os << ")";
}

// ---------------------------------------------------------------------------
// Matrices over Delta

namespace {

using DMatrix = Matrix<DivisionElement>;

DMatrix mat_mul(const DMatrix& x, const DMatrix& y) {
  const size_t n = x.rows();
  DMatrix out(n, y.cols(), x(0, 0).zero_like());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < y.cols(); ++j) {
      DivisionElement acc = x(0, 0).zero_like();
      for (size_t k = 0; k < x.cols(); ++k) {
        if (x(i, k).is_zero() || y(k, j).is_zero()) continue;
        acc = acc + x(i, k) * y(k, j);
      }
      out(i, j) = std::move(acc);
    }
  return out;
}

DMatrix identity_matrix(const AlgebraPtr& alg, size_t n) {
  const DivisionElement zero = DivisionElement::from_center(alg, alg->center()->zero());
  const DivisionElement one = DivisionElement::from_center(alg, alg->center()->one());
  DMatrix m(n, n, zero);
  for (size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

/// Gauss-Jordan inverse over a division ring using left row operations.
std::optional<DMatrix> mat_inverse(DMatrix m) {
  const size_t n = m.rows();
  DMatrix inv = identity_matrix(m(0, 0).algebra(), n);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m(p, k).reduced_norm().is_zero()) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(k, p);
    inv.swap_rows(k, p);
    const DivisionElement piv_inv = m(k, k).inverse();
    for (size_t j = 0; j < n; ++j) {
      m(k, j) = piv_inv * m(k, j);
      inv(k, j) = piv_inv * inv(k, j);
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      const DivisionElement f = m(i, k);
      for (size_t j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - f * m(k, j);
        inv(i, j) = inv(i, j) - f * inv(k, j);
      }
    }
  }
  return inv;
}

CenterCoords padded(const CenterCoords& c, int t, const std::string& what) {
  if (static_cast<int>(c.size()) > t) {
    throw validation_error("ShapeMismatch", what + " has " + std::to_string(c.size()) +
                                                " coordinates for a center of degree " + std::to_string(t));
  }
  CenterCoords out = c;
  out.resize(static_cast<size_t>(t), Rational(0));
  return out;
}

FieldElement center_element(const FieldPtr& f, const CenterCoords& c, const std::string& what) {
  return FieldElement(f, RationalPolynomial(padded(c, f->degree(), what)));
}

DivisionElement algebra_element(const AlgebraPtr& alg, const AlgebraCoords& c, const std::string& what) {
  if (c.size() != static_cast<size_t>(alg->dimension())) {
    throw validation_error("ShapeMismatch", what + " needs " + std::to_string(alg->dimension()) +
                                                " coordinate lists, got " + std::to_string(c.size()));
  }
  std::vector<FieldElement> coords;
  for (const auto& x : c) coords.push_back(center_element(alg->center(), x, what));
  return DivisionElement(alg, std::move(coords));
}

DMatrix block_matrix(const AlgebraPtr& alg, size_t r, const BlockCoords& c, const std::string& what) {
  if (c.size() != r) {
    throw validation_error("ShapeMismatch", what + " must have " + std::to_string(r) + " rows");
  }
  std::vector<DivisionElement> entries;
  for (const auto& row : c) {
    if (row.size() != r) {
      throw validation_error("ShapeMismatch", what + " must have " + std::to_string(r) + " columns");
    }
    for (const auto& x : row) entries.push_back(algebra_element(alg, x, what));
  }
  return DMatrix(r, r, std::move(entries));
}

/// Entrywise base involution composed with transpose.
DMatrix star(const WedderburnComponent& comp, const DMatrix& m) {
  return m.transposed().map([&](const DivisionElement& x) { return comp.apply_base(x); });
}

AlgebraElement random_element(const ComponentPtr& comp, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  const auto& alg = comp->algebra();
  const size_t r = static_cast<size_t>(comp->mult_r());
  std::vector<DivisionElement> entries;
  for (size_t e = 0; e < r * r; ++e) {
    std::vector<FieldElement> coords;
    for (int u = 0; u < alg->dimension(); ++u) {
      std::vector<Rational> c;
      for (int l = 0; l < alg->center()->degree(); ++l) c.emplace_back(num(rng), den(rng));
      coords.emplace_back(alg->center(), RationalPolynomial(std::move(c)));
    }
    entries.emplace_back(alg, std::move(coords));
  }
  return AlgebraElement(comp, DMatrix(r, r, std::move(entries)));
}

}  // namespace

// ---------------------------------------------------------------------------
// WedderburnComponent

DivisionElement WedderburnComponent::apply_base(const DivisionElement& x) const {
  switch (inv_.base) {
    case BaseInvolution::Identity: return x;
    case BaseInvolution::FieldConjugation: return x.map_center(*inv_.conj_image);
    case BaseInvolution::QuaternionStandard: return x.conjugate();
    case BaseInvolution::QuaternionTwisted: {
      const DivisionElement& s = *inv_.twist;
      return s.inverse() * x.conjugate() * s;
    }
  }
  throw std::logic_error("unknown base involution");
}

ComponentPtr WedderburnComponent::build(const ComponentDescription& d) {
  const std::string where = "factor '" + d.name + "'";
  if (d.name.empty()) throw validation_error("InvalidComponent", "factor name must be nonempty");
  if (d.dim_g < 1 || d.mult_r < 1) {
    throw validation_error("InvalidComponent", where + ": g and r must be positive integers");
  }

  std::shared_ptr<WedderburnComponent> comp(new WedderburnComponent());
  comp->name_ = d.name;
  comp->g_ = d.dim_g;
  comp->r_ = d.mult_r;
  comp->type_ = d.albert_type;

  const FieldPtr center = NumberField::make(d.center_min_poly);
  const int t = center->degree();
  if (d.kind == AlgebraKind::Field) {
    comp->alg_ = DivisionAlgebra::field(center);
  } else {
    comp->alg_ = DivisionAlgebra::quaternion(center, center_element(center, d.quaternion_a, where + " quaternion a"),
                                             center_element(center, d.quaternion_b, where + " quaternion b"));
  }
  const int m = comp->alg_->degree();

  // Exponent 2g/(t m) must be a positive integer.
  if ((2 * d.dim_g) % (t * m) != 0) {
    throw validation_error("NonIntegralExponent", where + ": 2g/(t m) = " + std::to_string(2 * d.dim_g) + "/" +
                                                      std::to_string(t * m) + " is not an integer");
  }
  comp->exponent_ = 2 * d.dim_g / (t * m);

  // Declared Albert type versus the center's real embeddings.
  const bool totally_real = center->real_embeddings() == t;
  const bool totally_imaginary = center->real_embeddings() == 0;
  switch (d.albert_type) {
    case AlbertType::I:
      if (d.kind != AlgebraKind::Field || !totally_real) {
        throw validation_error("TypeConstraintViolation",
                               where + ": type I needs a field algebra over a totally real center");
      }
      break;
    case AlbertType::II:
    case AlbertType::III:
      if (d.kind != AlgebraKind::Quaternion || !totally_real) {
        throw validation_error("TypeConstraintViolation",
                               where + ": types II/III need a quaternion algebra over a totally real center");
      }
      break;
    case AlbertType::IV:
      if (!totally_imaginary || t % 2 != 0) {
        throw validation_error("TypeConstraintViolation",
                               where + ": type IV needs a center of even degree with no real embedding");
      }
      break;
  }

  // Involution.
  InvolutionSpec& inv = comp->inv_;
  inv.base = d.base;
  const bool field_base = d.base == BaseInvolution::Identity || d.base == BaseInvolution::FieldConjugation;
  if (field_base != (d.kind == AlgebraKind::Field)) {
    throw validation_error("InvalidInvolution", where + ": base involution '" + to_string(d.base) +
                                                    "' does not match algebra kind '" + to_string(d.kind) + "'");
  }
  if (d.base == BaseInvolution::FieldConjugation) {
    const FieldElement c = center_element(center, d.conj_generator_image, where + " conj_gen_image");
    // c must be a root of the minimal polynomial and the substitution must square to the identity.
    FieldElement at_c = center->zero();
    for (int i = center->min_poly().degree(); i >= 0; --i) {
      at_c = at_c * c + center->from_rational(center->min_poly()[static_cast<size_t>(i)]);
    }
    if (!at_c.is_zero()) {
      throw validation_error("InvalidInvolution", where + ": conj_gen_image is not a root of the minimal polynomial");
    }
    if (!(c.substitute(c) == center->generator())) {
      throw validation_error("InvalidInvolution", where + ": field conjugation does not square to the identity");
    }
    inv.conj_image = c;
  }
  if (d.base == BaseInvolution::QuaternionTwisted) {
    const DivisionElement s = algebra_element(comp->alg_, d.twist, where + " twist s");
    if (!s.is_pure() || s.reduced_norm().is_zero()) {
      throw validation_error("InvalidInvolution", where + ": twist s must be a nonzero pure quaternion of nonzero norm");
    }
    inv.twist = s;
  }

  const size_t r = static_cast<size_t>(d.mult_r);
  inv.gram = d.gram ? block_matrix(comp->alg_, r, *d.gram, where + " H") : identity_matrix(comp->alg_, r);
  if (!(star(*comp, inv.gram) == inv.gram)) {
    throw validation_error("InvalidInvolution", where + ": H is not fixed by the base involution composed with transpose");
  }
  auto h_inv = mat_inverse(inv.gram);
  if (!h_inv) throw validation_error("InvalidInvolution", where + ": H is not invertible");
  comp->gram_inv_ = std::move(*h_inv);

  ComponentPtr result = comp;
  std::mt19937 rng(0x9e3779b9U);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement x = random_element(result, rng);
    if (!(rosati_apply(*result, rosati_apply(*result, x)) == x)) {
      throw validation_error("InvalidInvolution", where + ": Rosati map is not an involution");
    }
  }

  const PositivityReport pos = check_positivity(*result);
  if (!pos.positive) {
    throw validation_error("NonPositiveInvolution", where + ": trace form Trd(x x') is not positive definite (leading minor " +
                                                        std::to_string(*pos.failing_minor) + " is " +
                                                        pos.minors.back().str() + ")");
  }
  return result;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(ComponentPtr component, Matrix<DivisionElement> matrix)
    : comp_(std::move(component)), m_(std::move(matrix)) {
  const size_t r = static_cast<size_t>(comp_->mult_r());
  if (m_.rows() != r || m_.cols() != r) {
    throw validation_error("ShapeMismatch", "block for factor '" + comp_->name() + "' must be " + std::to_string(r) +
                                                "x" + std::to_string(r));
  }
}

AlgebraElement AlgebraElement::identity(const ComponentPtr& component) {
  return AlgebraElement(component, identity_matrix(component->algebra(), static_cast<size_t>(component->mult_r())));
}

AlgebraElement AlgebraElement::zero(const ComponentPtr& component) {
  const size_t r = static_cast<size_t>(component->mult_r());
  const auto& alg = component->algebra();
  return AlgebraElement(component, DMatrix(r, r, DivisionElement::from_center(alg, alg->center()->zero())));
}

AlgebraElement AlgebraElement::from_coords(const ComponentPtr& component, const BlockCoords& coords) {
  return AlgebraElement(component, block_matrix(component->algebra(), static_cast<size_t>(component->mult_r()), coords,
                                                "block for factor '" + component->name() + "'"));
}

AlgebraElement AlgebraElement::scaled(const Rational& s) const {
  return AlgebraElement(comp_, m_.map([&](const DivisionElement& x) { return x.scaled(s); }));
}

namespace {

void require_same_component(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.component() != b.component()) {
    throw validation_error("ContextMismatch", "algebra elements belong to different components");
  }
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_component(a, b);
  std::vector<DivisionElement> out;
  for (size_t i = 0; i < a.m_.data().size(); ++i) out.push_back(a.m_.data()[i] + b.m_.data()[i]);
  return AlgebraElement(a.comp_, DMatrix(a.m_.rows(), a.m_.cols(), std::move(out)));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_component(a, b);
  return AlgebraElement(a.comp_, mat_mul(a.m_, b.m_));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.comp_ == b.comp_ && a.m_ == b.m_; }

BlockCoords AlgebraElement::to_coords() const {
  BlockCoords out;
  for (size_t i = 0; i < m_.rows(); ++i) {
    std::vector<AlgebraCoords> row;
    for (size_t j = 0; j < m_.cols(); ++j) {
      AlgebraCoords entry;
      for (const auto& c : m_(i, j).coords()) entry.push_back(c.coordinates());
      row.push_back(std::move(entry));
    }
    out.push_back(std::move(row));
  }
  return out;
}

AlgebraElement rosati_apply(const WedderburnComponent& component, const AlgebraElement& e) {
  if (e.component().get() != &component) {
    throw validation_error("ContextMismatch", "element does not belong to factor '" + component.name() + "'");
  }
  const auto& inv = component.involution();
  return AlgebraElement(e.component(), mat_mul(mat_mul(component.gram_inverse(), star(component, e.matrix())), inv.gram));
}

Rational reduced_trace_to_rationals(const AlgebraElement& e) {
  FieldElement acc = e.component()->center()->zero();
  for (size_t i = 0; i < e.matrix().rows(); ++i) acc = acc + e(i, i).reduced_trace();
  return acc.trace();
}

PositivityReport check_positivity(const WedderburnComponent& component) {
  const auto& alg = component.algebra();
  const FieldPtr& center = alg->center();
  const size_t r = static_cast<size_t>(component.mult_r());
  const size_t units = static_cast<size_t>(alg->dimension());
  const size_t t = static_cast<size_t>(center->degree());

  // Standard Q-basis: E_ab (x) unit_u (x) theta^l.
  struct BasisEntry {
    size_t row, col;
    DivisionElement value;
  };
  std::vector<BasisEntry> basis;
  FieldElement theta_power = center->one();
  std::vector<FieldElement> powers;
  for (size_t l = 0; l < t; ++l) {
    powers.push_back(theta_power);
    theta_power = theta_power * center->generator();
  }
  for (size_t a = 0; a < r; ++a)
    for (size_t b = 0; b < r; ++b)
      for (size_t u = 0; u < units; ++u)
        for (size_t l = 0; l < t; ++l)
          basis.push_back({a, b, DivisionElement::unit(alg, u).times_center(powers[l])});

  const DivisionElement zero = DivisionElement::from_center(alg, center->zero());
  // Non-owning alias: rosati_apply matches components by address.
  const ComponentPtr self(ComponentPtr{}, &component);

  std::vector<AlgebraElement> images;
  images.reserve(basis.size());
  for (const auto& v : basis) {
    DMatrix m(r, r, zero);
    m(v.row, v.col) = v.value;
    images.push_back(rosati_apply(component, AlgebraElement(self, std::move(m))));
  }

  // Trd(U * R) with U = x E_ab reduces to trd(x * R_ba).
  const size_t n = basis.size();
  Matrix<Rational> gram(n, n, Rational(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const auto& u = basis[i];
      gram(i, j) = (u.value * images[j](u.col, u.row)).reduced_trace().trace();
    }

  PositivityReport report;
  report.gram = gram;
  // Leading principal minors from unpivoted fraction-free elimination.
  Matrix<Rational> m = gram;
  Rational prev(1);
  for (size_t k = 0; k < n; ++k) {
    report.minors.push_back(m(k, k));
    if (m(k, k).sign() <= 0) {
      report.failing_minor = k + 1;
      return report;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  report.positive = true;
  return report;
}

CenterPolynomial reduced_charpoly(const WedderburnComponent& component, const AlgebraElement& e) {
  if (e.component().get() != &component) {
    throw validation_error("ContextMismatch", "element does not belong to factor '" + component.name() + "'");
  }
  const FieldPtr& center = component.center();
  const size_t r = static_cast<size_t>(component.mult_r());
  const size_t units = static_cast<size_t>(component.algebra()->dimension());
  const size_t n = r * units;
  const CenterPolynomial var = CenterPolynomial::monomial(center->one(), 1);

  Matrix<CenterPolynomial> pencil(n, n, CenterPolynomial{});
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      const Matrix<FieldElement> block = e(i, j).left_regular();
      for (size_t a = 0; a < units; ++a)
        for (size_t b = 0; b < units; ++b) pencil(i * units + a, j * units + b) = CenterPolynomial::constant(block(a, b));
    }
  for (size_t i = 0; i < n; ++i) pencil(i, i) = pencil(i, i) + var;

  CenterPolynomial det = determinant(pencil);
  if (units == 1) return det;
  auto root = exact_sqrt(det);
  if (!root) {
    throw computation_error("SquareExtractionFailed", "quaternion block determinant for factor '" + component.name() +
                                                          "' is not a perfect square");
  }
  return *root;
}

// ---------------------------------------------------------------------------
// VarietyContext / SymmetricClass

VarietyContext::VarietyContext(std::vector<ComponentPtr> components, Rational sqrt_deg_phi)
    : comps_(std::move(components)), sqrt_deg_phi_(std::move(sqrt_deg_phi)) {
  if (sqrt_deg_phi_.sign() <= 0) throw validation_error("InvalidContext", "sqrt_deg_phi must be positive");
  std::set<std::string> names;
  for (const auto& c : comps_) {
    if (!names.insert(c->name()).second) {
      throw validation_error("InvalidContext", "duplicate factor name '" + c->name() + "'");
    }
    g_ += c->mult_r() * c->dim_g();
  }
  if (g_ < 1) throw validation_error("InvalidContext", "the variety needs at least one factor");
}

std::optional<size_t> VarietyContext::index_of(const std::string& name) const {
  for (size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i]->name() == name) return i;
  return std::nullopt;
}

VarietyContext build_context(const ContextDescription& description) {
  std::vector<ComponentPtr> comps;
  for (const auto& d : description.components) comps.push_back(WedderburnComponent::build(d));
  return VarietyContext(std::move(comps), description.sqrt_deg_phi);
}

void SymmetricClass::require_symmetric(const std::vector<AlgebraElement>& blocks) {
  for (const auto& b : blocks) {
    if (!(rosati_apply(*b.component(), b) == b)) {
      throw validation_error("NotSymmetric", "block for factor '" + b.component()->name() + "' is not Rosati-fixed");
    }
  }
}

SymmetricClass SymmetricClass::make(const VarietyContext& ctx, std::vector<AlgebraElement> blocks) {
  if (blocks.size() != ctx.components().size()) {
    throw validation_error("ContextMismatch", "class has " + std::to_string(blocks.size()) + " blocks, context has " +
                                                  std::to_string(ctx.components().size()) + " factors");
  }
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].component() != ctx.components()[i]) {
      throw validation_error("ContextMismatch", "block " + std::to_string(i) + " belongs to another context");
    }
  }
  require_symmetric(blocks);
  return SymmetricClass(std::move(blocks));
}

SymmetricClass SymmetricClass::identity(const VarietyContext& ctx) {
  std::vector<AlgebraElement> blocks;
  for (const auto& c : ctx.components()) blocks.push_back(AlgebraElement::identity(c));
  return SymmetricClass(std::move(blocks));
}

SymmetricClass SymmetricClass::zero(const VarietyContext& ctx) {
  std::vector<AlgebraElement> blocks;
  for (const auto& c : ctx.components()) blocks.push_back(AlgebraElement::zero(c));
  return SymmetricClass(std::move(blocks));
}

std::optional<Rational> SymmetricClass::scalar_value() const {
  std::optional<Rational> value;
  for (const auto& b : blocks_) {
    const auto c = b(0, 0).coords()[0].as_rational();
    if (!c) return std::nullopt;
    if (value && !(*value == *c)) return std::nullopt;
    value = c;
    if (!(b == AlgebraElement::identity(b.component()).scaled(*c))) return std::nullopt;
  }
  return value;
}

SymmetricClass SymmetricClass::scaled(const Rational& c) const {
  std::vector<AlgebraElement> out;
  for (const auto& b : blocks_) out.push_back(b.scaled(c));
  SymmetricClass result(std::move(out));
  require_symmetric(result.blocks_);
  return result;
}

SymmetricClass operator+(const SymmetricClass& x, const SymmetricClass& y) {
  if (x.blocks_.size() != y.blocks_.size()) {
    throw validation_error("ContextMismatch", "classes come from different contexts");
  }
  std::vector<AlgebraElement> out;
  for (size_t i = 0; i < x.blocks_.size(); ++i) out.push_back(x.blocks_[i] + y.blocks_[i]);
  SymmetricClass result(std::move(out));
  SymmetricClass::require_symmetric(result.blocks_);
  return result;
}

}  // namespace pnrd
