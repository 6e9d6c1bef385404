#include "pnrd/riemannroch.hpp"

#include "pnrd/errors.hpp"

namespace pnrd {

RationalPolynomial pnrd_square(const VarietyContext& ctx, const SymmetricClass& alpha) {
  const auto& comps = ctx.components();
  const auto& blocks = alpha.blocks();
  if (blocks.size() != comps.size()) {
    throw validation_error("ContextMismatch", "class does not match the context's factors");
  }
  RationalPolynomial f = RationalPolynomial::constant(Rational(1));
  for (size_t k = 0; k < comps.size(); ++k) {
    if (blocks[k].component() != comps[k]) {
      throw validation_error("ContextMismatch", "class block " + std::to_string(k) + " belongs to another context");
    }
    const CenterPolynomial cp = reduced_charpoly(*comps[k], blocks[k]);
    const RationalPolynomial p = conjugate_product_descend(cp, comps[k]->center());
    f = f * p.pow(static_cast<unsigned>(comps[k]->exponent()));
  }
  return f;
}

HilbertData pnrd_pencil(const VarietyContext& ctx, const SymmetricClass& alpha) {
  const RationalPolynomial f = pnrd_square(ctx, alpha);
  const int g = ctx.dimension();
  auto q = exact_sqrt(f);
  if (!q) {
    throw computation_error("NotAPerfectSquare", "prod Nrd^e = " + to_string(f) +
                                                     " is not a square; the class is not symmetric or the algebra data is inconsistent");
  }
  if (q->degree() != g || !(q->leading() == Rational(1))) {
    throw computation_error("NotAPerfectSquare", "square root " + to_string(*q) + " is not monic of degree " +
                                                     std::to_string(g));
  }
  HilbertData out;
  out.profile = sturm_root_profile(*q);
  if (!out.profile.all_real()) {
    throw computation_error("NonRealRoots", to_string(*q) + " has only " + std::to_string(out.profile.real_total()) +
                                                " real roots out of " + std::to_string(g));
  }
  out.scaled = q->scaled(ctx.sqrt_deg_phi());
  out.q = std::move(*q);
  return out;
}

Rational pnrd_eval(const VarietyContext& ctx, const SymmetricClass& alpha) {
  return pnrd_pencil(ctx, alpha).q.coeff(0);
}

Rational euler_char(const VarietyContext& ctx, const SymmetricClass& alpha) {
  return ctx.sqrt_deg_phi() * pnrd_eval(ctx, alpha);
}

RootProfile index(const VarietyContext& ctx, const SymmetricClass& alpha) { return pnrd_pencil(ctx, alpha).profile; }

VanishingRanges vanishing_ranges(const VarietyContext& ctx, const SymmetricClass& alpha) {
  const RootProfile p = index(ctx, alpha);
  const int g = ctx.dimension();
  VanishingRanges out;
  for (int j = 0; j < p.positive; ++j) out.vanish_low.push_back(j);
  for (int j = 0; j < p.negative; ++j) out.vanish_high.push_back(g - j);
  return out;
}

BundleClass BundleClass::make(const SymmetricClass& det_class, int rank) {
  if (rank < 1) throw validation_error("InvalidRank", "bundle rank must be a positive integer");
  return BundleClass{det_class, rank, det_class.scaled(Rational(1, rank))};
}

BundleInvariants bundle_invariants(const VarietyContext& ctx, const BundleClass& b) {
  const HilbertData h = pnrd_pencil(ctx, b.det_class);
  BundleInvariants out;
  out.chi_det = ctx.sqrt_deg_phi() * h.q.coeff(0);
  out.chi_bundle = out.chi_det / Rational(b.rank).pow(ctx.dimension() - 1);
  out.index_bundle = h.profile.positive;
  out.dimK_bundle = h.profile.zero;
  if (!out.chi_bundle.is_zero()) out.ordK = out.chi_bundle * out.chi_bundle;
  return out;
}

RationalPolynomial bundle_hilbert(const VarietyContext& ctx, const BundleClass& b) {
  const HilbertData h = pnrd_pencil(ctx, b.det_class);
  const Rational r(b.rank);
  return h.q.rescale(r).scaled(ctx.sqrt_deg_phi() / r.pow(ctx.dimension() - 1));
}

}  // namespace pnrd
