#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pnrd/riemannroch.hpp"

namespace pnrd {

struct Classification {
  Rational chi;
  int index_i = 0;
  int dim_k = 0;
  int weak_index_j = 0;
  /// "IT(i)" or "WIT(j)-generic".
  std::string label;
  /// Set on WIT labels: a nontrivial restriction to K^0 would make every
  /// cohomology group of some translates vanish instead.
  std::optional<std::string> caveat;
  std::optional<std::string> gv_note;
};

int weak_index(const VarietyContext& ctx, const SymmetricClass& alpha);
Classification classify(const VarietyContext& ctx, const SymmetricClass& alpha);

/// C(m, i) for one i: the class (m - i) id + gamma is degenerate or does not
/// have exactly i positive roots.
struct PredicateCell {
  int i = 0;
  Rational value;    // q_gamma(m - i)
  int positive = 0;  // positive roots of q_gamma(N + m - i)
  bool degenerate = false;
  bool holds = false;
};

struct PredicateRow {
  long m = 0;
  std::vector<PredicateCell> cells;
  bool holds = false;
};

struct RegularityResult {
  long m = 0;
  int g = 0;
  Rational cauchy_bound;
  long window_lo = 0;
  long window_hi = 0;
  /// Rows for window_lo .. m in order.
  std::vector<PredicateRow> table;
  std::optional<std::string> gv_note;
};

/// Evaluates one row of the predicate from q_gamma by shifting and a fresh
/// root profile per i.
PredicateRow regcont_row(const RationalPolynomial& q_gamma, long m);

/// Integer window [lo, hi] with the predicate false at lo and true at hi,
/// derived from the integer enclosure of the roots of q_gamma.
std::pair<long, long> regcont_window(const RationalPolynomial& q_gamma);

/// Smallest m with C(m, i) for every i in 1..g, by an upward scan.
RegularityResult reg_cont(const VarietyContext& ctx, const SymmetricClass& gamma);
RegularityResult reg_cont_bundle(const VarietyContext& ctx, const BundleClass& b);

struct SweepPoint {
  Rational s;
  std::optional<RegularityResult> result;
  std::optional<std::string> error;
  std::optional<std::string> error_code;
};

/// Maximal run of consecutive grid points with the same outcome.
struct SweepSegment {
  Rational from;
  Rational to;
  size_t count = 0;
  std::optional<long> m;
  /// Error code shared by every failing point of the run.
  std::optional<std::string> error;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::vector<SweepSegment> segments;
};

/// reg_cont(gamma0 + s delta) for each s in the grid. Per-point failures are
/// recorded, not thrown.
SweepResult sweep(const VarietyContext& ctx, const SymmetricClass& gamma0, const SymmetricClass& delta,
                  const std::vector<Rational>& grid);

}  // namespace pnrd
