// Split rules: axis-aligned cuts and the seven bivariate interaction
// geometries. A rule is a total predicate routing a point left or right.
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>

#include "grove/dataset.hpp"

namespace grove {

// Left iff x[feature] <= threshold.
struct AxisSplit {
  int feature = -1;
  double threshold = 0.0;
};

// The seven bivariate geometries on a coordinate pair (f1, f2). Boundaries are
// left-closed: "low" means x <= c, "high" means x > c, so left/right children
// partition the cell exactly.
//   LL/LG/GL/GG  left child = one quadrant (f1 low/high x f2 low/high)
//   Checker      left child = (low,low) union (high,high)
//   Single1/2    univariate cut on f1 at c1, resp. f2 at c2
enum class BivariateKind : std::uint8_t { LL, LG, GL, GG, Checker, Single1, Single2 };

struct BivariateSplit {
  BivariateKind kind = BivariateKind::LL;
  int f1 = -1;
  int f2 = -1;
  double c1 = 0.0;
  double c2 = 0.0;
};

using SplitRule = std::variant<AxisSplit, BivariateSplit>;

inline bool goes_left(const BivariateSplit& r, double x1, double x2) {
  const bool low1 = x1 <= r.c1;
  const bool low2 = x2 <= r.c2;
  switch (r.kind) {
    case BivariateKind::LL: return low1 && low2;
    case BivariateKind::LG: return low1 && !low2;
    case BivariateKind::GL: return !low1 && low2;
    case BivariateKind::GG: return !low1 && !low2;
    case BivariateKind::Checker: return low1 == low2;
    case BivariateKind::Single1: return low1;
    case BivariateKind::Single2: return low2;
  }
  return false;
}

inline bool goes_left(const SplitRule& rule, std::span<const double> x) {
  if (const auto* a = std::get_if<AxisSplit>(&rule)) return x[a->feature] <= a->threshold;
  const auto& b = std::get<BivariateSplit>(rule);
  return goes_left(b, x[b.f1], x[b.f2]);
}

inline bool row_goes_left(const SplitRule& rule, const Dataset& data, std::int32_t row) {
  if (const auto* a = std::get_if<AxisSplit>(&rule)) return data.x(row, a->feature) <= a->threshold;
  const auto& b = std::get<BivariateSplit>(rule);
  return goes_left(b, data.x(row, b.f1), data.x(row, b.f2));
}

// Splits a cell into (left, right) by the rule, preserving order. Empty sides
// are legal outputs.
std::pair<IndexSet, IndexSet> partition_indices(const IndexSet& cell, const SplitRule& rule,
                                                const Dataset& data);

}  // namespace grove
