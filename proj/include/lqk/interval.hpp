#pragma once

#include "lqk/poly.hpp"

namespace lqk {

/// Closed interval with exact rational endpoints, lo <= hi.
struct RatInterval {
  Rat lo, hi;

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }
};

/// Isolation certificate: the target polynomial has exactly one root in
/// [lo, hi]. Either lo == hi and the endpoint is the root itself
/// (sign_lo == sign_hi == 0), or the endpoints are non-roots with opposite
/// signs and the root lies in the open interval.
struct RootInterval {
  Rat lo, hi;
  int sign_lo = 0;
  int sign_hi = 0;

  bool is_exact() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  RatInterval interval() const { return {lo, hi}; }
};

/// Position of an isolated root relative to an open interval (a, b).
enum class RootPosition { inside, outside, at_lower, at_upper };

}  // namespace lqk
