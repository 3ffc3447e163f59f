#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "lqk/interval.hpp"
#include "lqk/poly.hpp"

namespace lqk {

/// Thrown when a counting interval endpoint is a root of the polynomial.
/// Callers must test p(endpoint) exactly and handle that case themselves.
struct EndpointRootError : std::invalid_argument {
  explicit EndpointRootError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Canonical Sturm sequence of a square-free polynomial, over the integers
/// with content removed at every step (signs preserved by positive scaling).
class SturmChain {
public:
  explicit SturmChain(IntPoly p);

  const std::vector<IntPoly>& polys() const { return polys_; }
  const IntPoly& poly() const { return polys_.front(); }

  /// Sign variations of the chain at x.
  int variations_at(const Rat& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  /// Distinct real roots in the open interval (lo, hi). Throws
  /// EndpointRootError if either endpoint is a root.
  int count_open(const Rat& lo, const Rat& hi) const;
  /// Total number of distinct real roots.
  int count_all() const;

private:
  std::vector<IntPoly> polys_;
};

/// Exact number of distinct real roots of square-free p in the open
/// interval. Endpoint roots raise EndpointRootError.
int sturm_count(const IntPoly& p, const RatInterval& iv);

/// Cauchy bound: every real root lies strictly inside (-B, B),
/// B = 1 + max_i |a_i| / |a_d|.
Rat cauchy_root_bound(const IntPoly& p);

/// Isolating intervals for all real roots of square-free p, pairwise
/// disjoint and sorted ascending. Rational roots hit during the search come
/// back as exact point intervals.
std::vector<RootInterval> isolate_real_roots(const IntPoly& p);

/// Bisect iv until hi - lo <= width, preserving the isolation certificate.
/// An interval already within the width is returned unchanged.
RootInterval refine_root(const IntPoly& p, RootInterval iv, const Rat& width);

/// Coefficient-ratio annulus for a polynomial with strictly positive
/// coefficients: every zero satisfies min <= |t| <= max over ratios
/// a_i / a_{i+1}. Returns (min, max).
std::pair<Rat, Rat> annulus_bounds(const IntPoly& p);

/// Certified containment of the magnitude of an isolated real root of p in
/// the closed band [lo_bound, hi_bound]. Refines as needed; decides exact
/// boundary hits by exact evaluation.
bool root_magnitude_in_band(const IntPoly& p, RootInterval iv, const Rat& lo_bound,
                            const Rat& hi_bound);

/// Certified position of an isolated root of p relative to the open
/// interval (a, b). Refines until the answer is unambiguous.
RootPosition locate_root(const IntPoly& p, RootInterval iv, const Rat& a, const Rat& b);

}  // namespace lqk
