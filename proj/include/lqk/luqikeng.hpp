#pragma once

#include <stdexcept>
#include <vector>

#include "lqk/anm.hpp"
#include "lqk/interval.hpp"
#include "lqk/sturm.hpp"

namespace lqk {

/// Default enclosure width for reported roots: 10^-6.
Rat default_root_width();

/// Outcome of the zero-freeness test for the Bergman kernel of D_{n,m}.
/// The kernel is zero-free iff A_{n,m} has no root in the open interval
/// (-1, 0); all roots are real, negative and simple, so these are exactly
/// the roots in the open unit disk.
struct LqkVerdict {
  AnmIndex index;
  bool is_lu_qi_keng = false;
  unsigned roots_in_unit_interval = 0;  // count in open (-1, 0)
  RootInterval largest_root;            // rightmost root, always negative
  bool root_at_minus_one = false;       // exact hit A_{n,m}(-1) = 0
};

/// Certificate for m0(n): every m below fails, m0 itself passes. Together
/// with the strict decrease of the largest root in m this pins the
/// threshold.
struct M0Certificate {
  unsigned n = 0;
  unsigned m0 = 0;
  std::vector<LqkVerdict> below;  // m = 1 .. m0-1
  LqkVerdict at;                  // m = m0
};

struct CapExceededError : std::runtime_error {
  CapExceededError(unsigned n, unsigned m_cap);
  unsigned n, m_cap;
};

/// Decides the Lu Qi-Keng property of D_{n,m} exactly. The largest root is
/// enclosed to the requested width.
LqkVerdict is_lu_qi_keng(const AnmIndex& idx, const Rat& width = default_root_width());

/// Safety cap for the m0 scan, comfortably above the observed growth
/// m0(n) ~ (n+1) ln(n+1): ceil(4 (n+1) ln(n+1) + 16).
unsigned default_m_cap(unsigned n);

/// Scans m = 1, 2, ... and stops at the first Lu Qi-Keng verdict; the
/// largest root decreases strictly in m, so that m is m0(n). Throws
/// CapExceededError if m_cap (0 = default cap) is reached without success.
M0Certificate compute_m0(unsigned n, unsigned m_cap = 0,
                         const Rat& width = default_root_width());

/// m0(n) by the same scan but without per-m root enclosures; used for wide
/// sweeps where only the threshold value matters.
unsigned m0_value(unsigned n, unsigned m_cap = 0);

/// Enclosure of the largest (closest to zero) root of A_{n,m}.
RootInterval largest_root(const AnmIndex& idx, const Rat& width = default_root_width());

/// Rightmost real root of square-free p via its Sturm chain, without
/// isolating the other roots.
RootInterval rightmost_root(const SturmChain& chain);

/// Exact count of roots of A (= some A_{n,m}) in the open interval (-1, 0)
/// plus the exact -1 hit flag. A root at -1 is divided out so the Sturm
/// count keeps non-root endpoints.
std::pair<unsigned, bool> unit_interval_root_count(const IntPoly& a);

/// Refines an enclosure of a root of p until the double-precision relative
/// residual |p(mid)| / sum_i |a_i mid^i| drops below target. Used to build
/// kernel zero witnesses whose evaluation vanishes at floating precision.
RootInterval refine_to_relative_residual(const IntPoly& p, RootInterval iv,
                                         double target);

}  // namespace lqk
