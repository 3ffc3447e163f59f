#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lqk/interval.hpp"
#include "lqk/luqikeng.hpp"

namespace lqk {

struct CheckResult {
  std::string name;
  unsigned n = 0, m = 0;
  bool pass = true;
  std::string witness;  // explanation when the check fails
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  unsigned violations = 0;
  bool all_pass() const { return violations == 0; }
  std::vector<const CheckResult*> failures() const;
};

/// Test hook: rewrites a constructed A_{n,m} before verification. Used as a
/// corruption fixture to prove the suite catches broken identities.
using AnmMutator = std::function<IntPoly(const AnmIndex&, IntPoly)>;

/// Exhaustive verification over the grid 1 <= n <= n_max, 1 <= m <= m_max:
/// construction equality of the recurrence and closed forms plus the series
/// expansion, coefficient positivity, degree, square-freeness, negative
/// real-rootedness, the coefficient-ratio annulus, value (n+m)! at t = 1,
/// the cross recurrence, strict alternation A_{n,m+1} against A_{n,m},
/// strict interlacing A_{n,m} against A_{n+1,m}, strict monotonicity of the
/// largest root in both indices, and monotonicity of m0 up to n_max.
SuiteReport theorem_suite(unsigned n_max, unsigned m_max,
                          const AnmMutator& mutate = {});

/// Certified nearest integer of (n+1) ln(n+1). The enclosure is narrowed by
/// directed rounding until it excludes the half-integer tie point; a tie
/// that cannot be resolved is reported, not rounded.
struct NearestInt {
  long value = 0;
  bool tie = false;
};
NearestInt certified_nearest_int_xlnx(unsigned n_plus_1);

struct ConjectureRow {
  unsigned n = 0;
  unsigned m0 = 0;
  NearestInt f;              // nearest integer of (n+1) ln(n+1)
  long diff = 0;             // m0 - f
  bool strict_increase = true;  // m0(n) > m0(n-1), vacuous at n = 1
  RootInterval r_n1, r_n2;   // largest roots of A_{n,1}, A_{n,2}
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  bool m0_le_f = true;          // m0(n) <= f(n) throughout
  bool equality_iff_n_le_10 = true;  // within the computed range
};

/// Tabulates m0(n) against f(n) = [ (n+1) ln(n+1) ] for n = 1..n_max and
/// the drift of the largest roots r_{n,1}, r_{n,2} toward zero.
ConjectureReport conjecture_probe(unsigned n_max, unsigned m_cap_override = 0);

}  // namespace lqk
