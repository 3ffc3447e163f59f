#pragma once

#include <vector>

#include "lqk/poly.hpp"

namespace lqk {

/// Index pair of the Fock-Bargmann-Hartogs domain D_{n,m}: n base
/// dimensions, m fiber dimensions. Both at least 1.
struct AnmIndex {
  unsigned n = 1;
  unsigned m = 1;
};

void validate(const AnmIndex& idx);

/// A_{n,m}(t), the degree-n numerator of the m-th derivative of Li_{-n}(t)
/// over (1-t)^{n+m+1}, built by the derivative recurrence
///   A_{n,m+1} = (n+m+1) A_{n,m} + (1-t) A_{n,m}'
/// from the Eulerian polynomial A_{n,1} = A_{n+1}.
IntPoly anm_recurrence(const AnmIndex& idx);

/// Same polynomial by the Stirling-number closed form
///   A_{n,m}(t) = m! sum_j (-1)^{n+j} (m+1)_j S(n+1, j+1) (1-t)^{n-j}.
IntPoly anm_closed(const AnmIndex& idx);

/// First num_terms Taylor coefficients of A_{n,m}(t)/(1-t)^{n+m+1}; the
/// k-th coefficient is (k+1)_m (k+m)^n exactly. Requires num_terms >= n+1.
std::vector<Int> anm_series_oracle(const AnmIndex& idx, unsigned num_terms);

/// Taylor coefficients of a(t)/(1-t)^pole_order around 0.
std::vector<Int> taylor_over_pole(const IntPoly& a, unsigned pole_order,
                                  unsigned num_terms);

/// Checks A_{n+1,m} = t A_{n,m+1} + m (1-t) A_{n,m} coefficientwise with
/// exactly constructed polynomials.
bool cross_recurrence_check(unsigned n, unsigned m);

}  // namespace lqk
