#pragma once

#include "lqk/poly.hpp"

namespace lqk {

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

/// Stirling number of the second kind S(n, k): partitions of an n-set into
/// k nonempty blocks. Computed by the triangle recurrence
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1).
Int stirling2(unsigned n, unsigned k);

/// Eulerian number A(n, m) = sum_{l=0}^{m} (-1)^l C(n+1, l) (m-l)^n,
/// for 1 <= m <= n. Counts permutations of n objects with m-1 rises.
Int eulerian_number(unsigned n, unsigned m);

/// Eulerian polynomial A_n(t) = sum_{j=0}^{n-1} A(n, j+1) t^j, n >= 1.
IntPoly eulerian_polynomial(unsigned n);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
Rat pochhammer(const Rat& a, unsigned k);
Int pochhammer(const Int& a, unsigned k);

}  // namespace lqk
