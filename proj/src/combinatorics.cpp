#include "lqk/combinatorics.hpp"

#include <stdexcept>

namespace lqk {

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int stirling2(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  if (n == 0) return Int(1);  // S(0,0)
  if (k == 0) return Int(0);
  // Row-by-row triangle, one row of storage.
  std::vector<Int> row(k + 1, Int(0));
  row[0] = 1;  // row for n' = 0
  for (unsigned np = 1; np <= n; ++np) {
    for (unsigned kp = std::min(np, k); kp >= 1; --kp)
      row[kp] = Int(kp) * row[kp] + row[kp - 1];
    row[0] = 0;
  }
  return row[k];
}

Int eulerian_number(unsigned n, unsigned m) {
  if (n < 1 || m < 1 || m > n)
    throw std::invalid_argument("eulerian_number: requires 1 <= m <= n");
  Int sum(0);
  for (unsigned l = 0; l <= m; ++l) {
    Int term;
    mpz_ui_pow_ui(term.get_mpz_t(), m - l, n);
    term *= binomial(n + 1, l);
    if (l % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

IntPoly eulerian_polynomial(unsigned n) {
  if (n < 1) throw std::invalid_argument("eulerian_polynomial: n >= 1 required");
  std::vector<Int> coeffs(n);
  for (unsigned j = 0; j < n; ++j) coeffs[j] = eulerian_number(n, j + 1);
  return IntPoly(std::move(coeffs));
}

Rat pochhammer(const Rat& a, unsigned k) {
  Rat r(1);
  Rat f = a;
  for (unsigned i = 0; i < k; ++i) {
    r *= f;
    f += 1;
  }
  return r;
}

Int pochhammer(const Int& a, unsigned k) {
  Int r(1);
  Int f = a;
  for (unsigned i = 0; i < k; ++i) {
    r *= f;
    f += 1;
  }
  return r;
}

}  // namespace lqk
