#include "lqk/anm.hpp"

#include <stdexcept>

#include "lqk/combinatorics.hpp"

namespace lqk {

void validate(const AnmIndex& idx) {
  if (idx.n < 1 || idx.m < 1)
    throw std::invalid_argument("AnmIndex: n >= 1 and m >= 1 required");
}

IntPoly anm_recurrence(const AnmIndex& idx) {
  validate(idx);
  IntPoly a = eulerian_polynomial(idx.n + 1);
  static const IntPoly one_minus_t{1, -1};
  for (unsigned j = 1; j < idx.m; ++j)
    a = Int(idx.n + j + 1) * a + one_minus_t * a.derivative();
  return a;
}

IntPoly anm_closed(const AnmIndex& idx) {
  validate(idx);
  const unsigned n = idx.n, m = idx.m;
  static const IntPoly one_minus_t{1, -1};
  IntPoly sum;
  IntPoly power = IntPoly::constant(1);  // (1-t)^(n-j), built from j = n down
  for (unsigned j = n + 1; j-- > 0;) {
    Int c = pochhammer(Int(m + 1), j) * stirling2(n + 1, j + 1);
    if ((n + j) % 2 != 0) c = -c;
    sum += c * power;
    power *= one_minus_t;
  }
  return factorial(m) * sum;
}

std::vector<Int> anm_series_oracle(const AnmIndex& idx, unsigned num_terms) {
  validate(idx);
  if (num_terms < idx.n + 1)
    throw std::invalid_argument("anm_series_oracle: num_terms >= n+1 required");
  std::vector<Int> coeffs(num_terms);
  for (unsigned k = 0; k < num_terms; ++k) {
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), k + idx.m, idx.n);
    coeffs[k] = pochhammer(Int(k + 1), idx.m) * pw;
  }
  return coeffs;
}

std::vector<Int> taylor_over_pole(const IntPoly& a, unsigned pole_order,
                                  unsigned num_terms) {
  // 1/(1-t)^N = sum_k C(k+N-1, N-1) t^k; convolve with the numerator.
  std::vector<Int> out(num_terms, Int(0));
  for (unsigned k = 0; k < num_terms; ++k) {
    const unsigned imax = std::min<unsigned>(k, std::max(a.degree(), 0));
    for (unsigned i = 0; i <= imax; ++i) {
      if (a.degree() < 0) break;
      out[k] += a.coeff(i) * binomial(k - i + pole_order - 1, pole_order - 1);
    }
  }
  return out;
}

bool cross_recurrence_check(unsigned n, unsigned m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("cross_recurrence_check: n, m >= 1 required");
  const IntPoly lhs = anm_recurrence({n + 1, m});
  const IntPoly up_m = anm_recurrence({n, m + 1});
  const IntPoly base = anm_recurrence({n, m});
  static const IntPoly t_poly{0, 1};
  static const IntPoly one_minus_t{1, -1};
  return lhs == t_poly * up_m + Int(m) * (one_minus_t * base);
}

}  // namespace lqk
