#include "lqk/luqikeng.hpp"

#include <cmath>
#include <sstream>

#include "lqk/combinatorics.hpp"

namespace lqk {

Rat default_root_width() { return Rat(1, 1000000); }

CapExceededError::CapExceededError(unsigned n_, unsigned m_cap_)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "m0 scan for n = " << n_ << " exceeded the cap m = " << m_cap_
           << " without a Lu Qi-Keng verdict";
        return os.str();
      }()),
      n(n_),
      m_cap(m_cap_) {}

RootInterval rightmost_root(const SturmChain& chain) {
  const IntPoly& p = chain.poly();
  if (chain.count_all() < 1)
    throw std::invalid_argument("rightmost_root: no real roots");
  Rat lo = -cauchy_root_bound(p);
  Rat hi = cauchy_root_bound(p);
  int vlo = chain.variations_at(lo);
  int vhi = chain.variations_at(hi);
  while (vlo - vhi > 1) {
    const Rat mid = (lo + hi) / 2;
    if (p.sign_at(mid) != 0) {
      const int vmid = chain.variations_at(mid);
      if (vmid - vhi >= 1) {
        lo = mid;
        vlo = vmid;
      } else {
        hi = mid;
        vhi = vmid;
      }
      continue;
    }
    // mid is a root; decide whether anything lies to its right.
    Rat delta = (hi - lo) / 4;
    for (;;) {
      const Rat left = mid - delta, right = mid + delta;
      if (p.sign_at(left) != 0 && p.sign_at(right) != 0) {
        const int vleft = chain.variations_at(left);
        const int vright = chain.variations_at(right);
        if (vleft - vright == 1) {
          if (vright - vhi >= 1) {
            lo = right;
            vlo = vright;
          } else {
            return {mid, mid, 0, 0};  // mid is the rightmost root
          }
          break;
        }
      }
      delta /= 2;
    }
  }
  return {lo, hi, p.sign_at(lo), p.sign_at(hi)};
}

RootInterval largest_root(const AnmIndex& idx, const Rat& width) {
  const IntPoly a = anm_recurrence(idx);
  SturmChain chain(a);
  return refine_root(a, rightmost_root(chain), width);
}

std::pair<unsigned, bool> unit_interval_root_count(const IntPoly& a) {
  const bool at_minus_one = a.sign_at_int(Int(-1)) == 0;
  IntPoly q = a;
  if (at_minus_one) {
    static const IntPoly t_plus_one{1, 1};
    if (!try_divide(a, t_plus_one, q))
      throw std::logic_error("unit_interval_root_count: (t+1) does not divide");
  }
  SturmChain chain(q);
  const int count = chain.count_open(Rat(-1), Rat(0));
  return {static_cast<unsigned>(count), at_minus_one};
}

LqkVerdict is_lu_qi_keng(const AnmIndex& idx, const Rat& width) {
  validate(idx);
  const IntPoly a = anm_recurrence(idx);
  LqkVerdict v;
  v.index = idx;
  auto [count, at_minus_one] = unit_interval_root_count(a);
  v.roots_in_unit_interval = count;
  v.root_at_minus_one = at_minus_one;
  v.is_lu_qi_keng = count == 0;
  SturmChain chain(a);
  if (chain.count_all() != a.degree())
    throw std::logic_error("is_lu_qi_keng: A_{n,m} is not real-rooted");
  v.largest_root = refine_root(a, rightmost_root(chain), width);
  return v;
}

unsigned default_m_cap(unsigned n) {
  const double x = 4.0 * (n + 1) * std::log(n + 1.0) + 16.0;
  return static_cast<unsigned>(std::ceil(x));
}

M0Certificate compute_m0(unsigned n, unsigned m_cap, const Rat& width) {
  if (n < 1) throw std::invalid_argument("compute_m0: n >= 1 required");
  if (m_cap == 0) m_cap = default_m_cap(n);
  M0Certificate cert;
  cert.n = n;
  for (unsigned m = 1; m <= m_cap; ++m) {
    LqkVerdict v = is_lu_qi_keng({n, m}, width);
    if (v.is_lu_qi_keng) {
      cert.m0 = m;
      cert.at = std::move(v);
      return cert;
    }
    cert.below.push_back(std::move(v));
  }
  throw CapExceededError(n, m_cap);
}

unsigned m0_value(unsigned n, unsigned m_cap) {
  if (n < 1) throw std::invalid_argument("m0_value: n >= 1 required");
  if (m_cap == 0) m_cap = default_m_cap(n);
  IntPoly a = eulerian_polynomial(n + 1);
  static const IntPoly one_minus_t{1, -1};
  for (unsigned m = 1; m <= m_cap; ++m) {
    if (unit_interval_root_count(a).first == 0) return m;
    a = Int(n + m + 1) * a + one_minus_t * a.derivative();
  }
  throw CapExceededError(n, m_cap);
}

RootInterval refine_to_relative_residual(const IntPoly& p, RootInterval iv,
                                         double target) {
  for (;;) {
    const Rat mid = iv.midpoint();
    const double value = std::abs(p.eval(mid).get_d());
    double scale = 0.0;
    const double x = std::abs(mid.get_d());
    double xp = 1.0;
    for (const Int& c : p.coeffs()) {
      scale += std::abs(c.get_d()) * xp;
      xp *= x;
    }
    if (iv.is_exact() || (scale > 0.0 && value / scale <= target)) return iv;
    iv = refine_root(p, iv, iv.width() / 16);
  }
}

}  // namespace lqk
