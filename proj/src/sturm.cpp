#include "lqk/sturm.hpp"

#include <algorithm>

namespace lqk {

SturmChain::SturmChain(IntPoly p) {
  if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  polys_.push_back(p.primitive_part());
  if (p.degree() >= 1) {
    polys_.push_back(p.derivative().primitive_part());
    while (polys_.back().degree() >= 1) {
      IntPoly r = pos_pseudo_rem(polys_[polys_.size() - 2], polys_.back());
      if (r.is_zero()) break;
      polys_.push_back((-r).primitive_part());
    }
  }
  // A square-free input terminates in a nonzero constant.
  if (polys_.back().degree() != 0 && polys_.front().degree() >= 1)
    throw std::invalid_argument("SturmChain: polynomial is not square-free");
}

int SturmChain::variations_at(const Rat& x) const {
  int var = 0, prev = 0;
  for (const IntPoly& q : polys_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::variations_at_neg_inf() const {
  int var = 0, prev = 0;
  for (const IntPoly& q : polys_) {
    int s = sgn(q.leading());
    if (q.degree() % 2 != 0) s = -s;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::variations_at_pos_inf() const {
  int var = 0, prev = 0;
  for (const IntPoly& q : polys_) {
    int s = sgn(q.leading());
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_open(const Rat& lo, const Rat& hi) const {
  if (lo > hi) throw std::invalid_argument("count_open: lo > hi");
  if (lo == hi) return 0;
  if (poly().sign_at(lo) == 0)
    throw EndpointRootError("count_open: lower endpoint is a root");
  if (poly().sign_at(hi) == 0)
    throw EndpointRootError("count_open: upper endpoint is a root");
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const {
  if (poly().degree() < 1) return 0;
  return variations_at_neg_inf() - variations_at_pos_inf();
}

int sturm_count(const IntPoly& p, const RatInterval& iv) {
  return SturmChain(p).count_open(iv.lo, iv.hi);
}

Rat cauchy_root_bound(const IntPoly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat best(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat r(abs(p.coeff(i)), abs(p.leading()));
    r.canonicalize();
    if (r > best) best = r;
  }
  return best + 1;
}

namespace {

struct Segment {
  Rat lo, hi;
  int vlo, vhi;
};

}  // namespace

std::vector<RootInterval> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<RootInterval> roots;
  if (p.degree() < 1) return roots;
  SturmChain chain(p);
  const Rat bound = cauchy_root_bound(p);

  std::vector<Segment> stack;
  stack.push_back({-bound, bound, chain.variations_at(-bound), chain.variations_at(bound)});
  while (!stack.empty()) {
    Segment seg = stack.back();
    stack.pop_back();
    const int count = seg.vlo - seg.vhi;
    if (count == 0) continue;
    if (count == 1) {
      roots.push_back({seg.lo, seg.hi, p.sign_at(seg.lo), p.sign_at(seg.hi)});
      continue;
    }
    const Rat mid = (seg.lo + seg.hi) / 2;
    if (p.sign_at(mid) != 0) {
      const int vmid = chain.variations_at(mid);
      stack.push_back({seg.lo, mid, seg.vlo, vmid});
      stack.push_back({mid, seg.hi, vmid, seg.vhi});
      continue;
    }
    // The split point is itself a root. Record it exactly and carve out a
    // punctured neighbourhood that contains no other root.
    roots.push_back({mid, mid, 0, 0});
    Rat delta = (seg.hi - seg.lo) / 4;
    for (;;) {
      const Rat left = mid - delta, right = mid + delta;
      if (p.sign_at(left) != 0 && p.sign_at(right) != 0) {
        const int vleft = chain.variations_at(left);
        const int vright = chain.variations_at(right);
        if (vleft - vright == 1) {
          stack.push_back({seg.lo, left, seg.vlo, vleft});
          stack.push_back({right, seg.hi, vright, seg.vhi});
          break;
        }
      }
      delta /= 2;
    }
  }

  std::sort(roots.begin(), roots.end(), [](const RootInterval& a, const RootInterval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  return roots;
}

RootInterval refine_root(const IntPoly& p, RootInterval iv, const Rat& width) {
  if (iv.is_exact()) return iv;
  if (iv.sign_lo == 0 || iv.sign_hi == 0 || iv.sign_lo == iv.sign_hi)
    throw std::invalid_argument("refine_root: malformed isolation certificate");
  while (iv.hi - iv.lo > width) {
    const Rat mid = (iv.lo + iv.hi) / 2;
    const int s = p.sign_at(mid);
    if (s == 0) return {mid, mid, 0, 0};
    if (s == iv.sign_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
      iv.sign_hi = s;
    }
  }
  return iv;
}

std::pair<Rat, Rat> annulus_bounds(const IntPoly& p) {
  if (p.degree() < 1)
    throw std::invalid_argument("annulus_bounds: degree >= 1 required");
  for (const Int& c : p.coeffs())
    if (c <= 0)
      throw std::invalid_argument("annulus_bounds: coefficients must be strictly positive");
  Rat lo, hi;
  for (int i = 0; i < p.degree(); ++i) {
    Rat r(p.coeff(i), p.coeff(i + 1));
    r.canonicalize();
    if (i == 0 || r < lo) lo = r;
    if (i == 0 || r > hi) hi = r;
  }
  return {lo, hi};
}

namespace {

// Exact root value when the certificate has collapsed to a point.
bool band_contains(const Rat& m, const Rat& lo_bound, const Rat& hi_bound) {
  return lo_bound <= m && m <= hi_bound;
}

}  // namespace

bool root_magnitude_in_band(const IntPoly& p, RootInterval iv, const Rat& lo_bound,
                            const Rat& hi_bound) {
  // A root sitting exactly on a band edge never separates from it by
  // bisection, so decide those by exact evaluation first.
  for (const Rat& edge : {lo_bound, hi_bound, Rat(-lo_bound), Rat(-hi_bound)}) {
    if (iv.lo <= edge && edge <= iv.hi && p.sign_at(edge) == 0)
      return band_contains(abs(edge), lo_bound, hi_bound);
  }
  if (iv.lo <= 0 && 0 <= iv.hi && p.sign_at(Rat(0)) == 0)
    return band_contains(Rat(0), lo_bound, hi_bound);
  for (;;) {
    if (iv.is_exact()) return band_contains(abs(iv.lo), lo_bound, hi_bound);
    if (sgn(iv.lo) == sgn(iv.hi)) {
      const Rat mag_lo = std::min(abs(iv.lo), abs(iv.hi));
      const Rat mag_hi = std::max(abs(iv.lo), abs(iv.hi));
      if (mag_lo >= lo_bound && mag_hi <= hi_bound) return true;
      if (mag_hi < lo_bound || mag_lo > hi_bound) return false;
    }
    iv = refine_root(p, iv, iv.width() / 2);
  }
}

RootPosition locate_root(const IntPoly& p, RootInterval iv, const Rat& a, const Rat& b) {
  if (iv.lo <= a && a <= iv.hi && p.sign_at(a) == 0) return RootPosition::at_lower;
  if (iv.lo <= b && b <= iv.hi && p.sign_at(b) == 0) return RootPosition::at_upper;
  for (;;) {
    if (iv.is_exact()) {
      if (iv.lo == a) return RootPosition::at_lower;
      if (iv.lo == b) return RootPosition::at_upper;
      return (a < iv.lo && iv.lo < b) ? RootPosition::inside : RootPosition::outside;
    }
    if (a < iv.lo && iv.hi < b) return RootPosition::inside;
    if (iv.hi <= a || b <= iv.lo) return RootPosition::outside;
    iv = refine_root(p, iv, iv.width() / 2);
  }
}

}  // namespace lqk
