#include "lqk/fbh_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lqk {

namespace {

double norm_sq(const std::vector<Cplx>& v) {
  double s = 0.0;
  for (const Cplx& c : v) s += std::norm(c);
  return s;
}

void check_dimensions(const AnmIndex& idx, const FBHPoint& p) {
  if (p.z.size() != idx.n || p.zeta.size() != idx.m)
    throw std::invalid_argument("FBH point dimensions do not match the index (n, m)");
}

double prefactor(const AnmIndex& idx, double mu) {
  return std::pow(mu, idx.n) / std::pow(std::numbers::pi, idx.n + idx.m);
}

Cplx horner(const IntPoly& a, Cplx t) {
  Cplx acc(0.0, 0.0);
  const auto& coeffs = a.coeffs();
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * t + Cplx(coeffs[i].get_d(), 0.0);
  return acc;
}

Cplx checked_argument(const KernelPoint& kp) {
  check_dimensions(kp.index, kp.p);
  check_dimensions(kp.index, kp.q);
  if (kp.mu <= 0) throw std::invalid_argument("mu must be positive");
  if (!is_member(kp.index, kp.mu, kp.p) || !is_member(kp.index, kp.mu, kp.q))
    throw std::domain_error(
        "point outside D_{n,m}: ||zeta||^2 < exp(-mu ||z||^2) violated");
  const Cplx t = kernel_argument(kp);
  if (std::abs(t) >= 1.0)
    throw std::domain_error("kernel argument |t| >= 1; points are not members");
  return t;
}

}  // namespace

Cplx hermitian_dot(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
  Cplx s(0.0, 0.0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

bool is_member(const AnmIndex& idx, double mu, const FBHPoint& p) {
  check_dimensions(idx, p);
  if (mu <= 0) throw std::invalid_argument("mu must be positive");
  return norm_sq(p.zeta) < std::exp(-mu * norm_sq(p.z));
}

Cplx kernel_argument(const KernelPoint& kp) {
  const Cplx zz = hermitian_dot(kp.p.z, kp.q.z);
  return std::exp(kp.mu * zz) * hermitian_dot(kp.p.zeta, kp.q.zeta);
}

Cplx kernel_eval(const KernelPoint& kp) {
  return kernel_eval(kp, anm_recurrence(kp.index));
}

Cplx kernel_eval(const KernelPoint& kp, const IntPoly& anm) {
  const Cplx t = checked_argument(kp);
  const Cplx zz = hermitian_dot(kp.p.z, kp.q.z);
  const Cplx expfac = std::exp(double(kp.index.m) * kp.mu * zz);
  const Cplx denom = std::pow(Cplx(1.0, 0.0) - t, int(kp.index.n + kp.index.m + 1));
  return prefactor(kp.index, kp.mu) * expfac * horner(anm, t) / denom;
}

Cplx kernel_series_eval(const KernelPoint& kp, unsigned num_terms) {
  if (num_terms < 1) throw std::invalid_argument("num_terms >= 1 required");
  const Cplx t = checked_argument(kp);
  const unsigned n = kp.index.n, m = kp.index.m;
  // (k+1)_m advances by the ratio (k+m+1)/(k+1) between consecutive terms.
  double poch = 1.0;
  for (unsigned i = 1; i <= m; ++i) poch *= i;
  Cplx sum(0.0, 0.0);
  Cplx tpow(1.0, 0.0);
  for (unsigned k = 0; k < num_terms; ++k) {
    sum += poch * std::pow(double(k + m), double(n)) * tpow;
    tpow *= t;
    poch *= double(k + m + 1) / double(k + 1);
  }
  const Cplx zz = hermitian_dot(kp.p.z, kp.q.z);
  return prefactor(kp.index, kp.mu) * std::exp(double(m) * kp.mu * zz) * sum;
}

Cplx kernel_series_eval_adaptive(const KernelPoint& kp) {
  const Cplx t = checked_argument(kp);
  const unsigned n = kp.index.n, m = kp.index.m;
  double poch = 1.0;
  for (unsigned i = 1; i <= m; ++i) poch *= i;
  Cplx sum(0.0, 0.0);
  Cplx tpow(1.0, 0.0);
  unsigned small_streak = 0;
  for (unsigned k = 0; k < 2000000; ++k) {
    const Cplx term = poch * std::pow(double(k + m), double(n)) * tpow;
    sum += term;
    tpow *= t;
    poch *= double(k + m + 1) / double(k + 1);
    if (std::abs(term) <= 1e-18 * std::abs(sum)) {
      if (++small_streak >= 4) break;
    } else {
      small_streak = 0;
    }
  }
  const Cplx zz = hermitian_dot(kp.p.z, kp.q.z);
  return prefactor(kp.index, kp.mu) * std::exp(double(m) * kp.mu * zz) * sum;
}

double kernel_scale(const KernelPoint& kp, const IntPoly& anm) {
  const Cplx t = checked_argument(kp);
  const Cplx zz = hermitian_dot(kp.p.z, kp.q.z);
  const double expfac = std::abs(std::exp(double(kp.index.m) * kp.mu * zz));
  const double denom =
      std::pow(std::abs(Cplx(1.0, 0.0) - t), double(kp.index.n + kp.index.m + 1));
  double max_term = 0.0;
  double tp = 1.0;
  const double at = std::abs(t);
  for (const Int& c : anm.coeffs()) {
    max_term = std::max(max_term, std::abs(c.get_d()) * tp);
    tp *= at;
  }
  return prefactor(kp.index, kp.mu) * expfac * max_term / denom;
}

KernelPoint zero_witness(const AnmIndex& idx, double mu, const Rat& root) {
  validate(idx);
  if (!(root > -1 && root < 0))
    throw std::invalid_argument("zero_witness: root must lie in (-1, 0)");
  const double r = root.get_d();
  const double s = std::sqrt((1.0 + std::abs(r)) / 2.0);
  KernelPoint kp;
  kp.index = idx;
  kp.mu = mu;
  kp.p.z.assign(idx.n, Cplx(0.0, 0.0));
  kp.q.z.assign(idx.n, Cplx(0.0, 0.0));
  kp.p.zeta.assign(idx.m, Cplx(0.0, 0.0));
  kp.q.zeta.assign(idx.m, Cplx(0.0, 0.0));
  kp.p.zeta[0] = Cplx(s, 0.0);
  kp.q.zeta[0] = Cplx(r / s, 0.0);
  return kp;
}

}  // namespace lqk
