#pragma once

#include <complex>
#include <vector>

#include "lqk/anm.hpp"
#include "lqk/interval.hpp"

namespace lqk {

using Cplx = std::complex<double>;

/// A point of C^n x C^m.
struct FBHPoint {
  std::vector<Cplx> z;
  std::vector<Cplx> zeta;
};

/// A pair of points of the Fock-Bargmann-Hartogs domain D_{n,m} with weight
/// parameter mu, ready for kernel evaluation.
struct KernelPoint {
  AnmIndex index;
  double mu = 1.0;
  FBHPoint p, q;
};

/// Hermitian inner product sum_i a_i conj(b_i).
Cplx hermitian_dot(const std::vector<Cplx>& a, const std::vector<Cplx>& b);

/// Strict membership test ||zeta||^2 < exp(-mu ||z||^2), no tolerance.
bool is_member(const AnmIndex& idx, double mu, const FBHPoint& p);

/// The argument t = e^{mu <z,z'>} <zeta,zeta'> of the kernel formula.
Cplx kernel_argument(const KernelPoint& kp);

/// Bergman kernel of D_{n,m} at (p, q):
///   K = mu^n / pi^(n+m) * e^{m mu <z,z'>} * A_{n,m}(t) / (1-t)^(n+m+1)
/// with t = e^{mu <z,z'>} <zeta,zeta'>. Both points must be members, which
/// forces |t| < 1. The overload taking the polynomial avoids rebuilding
/// A_{n,m} across evaluations.
Cplx kernel_eval(const KernelPoint& kp);
Cplx kernel_eval(const KernelPoint& kp, const IntPoly& anm);

/// Partial sum of the series expansion
///   K = mu^n / pi^(n+m) * e^{m mu <z,z'>} * sum_k (k+1)_m (k+m)^n t^k,
/// an oracle for kernel_eval, valid for |t| < 1.
Cplx kernel_series_eval(const KernelPoint& kp, unsigned num_terms);

/// Series evaluation with the term count chosen adaptively from the
/// geometric decay of the tail.
Cplx kernel_series_eval_adaptive(const KernelPoint& kp);

/// Magnitude of the evaluation through the largest Horner term:
///   mu^n / pi^(n+m) * |e^{m mu <z,z'>}| * max_i |a_i t^i| / |1-t|^(n+m+1).
/// A kernel zero is certified numerically by |K| being small against this.
double kernel_scale(const KernelPoint& kp, const IntPoly& anm);

/// Member pair whose kernel argument equals the given negative rational
/// root of A_{n,m}: z = z' = 0, zeta = (s, 0, ...), zeta' = (r/s, 0, ...)
/// with s = sqrt((1+|r|)/2), which keeps both points interior.
KernelPoint zero_witness(const AnmIndex& idx, double mu, const Rat& root);

}  // namespace lqk
