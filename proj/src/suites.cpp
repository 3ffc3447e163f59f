#include "lqk/suites.hpp"

#include <mpfr.h>

#include <sstream>

#include "lqk/combinatorics.hpp"
#include "lqk/interlace.hpp"

namespace lqk {

std::vector<const CheckResult*> SuiteReport::failures() const {
  std::vector<const CheckResult*> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(&c);
  return out;
}

namespace {

std::string first_coeff_diff(const IntPoly& a, const IntPoly& b) {
  const int d = std::max(a.degree(), b.degree());
  for (int i = 0; i <= d; ++i) {
    if (a.coeff(i) != b.coeff(i)) {
      std::ostringstream os;
      os << "coefficient of t^" << i << ": " << a.coeff(i).get_str() << " vs "
         << b.coeff(i).get_str();
      return os.str();
    }
  }
  return "";
}

std::string first_seq_diff(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) {
      std::ostringstream os;
      os << "Taylor coefficient k=" << i << ": " << a[i].get_str() << " vs "
         << b[i].get_str();
      return os.str();
    }
  }
  return a.size() == b.size() ? "" : "length mismatch";
}

// Certified order of two distinct isolated roots.
int compare_roots(const IntPoly& pa, RootInterval a, const IntPoly& pb, RootInterval b) {
  for (int round = 0; round < 512; ++round) {
    if (a.hi < b.lo) return -1;
    if (b.hi < a.lo) return 1;
    if (a.is_exact() && b.is_exact()) return a.lo < b.lo ? -1 : (a.lo == b.lo ? 0 : 1);
    if (!a.is_exact()) a = refine_root(pa, a, a.width() / 2);
    if (!b.is_exact()) b = refine_root(pb, b, b.width() / 2);
  }
  throw std::runtime_error("compare_roots: refinement budget exhausted");
}

// Certified "the rightmost root is negative".
bool rightmost_negative(const IntPoly& p, RootInterval iv) {
  if (p.sign_at(Rat(0)) == 0) return false;
  for (;;) {
    if (iv.is_exact()) return iv.lo < 0;
    if (iv.hi < 0) return true;
    if (iv.lo > 0) return false;
    iv = refine_root(p, iv, iv.width() / 2);
  }
}

}  // namespace

SuiteReport theorem_suite(unsigned n_max, unsigned m_max, const AnmMutator& mutate) {
  if (n_max < 1 || m_max < 1)
    throw std::invalid_argument("theorem_suite: bounds >= 1 required");
  SuiteReport report;
  auto add = [&report](const char* name, unsigned n, unsigned m, bool pass,
                       std::string witness = "") {
    if (!pass) ++report.violations;
    report.checks.push_back({name, n, m, pass, std::move(witness)});
  };
  auto build = [&mutate](AnmIndex idx) {
    IntPoly a = anm_recurrence(idx);
    if (mutate) a = mutate(idx, std::move(a));
    return a;
  };

  // The interlacing and monotonicity checks look one step past the grid.
  std::vector<std::vector<IntPoly>> grid(n_max + 2);
  for (unsigned n = 1; n <= n_max + 1; ++n) {
    grid[n].resize(m_max + 2);
    for (unsigned m = 1; m <= m_max + 1; ++m) grid[n][m] = build({n, m});
  }

  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned m = 1; m <= m_max; ++m) {
      const IntPoly& a = grid[n][m];

      const IntPoly closed = anm_closed({n, m});
      add("construction_equality_closed", n, m, a == closed, first_coeff_diff(a, closed));

      const unsigned terms = n + m + 5;
      const auto taylor = taylor_over_pole(a, n + m + 1, terms);
      const auto oracle = anm_series_oracle({n, m}, terms);
      add("construction_equality_series", n, m, taylor == oracle,
          first_seq_diff(taylor, oracle));

      bool positive = !a.is_zero();
      for (const Int& c : a.coeffs()) positive = positive && c > 0;
      add("coefficient_positivity", n, m, positive);

      add("degree", n, m, a.degree() == static_cast<int>(n));

      const bool sqfree = !a.is_zero() && is_square_free(a);
      add("square_free", n, m, sqfree);
      if (!sqfree || !positive || a.degree() != static_cast<int>(n)) continue;

      SturmChain chain(a);
      const bool real_rooted = chain.count_all() == a.degree();
      add("real_rooted", n, m, real_rooted);
      if (!real_rooted) continue;

      add("roots_negative", n, m, rightmost_negative(a, rightmost_root(chain)));

      const auto [band_lo, band_hi] = annulus_bounds(a);
      bool annulus = true;
      std::string annulus_witness;
      for (const RootInterval& iv : isolate_real_roots(a)) {
        if (!root_magnitude_in_band(a, iv, band_lo, band_hi)) {
          annulus = false;
          std::ostringstream os;
          os << "root in [" << iv.lo << ", " << iv.hi << "] escapes ["
             << band_lo << ", " << band_hi << "]";
          annulus_witness = os.str();
          break;
        }
      }
      add("annulus_containment", n, m, annulus, std::move(annulus_witness));

      const Rat at_one = a.eval(Rat(1));
      add("value_at_one", n, m, at_one == Rat(factorial(n + m)));

      add("cross_recurrence", n, m,
          grid[n + 1][m] ==
              IntPoly{0, 1} * grid[n][m + 1] + Int(m) * (IntPoly{1, -1} * grid[n][m]));

      const auto alt = verify_interlacing(a, grid[n][m + 1]);
      add("strict_alternation_in_m", n, m,
          alt.relation == InterlaceRelation::strictly_alternates,
          std::string("relation: ") + to_string(alt.relation) +
              (alt.detail.empty() ? "" : ", " + alt.detail));

      const auto intl = verify_interlacing(grid[n + 1][m], a);
      add("strict_interlacing_in_n", n, m,
          intl.relation == InterlaceRelation::strictly_interlaces,
          std::string("relation: ") + to_string(intl.relation) +
              (intl.detail.empty() ? "" : ", " + intl.detail));

      const RootInterval r = refine_root(a, rightmost_root(chain), Rat(1, 1024));
      const IntPoly& up_m = grid[n][m + 1];
      const RootInterval r_up_m =
          refine_root(up_m, rightmost_root(SturmChain(up_m)), Rat(1, 1024));
      add("largest_root_decreases_in_m", n, m, compare_roots(up_m, r_up_m, a, r) < 0);

      const IntPoly& up_n = grid[n + 1][m];
      const RootInterval r_up_n =
          refine_root(up_n, rightmost_root(SturmChain(up_n)), Rat(1, 1024));
      add("largest_root_increases_in_n", n, m, compare_roots(a, r, up_n, r_up_n) < 0);
    }
  }

  unsigned prev_m0 = 0;
  for (unsigned n = 1; n <= n_max; ++n) {
    const unsigned m0 = m0_value(n);
    add("m0_nondecreasing", n, 0, n == 1 || m0 >= prev_m0,
        n == 1 ? "" : "m0 dropped from " + std::to_string(prev_m0) + " to " +
                          std::to_string(m0));
    prev_m0 = m0;
  }

  return report;
}

NearestInt certified_nearest_int_xlnx(unsigned k) {
  if (k <= 1) return {0, false};  // 1*ln(1) = 0 exactly
  const Rat half(1, 2);
  for (mpfr_prec_t prec = 64; prec <= (1 << 20); prec *= 2) {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_set_ui(lo, k, MPFR_RNDD);
    mpfr_log(lo, lo, MPFR_RNDD);
    mpfr_mul_ui(lo, lo, k, MPFR_RNDD);
    mpfr_set_ui(hi, k, MPFR_RNDU);
    mpfr_log(hi, hi, MPFR_RNDU);
    mpfr_mul_ui(hi, hi, k, MPFR_RNDU);
    Rat qlo, qhi;
    mpfr_get_q(qlo.get_mpq_t(), lo);
    mpfr_get_q(qhi.get_mpq_t(), hi);
    mpfr_clear(lo);
    mpfr_clear(hi);

    Rat shifted = qlo + half;
    Int candidate;
    mpz_fdiv_q(candidate.get_mpz_t(), shifted.get_num().get_mpz_t(),
               shifted.get_den().get_mpz_t());
    const Rat c(candidate);
    // Certified once the enclosure excludes both half-integer tie points.
    if (qlo > c - half && qhi < c + half) return {candidate.get_si(), false};
  }
  return {0, true};
}

ConjectureReport conjecture_probe(unsigned n_max, unsigned m_cap_override) {
  if (n_max < 1) throw std::invalid_argument("conjecture_probe: n_max >= 1 required");
  ConjectureReport rep;
  unsigned prev_m0 = 0;
  for (unsigned n = 1; n <= n_max; ++n) {
    ConjectureRow row;
    row.n = n;
    row.m0 = m0_value(n, m_cap_override);
    row.f = certified_nearest_int_xlnx(n + 1);
    row.diff = static_cast<long>(row.m0) - row.f.value;
    row.strict_increase = n == 1 || row.m0 > prev_m0;
    row.r_n1 = largest_root({n, 1});
    row.r_n2 = largest_root({n, 2});
    if (!row.f.tie) {
      if (row.diff > 0) rep.m0_le_f = false;
      if ((row.diff == 0) != (n <= 10)) rep.equality_iff_n_le_10 = false;
    }
    prev_m0 = row.m0;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace lqk
