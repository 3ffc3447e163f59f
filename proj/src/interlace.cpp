#include "lqk/interlace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lqk/sturm.hpp"

namespace lqk {

const char* to_string(InterlaceRelation r) {
  switch (r) {
    case InterlaceRelation::strictly_alternates: return "strictly_alternates";
    case InterlaceRelation::strictly_interlaces: return "strictly_interlaces";
    case InterlaceRelation::alternates: return "alternates";
    case InterlaceRelation::interlaces: return "interlaces";
    case InterlaceRelation::fails: return "fails";
  }
  return "?";
}

namespace {

constexpr int kSeparationBudget = 512;

struct TaggedRoot {
  RootInterval iv;
  int shared_id;  // index into the common-root list, or -1
};

// Roots of p as (common roots of h) + (roots of p/h), h = gcd(f, g).
// The shared intervals are refined in place so both owners stay in sync.
struct RootsOfPair {
  std::vector<RootInterval> common;  // roots of h
  std::vector<RootInterval> f_only, g_only;
};

void refine_until_separated(const IntPoly& h, const IntPoly& f1, const IntPoly& g1,
                            RootsOfPair& r) {
  struct Ref {
    RootInterval* iv;
    const IntPoly* p;
  };
  std::vector<Ref> all;
  for (auto& iv : r.common) all.push_back({&iv, &h});
  for (auto& iv : r.f_only) all.push_back({&iv, &f1});
  for (auto& iv : r.g_only) all.push_back({&iv, &g1});
  for (int round = 0; round < kSeparationBudget; ++round) {
    std::sort(all.begin(), all.end(), [](const Ref& a, const Ref& b) {
      return a.iv->lo < b.iv->lo || (a.iv->lo == b.iv->lo && a.iv->hi < b.iv->hi);
    });
    bool overlap = false;
    for (size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i].iv->hi >= all[i + 1].iv->lo) {
        overlap = true;
        for (size_t j : {i, i + 1}) {
          if (!all[j].iv->is_exact())
            *all[j].iv = refine_root(*all[j].p, *all[j].iv, all[j].iv->width() / 2);
        }
      }
    }
    if (!overlap) return;
  }
  throw std::runtime_error(
      "verify_interlacing: refinement budget exhausted without separation "
      "(unseparated roots would mean a common factor; check gcd(f, g))");
}

std::vector<RootInterval> isolate_checked(const IntPoly& p, const char* name) {
  auto roots = isolate_real_roots(p);
  if (static_cast<int>(roots.size()) != std::max(p.degree(), 0)) {
    std::ostringstream os;
    os << "verify_interlacing: " << name << " is not real-rooted ("
       << roots.size() << " real roots, degree " << p.degree() << ")";
    throw std::invalid_argument(os.str());
  }
  return roots;
}

// Strictly-disjoint interval order; equality only through a shared id.
bool less_than(const TaggedRoot& x, const TaggedRoot& y) { return x.iv.hi < y.iv.lo; }
bool equal(const TaggedRoot& x, const TaggedRoot& y) {
  return x.shared_id >= 0 && x.shared_id == y.shared_id;
}

std::string chain_term(char who, size_t pos) {
  std::ostringstream os;
  os << who << pos;
  return os.str();
}

}  // namespace

InterlaceReport verify_interlacing(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("verify_interlacing: zero polynomial");
  if (!is_square_free(f) || !is_square_free(g))
    throw std::invalid_argument("verify_interlacing: inputs must be square-free");

  const IntPoly h = gcd(f, g);
  IntPoly f1 = f, g1 = g;
  if (h.degree() >= 1) {
    if (!try_divide(f, h, f1) || !try_divide(g, h, g1))
      throw std::logic_error("verify_interlacing: gcd does not divide exactly");
  }

  RootsOfPair roots;
  if (h.degree() >= 1) roots.common = isolate_checked(h, "gcd(f, g)");
  roots.f_only = isolate_checked(f1, "f");
  roots.g_only = isolate_checked(g1, "g");
  refine_until_separated(h, f1, g1, roots);

  auto merge_sorted = [&roots](const std::vector<RootInterval>& own) {
    std::vector<TaggedRoot> out;
    for (size_t i = 0; i < roots.common.size(); ++i)
      out.push_back({roots.common[i], static_cast<int>(i)});
    for (const auto& iv : own) out.push_back({iv, -1});
    std::sort(out.begin(), out.end(),
              [](const TaggedRoot& a, const TaggedRoot& b) { return a.iv.lo < b.iv.lo; });
    return out;
  };
  const std::vector<TaggedRoot> a = merge_sorted(roots.f_only);  // roots of f
  const std::vector<TaggedRoot> b = merge_sorted(roots.g_only);  // roots of g

  InterlaceReport report;
  const bool alternation = f.degree() == g.degree();
  const bool interlacing = f.degree() == g.degree() + 1;

  // Merged ascending witness; at an exact tie the pattern order decides
  // which owner is listed first.
  {
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      const bool take_a =
          j == b.size() ||
          (i < a.size() && (less_than(a[i], b[j]) ||
                            (equal(a[i], b[j]) && interlacing)));
      if (take_a)
        report.witness.push_back({a[i].iv, RootOwner::f_root, a[i].shared_id}), ++i;
      else
        report.witness.push_back({b[j].iv, RootOwner::g_root, b[j].shared_id}), ++j;
    }
  }

  if (!alternation && !interlacing) {
    std::ostringstream os;
    os << "degree condition fails: deg f = " << f.degree()
       << ", deg g = " << g.degree();
    report.detail = os.str();
    return report;
  }

  // Walk the required chain; the relation degrades from strict to non-strict
  // at an exact tie and fails on a strict inversion.
  bool strict = true;
  std::string violated;
  auto require_le = [&](const TaggedRoot& x, const TaggedRoot& y, char wx, size_t px,
                        char wy, size_t py) {
    if (less_than(x, y)) return true;
    if (equal(x, y)) {
      strict = false;
      return true;
    }
    violated = chain_term(wx, px) + " <= " + chain_term(wy, py) + " violated";
    return false;
  };

  bool ok = true;
  if (alternation) {
    // b1 <= a1 <= b2 <= ... <= bn <= an
    for (size_t i = 0; ok && i < a.size(); ++i) {
      ok = require_le(b[i], a[i], 'b', i + 1, 'a', i + 1);
      if (ok && i + 1 < b.size()) ok = require_le(a[i], b[i + 1], 'a', i + 1, 'b', i + 2);
    }
    if (ok)
      report.relation = strict ? InterlaceRelation::strictly_alternates
                               : InterlaceRelation::alternates;
  } else {
    // a1 <= b1 <= a2 <= ... <= b_{n-1} <= a_n
    for (size_t i = 0; ok && i < b.size(); ++i) {
      ok = require_le(a[i], b[i], 'a', i + 1, 'b', i + 1);
      ok = ok && require_le(b[i], a[i + 1], 'b', i + 1, 'a', i + 2);
    }
    if (ok)
      report.relation = strict ? InterlaceRelation::strictly_interlaces
                               : InterlaceRelation::interlaces;
  }
  if (!ok) report.detail = violated;
  return report;
}

}  // namespace lqk
