#pragma once

#include <string>
#include <vector>

#include "lqk/interval.hpp"
#include "lqk/poly.hpp"

namespace lqk {

enum class InterlaceRelation {
  strictly_alternates,
  strictly_interlaces,
  alternates,
  interlaces,
  fails,
};

const char* to_string(InterlaceRelation r);

enum class RootOwner { f_root, g_root };

struct RootWitness {
  RootInterval iv;
  RootOwner owner;
  /// Roots of f and g that coincide exactly carry the same shared id;
  /// -1 for roots belonging to one polynomial only.
  int shared_id = -1;
};

/// Classification of the root ordering of a pair (f, g):
///   g alternates f:  deg f = deg g = n,      b1 <= a1 <= b2 <= ... <= bn <= an
///   g interlaces f:  deg f = deg g + 1 = n,  a1 <= b1 <= a2 <= ... <= a_n
/// where a_i are the roots of f and b_i the roots of g, both ascending.
/// Strict variants have no equality anywhere in the chain. The witness is
/// the merged ascending list of isolating intervals.
struct InterlaceReport {
  InterlaceRelation relation = InterlaceRelation::fails;
  std::vector<RootWitness> witness;
  std::string detail;

  bool holds() const { return relation != InterlaceRelation::fails; }
  bool strict() const {
    return relation == InterlaceRelation::strictly_alternates ||
           relation == InterlaceRelation::strictly_interlaces;
  }
};

/// Decides whether g alternates or interlaces f, strictly or not, from
/// exact root isolation of both polynomials. Requires f and g nonzero,
/// square-free and real-rooted; equal roots across the pair are detected
/// exactly through their gcd. The reversed relations are obtained by
/// swapping arguments.
InterlaceReport verify_interlacing(const IntPoly& f, const IntPoly& g);

}  // namespace lqk
