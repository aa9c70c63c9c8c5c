#pragma once

#include <numeric>

#include "bvmirror/branch_config.hpp"
#include "bvmirror/error.hpp"

namespace bvmirror {

/// The cyclic triple cover v^3 = f(t) of P^1 branched over a configuration.
/// Only n = 3 is modelled; the gcd terms below are written for general n.
struct CyclicCoverCurve {
  static constexpr int kDegree = 3;
  BranchConfiguration branches;
};

/// Riemann-Hurwitz: 2g - 2 = n(-2) + sum_p (n - gcd(n, m_p)).
inline int genus(const CyclicCoverCurve& c) {
  constexpr int n = CyclicCoverCurve::kDegree;
  int ramification = 0;
  for (const auto& bp : c.branches.points()) {
    if (bp.multiplicity % n == 0) continue;
    ramification += n - std::gcd(n, bp.multiplicity);
  }
  const int twice_g_minus_2 = n * -2 + ramification;
  if (twice_g_minus_2 % 2 != 0) throw InvariantBreach("odd Riemann-Hurwitz total");
  return twice_g_minus_2 / 2 + 1;
}

/// Independent route: Euler characteristic from sheet counting. Away from the
/// branch points the cover is n sheets over P^1 minus B points; over a point of
/// multiplicity m the local monodromy is rotation by m, with gcd(n, m) orbits.
inline int monodromy_genus_oracle(const CyclicCoverCurve& c) {
  constexpr int n = CyclicCoverCurve::kDegree;
  int branch_points = 0;
  int preimages = 0;
  for (const auto& bp : c.branches.points()) {
    if (bp.multiplicity % n == 0) continue;
    ++branch_points;
    preimages += std::gcd(n, bp.multiplicity);
  }
  const int euler = n * (2 - branch_points) + preimages;
  const int g = 1 - euler / 2;
  if (euler % 2 != 0 || g < 0) throw InvariantBreach("cover has no valid genus");
  return g;
}

inline int genus(const BranchConfiguration& c) { return genus(CyclicCoverCurve{c}); }

}  // namespace bvmirror
