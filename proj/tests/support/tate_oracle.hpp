#pragma once

#include <algorithm>
#include <string>

namespace bvmirror::testing {

// Tate's algorithm run step by step for y^2 = x^3 + u * pi^v over a discrete
// valuation ring with residue characteristic 0 (a1 = a2 = a3 = a4 = 0, u a
// unit). Written against the textbook steps, not against a lookup table.
// Returns the Kodaira symbol, "Smooth" for good reduction, or "non-minimal".
inline std::string tate_type_for_pure_sextic_twist(int v, long long u = 1) {
  // a_i as (valuation, residue of the unit part); a zero coefficient has no valuation.
  constexpr int kZero = 1 << 20;
  const int v6 = v;
  const int v4 = kZero, v3 = kZero, v2 = kZero, v1 = kZero;

  // Step 1: Delta = -16 (4 a4^3 + 27 a6^2), so v(Delta) = 2 v(a6) when a4 = 0.
  const int v_delta = 2 * v6;
  if (v_delta == 0) return "Smooth";

  // Step 2: the singular point of the reduction is (0, 0) already (pi | a3, a4, a6).
  // b2 = a1^2 + 4 a2 vanishes identically, so pi | b2: additive reduction.
  const int v_b2 = std::min(2 * v1, v2);
  if (v_b2 == 0) return "I_n";

  // Step 3.
  if (v6 < 2) return "II";

  // Step 4: b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2 = -a4^2.
  const int v_b8 = 2 * v4;
  if (v_b8 < 3) return "III";

  // Step 5: b6 = a3^2 + 4 a6.
  const int v_b6 = std::min(2 * v3, v6);
  if (v_b6 < 3) return "IV";

  // Step 6: pi | a1, a2; pi^2 | a3, a4; pi^3 | a6 hold. P(T) = T^3 + a2,1 T^2 + a4,2 T + a6,3.
  // Residues: only the constant term can survive.
  const long long c = (v6 == 3) ? u : 0;
  const long long p_disc = -27 * c * c;  // discriminant of T^3 + c
  if (p_disc != 0) return "I0*";

  // Step 7 would need a double root; T^3 + 0 has a triple root at T = 0.
  // Step 8: Y^2 + a3,2 Y - a6,4.
  const long long d = (v6 == 4) ? u : 0;
  const long long q_disc = 4 * d;  // discriminant of Y^2 - d
  if (q_disc != 0) return "IV*";

  // Step 9: double root at Y = 0; test pi^4 | a4.
  if (v4 < 4) return "III*";

  // Step 10.
  if (v6 < 6) return "II*";

  return "non-minimal";
}

}  // namespace bvmirror::testing
