#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bvmirror/branch_config.hpp"
#include "bvmirror/error.hpp"
#include "bvmirror/kodaira.hpp"
#include "bvmirror/superelliptic.hpp"

namespace bvmirror {

// ---------------------------------------------------------------------------
// Fixed locus of iota: (X, Y, t) -> (X, -Y, t)

enum class FixedCurveKind { SectionInfinity, RamificationCurve, FiberComponentD6 };

inline std::string_view to_string(FixedCurveKind k) {
  switch (k) {
    case FixedCurveKind::SectionInfinity: return "SectionInfinity";
    case FixedCurveKind::RamificationCurve: return "RamificationCurve";
    case FixedCurveKind::FiberComponentD6: return "FiberComponentD6";
  }
  return "?";
}

struct FixedCurve {
  FixedCurveKind kind = FixedCurveKind::SectionInfinity;
  std::optional<ProjectivePoint> at;  // base point of the fiber, for fiber components
  int genus = 0;
};

struct FixedLocusSummary {
  std::vector<FixedCurve> curves;
  int N = 0;
  int Nprime = 0;
};

/// Components of a fiber of the given type lying in the fixed locus of iota.
/// IV: two components are swapped and iota is nontrivial on the third.
/// IV*: exactly D6 (see solve_fiber_csp).
inline int fixed_curves_from_fiber(KodairaFiberType t) {
  switch (t) {
    case KodairaFiberType::Smooth:
    case KodairaFiberType::IV: return 0;
    case KodairaFiberType::IVStar: return 1;
    default:
      throw DomainError("no fixed-locus analysis for fiber type " + std::string(to_string(t)));
  }
}

inline FixedLocusSummary involution_fixed_locus(const BranchConfiguration& c) {
  const auto model = build_model(c);
  if (const auto k3 = check_k3(model); !k3) throw DomainError("not a K3 model: " + k3.diagnostic);

  FixedLocusSummary s;
  s.curves.push_back({FixedCurveKind::SectionInfinity, std::nullopt, 0});
  s.curves.push_back({FixedCurveKind::RamificationCurve, std::nullopt, genus(c)});
  for (const auto& row : fiber_table(model).rows) {
    for (int i = 0; i < fixed_curves_from_fiber(row.type); ++i) {
      s.curves.push_back({FixedCurveKind::FiberComponentD6, row.point, 0});
    }
  }
  s.N = static_cast<int>(s.curves.size());
  s.Nprime = std::accumulate(s.curves.begin(), s.curves.end(), 0,
                             [](int acc, const FixedCurve& fc) { return acc + fc.genus; });
  return s;
}

inline nlohmann::ordered_json to_json(const FixedLocusSummary& s) {
  auto curves = nlohmann::ordered_json::array();
  for (const auto& c : s.curves) {
    nlohmann::ordered_json j{{"label", std::string(to_string(c.kind))}};
    if (c.at) j["at"] = to_string(*c.at);
    j["genus"] = c.genus;
    curves.push_back(std::move(j));
  }
  return {{"curves", curves}, {"N", s.N}, {"Nprime", s.Nprime}};
}

// ---------------------------------------------------------------------------
// Involutions of a fiber's dual graph

using NodeMap = std::vector<int>;

/// All graph automorphisms of order 1 or 2, by brute force over node permutations.
inline std::vector<NodeMap> enumerate_graph_involutions(const FiberGraph& graph) {
  std::vector<NodeMap> out;
  NodeMap perm(static_cast<std::size_t>(graph.components));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < graph.components && ok; ++v) ok = perm[static_cast<std::size_t>(perm[v])] == v;
    for (auto [a, b] : graph.edges) {
      if (!ok) break;
      ok = graph.adjacent(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// The IV* fiber: where can iota act, and where do s_inf, s_+, s_-, C land?
//
// Finite model. A "landing" is a smooth point of the fiber on component D_k
// (never a node). Points on D_k are distinguished only by whether they are
// fixed by iota and by alpha: (X, Y, t) -> (xi X, Y, t).

inline constexpr int kE6Nodes = 7;

struct Placements {
  int s_inf = 0;
  int s_plus = 0;
  int s_minus = 0;
  int curve = 0;  // the ramification curve C: X^3 + f^2 = 0

  friend auto operator<=>(const Placements&, const Placements&) = default;
};

struct FiberInvolutionAssignment {
  std::array<int, kE6Nodes> sigma{};
  std::uint8_t pointwise_fixed = 0;  // bit k set: D_k fixed pointwise
  Placements placements;
  std::array<bool, kE6Nodes> alpha_trivial{};

  bool is_pointwise_fixed(int k) const { return (pointwise_fixed >> k) & 1u; }
  std::vector<int> pointwise_fixed_nodes() const {
    std::vector<int> out;
    for (int k = 0; k < kE6Nodes; ++k) {
      if (is_pointwise_fixed(k)) out.push_back(k);
    }
    return out;
  }
};

inline std::string node_name(int k) { return "D" + std::to_string(k); }

inline nlohmann::ordered_json to_json(const FiberInvolutionAssignment& a) {
  nlohmann::ordered_json sigma = nlohmann::ordered_json::object();
  for (int k = 0; k < kE6Nodes; ++k) sigma[node_name(k)] = node_name(a.sigma[static_cast<std::size_t>(k)]);
  auto fixed = nlohmann::ordered_json::array();
  for (int k : a.pointwise_fixed_nodes()) fixed.push_back(node_name(k));
  nlohmann::ordered_json alpha = nlohmann::ordered_json::object();
  for (int k = 0; k < kE6Nodes; ++k) alpha[node_name(k)] = a.alpha_trivial[static_cast<std::size_t>(k)];
  return {{"sigma", sigma},
          {"pointwise_fixed", fixed},
          {"placements",
           {{"s_inf", node_name(a.placements.s_inf)},
            {"s_plus", node_name(a.placements.s_plus)},
            {"s_minus", node_name(a.placements.s_minus)},
            {"C", node_name(a.placements.curve)}}},
          {"alpha_trivial_on", alpha}};
}

struct CspOptions {
  // Let alpha act trivially on D3 (sensitivity mode).
  bool weaken_alpha_on_d3 = false;
};

namespace detail {

struct FiberModel {
  FiberGraph graph = component_graph(KodairaFiberType::IVStar);
  std::vector<NodeMap> involutions = enumerate_graph_involutions(graph);

  std::vector<int> neighbours(int k) const {
    std::vector<int> out;
    for (auto [a, b] : graph.edges) {
      if (a == k) out.push_back(b);
      if (b == k) out.push_back(a);
    }
    return out;
  }
};

inline const FiberModel& e6_model() {
  static const FiberModel model;
  return model;
}

// alpha permutes no components, so every node is alpha-fixed. A nontrivial
// order-3 automorphism of P^1 has two fixed points; what the nodes do not use
// is left for smooth points. Returns -1 for "every point".
inline int alpha_smooth_fixed_capacity(const FiberModel& m, const std::array<bool, kE6Nodes>& trivial, int k) {
  if (trivial[static_cast<std::size_t>(k)]) return -1;
  return std::max(0, 2 - m.graph.degree(k));
}

// R2 (structural part): pointwise-fixed components are sigma-fixed and pairwise disjoint.
inline bool pointwise_fixed_admissible(const FiberModel& m, const NodeMap& sigma, std::uint8_t mask) {
  for (int k = 0; k < kE6Nodes; ++k) {
    if (!((mask >> k) & 1u)) continue;
    if (sigma[static_cast<std::size_t>(k)] != k) return false;
    for (int n : m.neighbours(k)) {
      if ((mask >> n) & 1u) return false;
    }
  }
  return true;
}

// R2 + R7: on each sigma-stable component not fixed pointwise, iota has exactly
// two fixed points and each lies on s_inf, C, or a pointwise-fixed component.
inline bool iota_fixed_points_consistent(const FiberModel& m, const NodeMap& sigma, std::uint8_t mask,
                                         int s_inf, int curve) {
  for (int k = 0; k < kE6Nodes; ++k) {
    if (sigma[static_cast<std::size_t>(k)] != k || ((mask >> k) & 1u)) continue;
    int fixed = 0;
    for (int n : m.neighbours(k)) {
      if (sigma[static_cast<std::size_t>(n)] != n) continue;
      if (!((mask >> n) & 1u)) return false;  // isolated fixed node off the fixed curves
      ++fixed;
    }
    fixed += (s_inf == k) + (curve == k);
    if (fixed != 2) return false;
  }
  return true;
}

}  // namespace detail

/// Exhaustive search for consistent actions of iota on an IV* fiber.
///
///  R1  sigma is an involutive automorphism of the E6~ graph.
///  R2  pointwise-fixed components are sigma-fixed and pairwise disjoint; every
///      iota-fixed point of the fiber lies on s_inf, C or a pointwise-fixed component.
///  R3  s_inf meets D3 (symmetry breaking: which tail carries s_inf).
///  R4  landings avoid nodes; sections meet multiplicity-one components.
///  R5  sigma swaps the landings of s_+ and s_-, fixes those of s_inf and C; the
///      points of s_+, s_-, s_inf are distinct, so s_+- avoid pointwise-fixed components.
///  R6  s_inf, s_+, s_- land at alpha-fixed smooth points. alpha is trivial on D0,
///      nontrivial on D3..D6, free on D1 and D2; alpha commutes with iota so its
///      mode is constant on sigma-orbits.
///  R7  a sigma-stable component that is not pointwise fixed has exactly two iota-fixed points.
///  R8  s_inf and C avoid pointwise-fixed components; C meets the fiber in one point.
///
/// The result is sorted by serialized form.
inline std::vector<FiberInvolutionAssignment> solve_fiber_csp(const CspOptions& options = {}) {
  const auto& m = detail::e6_model();
  constexpr int d3 = 3;

  std::vector<std::array<bool, kE6Nodes>> alpha_modes;
  for (int bits = 0; bits < 8; ++bits) {
    const bool on_d1 = bits & 1, on_d2 = bits & 2, on_d3 = bits & 4;
    if (on_d3 && !options.weaken_alpha_on_d3) continue;
    alpha_modes.push_back({true, on_d1, on_d2, on_d3, false, false, false});
  }

  std::vector<FiberInvolutionAssignment> out;
  for (const auto& sigma : m.involutions) {  // R1
    const auto s = [&](int k) { return sigma[static_cast<std::size_t>(k)]; };
    for (int mask = 0; mask < (1 << kE6Nodes); ++mask) {
      const auto pf = static_cast<std::uint8_t>(mask);
      if (!detail::pointwise_fixed_admissible(m, sigma, pf)) continue;  // R2
      const auto is_pf = [&](int k) { return (pf >> k) & 1u; };
      for (const auto& alpha : alpha_modes) {
        bool orbit_consistent = true;  // R6
        for (int k = 0; k < kE6Nodes; ++k) orbit_consistent &= alpha[static_cast<std::size_t>(k)] == alpha[static_cast<std::size_t>(s(k))];
        if (!orbit_consistent) continue;

        const int s_inf = d3;                                          // R3
        if (s(s_inf) != s_inf || is_pf(s_inf)) continue;             // R5, R8
        for (int curve = 0; curve < kE6Nodes; ++curve) {
          if (s(curve) != curve || is_pf(curve)) continue;             // R5, R8
          if (!detail::iota_fixed_points_consistent(m, sigma, pf, s_inf, curve)) continue;  // R2, R7
          for (int plus = 0; plus < kE6Nodes; ++plus) {
            const int minus = s(plus);                                 // R5
            if (is_pf(plus) || is_pf(minus)) continue;                 // R5
            const auto mult = [&](int k) { return m.graph.multiplicities[static_cast<std::size_t>(k)]; };
            if (mult(s_inf) != 1 || mult(plus) != 1 || mult(minus) != 1) continue;  // R4

            bool alpha_ok = true;                                      // R6
            for (int k = 0; k < kE6Nodes && alpha_ok; ++k) {
              const int cap = detail::alpha_smooth_fixed_capacity(m, alpha, k);
              const int load = (s_inf == k) + (plus == k) + (minus == k);
              alpha_ok = cap < 0 || load <= cap;
            }
            if (!alpha_ok) continue;

            FiberInvolutionAssignment a;
            std::copy(sigma.begin(), sigma.end(), a.sigma.begin());
            a.pointwise_fixed = pf;
            a.placements = {s_inf, plus, minus, curve};
            a.alpha_trivial = alpha;
            out.push_back(a);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return to_json(a).dump() < to_json(b).dump(); });
  return out;
}

struct LemmaCorollaryVerdict {
  bool lemma_holds = false;      // no solution fixes D0 pointwise
  bool corollary_holds = false;  // every solution fixes D6 and swaps (D1,D4) with (D2,D5)
  int solution_count = 0;
  std::vector<int> curve_landings;  // components where C meets the fiber, over all solutions
  std::vector<std::string> notes;
};

inline LemmaCorollaryVerdict lemma_and_corollary_report(const std::vector<FiberInvolutionAssignment>& solutions) {
  constexpr std::array<int, kE6Nodes> handle_swap{0, 2, 1, 3, 5, 4, 6};
  LemmaCorollaryVerdict v;
  v.solution_count = static_cast<int>(solutions.size());
  v.lemma_holds = !solutions.empty();
  v.corollary_holds = !solutions.empty();
  std::set<int> landings;
  for (const auto& a : solutions) {
    if (a.is_pointwise_fixed(0)) v.lemma_holds = false;
    if (!a.is_pointwise_fixed(6) || a.sigma != handle_swap) v.corollary_holds = false;
    landings.insert(a.placements.curve);
  }
  v.curve_landings.assign(landings.begin(), landings.end());
  v.notes = {
      "symmetry broken: s_inf placed on D3; the two remaining legs are the handles (D1,D4) and (D2,D5)",
      "C landing is derived by the search, not asserted",
  };
  if (solutions.empty()) v.notes.push_back("empty solution set: the constraints are inconsistent");
  return v;
}

inline nlohmann::ordered_json to_json(const LemmaCorollaryVerdict& v) {
  auto landings = nlohmann::ordered_json::array();
  for (int k : v.curve_landings) landings.push_back(node_name(k));
  return {{"solution_count", v.solution_count},
          {"lemma_holds", v.lemma_holds},
          {"corollary_holds", v.corollary_holds},
          {"curve_landing", landings},
          {"notes", v.notes}};
}

}  // namespace bvmirror
