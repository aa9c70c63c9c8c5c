#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bvmirror/branch_config.hpp"
#include "bvmirror/error.hpp"
#include "bvmirror/polynomial.hpp"

namespace bvmirror {

inline constexpr int kWeierstrassDegree = 12;
inline constexpr int kK3Euler = 24;

/// Y^2 = X^3 + g(t) with g a form of degree 12 on P^1. `support` lists every
/// point where g may vanish (g's roots are rational by construction here).
struct WeierstrassModel {
  Polynomial g;
  std::vector<ProjectivePoint> support;
};

inline WeierstrassModel build_model(const BranchConfiguration& c) {
  WeierstrassModel m{poly_pow(c.polynomial(), 2), {}};
  for (const auto& bp : c.points()) m.support.push_back(bp.point);
  if (m.g.formal_degree() != kWeierstrassDegree) throw InvariantBreach("g must have formal degree 12");
  return m;
}

// Types III, III* and I_n cannot occur when c4 = 0, so they are not representable.
enum class KodairaFiberType { Smooth, II, IV, IStar0, IVStar, IIStar };

inline constexpr int euler_number(KodairaFiberType t) {
  constexpr std::array<int, 6> table{0, 2, 4, 6, 8, 10};
  return table[static_cast<std::size_t>(t)];
}

inline constexpr int component_count(KodairaFiberType t) {
  constexpr std::array<int, 6> table{1, 1, 3, 5, 7, 9};
  return table[static_cast<std::size_t>(t)];
}

inline constexpr std::string_view to_string(KodairaFiberType t) {
  constexpr std::array<std::string_view, 6> names{"Smooth", "II", "IV", "I0*", "IV*", "II*"};
  return names[static_cast<std::size_t>(t)];
}

/// For y^2 = x^3 + g the reduction type is a function of v(g) alone (c4 = 0,
/// v(Delta) = 2 v(g)); this is Tate's algorithm collapsed to a lookup.
inline KodairaFiberType classify_fiber(int v) {
  if (v < 0) throw DomainError("negative valuation " + std::to_string(v));
  if (v >= 6) throw NonMinimalFiber(v);
  constexpr std::array<KodairaFiberType, 6> by_valuation{
      KodairaFiberType::Smooth, KodairaFiberType::II,     KodairaFiberType::IV,
      KodairaFiberType::IStar0, KodairaFiberType::IVStar, KodairaFiberType::IIStar};
  return by_valuation[static_cast<std::size_t>(v)];
}

/// Twisting by the sixth power of a uniformizer lowers v(g) by 6.
inline constexpr int minimalize(int v) { return v % 6; }

struct FiberRow {
  ProjectivePoint point;
  int v_g = 0;
  KodairaFiberType type = KodairaFiberType::Smooth;
};

struct FiberTable {
  std::vector<FiberRow> rows;
  int total_euler = 0;

  int count(KodairaFiberType t) const {
    int n = 0;
    for (const auto& r : rows) n += r.type == t ? 1 : 0;
    return n;
  }
};

/// One row per point with v(g) > 0. Throws NonMinimalFiber if any v(g) >= 6.
inline FiberTable fiber_table(const WeierstrassModel& m) {
  FiberTable table;
  std::vector<ProjectivePoint> points = m.support;
  if (std::find(points.begin(), points.end(), ProjectivePoint::infinity()) == points.end()) {
    points.push_back(ProjectivePoint::infinity());
  }
  std::sort(points.begin(), points.end());
  int accounted = 0;
  for (const auto& p : points) {
    const int v = valuation(m.g, p);
    accounted += v;
    if (v == 0) continue;
    const auto type = classify_fiber(v);
    table.rows.push_back({p, v, type});
    table.total_euler += euler_number(type);
  }
  if (accounted != m.g.formal_degree()) {
    throw DomainError("g vanishes outside the declared support (" + std::to_string(accounted) + " of " +
                      std::to_string(m.g.formal_degree()) + " zeros accounted for)");
  }
  return table;
}

struct K3Check {
  bool ok = false;
  int total_euler = 0;
  std::vector<ProjectivePoint> non_minimal;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

/// Minimal everywhere and Euler number 24.
inline K3Check check_k3(const WeierstrassModel& m) {
  K3Check result;
  for (const auto& p : m.support) {
    if (valuation(m.g, p) >= 6) result.non_minimal.push_back(p);
  }
  if (!result.non_minimal.empty()) {
    result.diagnostic = "non-minimal fiber at";
    for (const auto& p : result.non_minimal) result.diagnostic += " " + to_string(p);
    return result;
  }
  try {
    result.total_euler = fiber_table(m).total_euler;
  } catch (const DomainError& e) {
    result.diagnostic = e.what();
    return result;
  }
  result.ok = result.total_euler == kK3Euler;
  if (!result.ok) result.diagnostic = "total Euler number " + std::to_string(result.total_euler) + " != 24";
  return result;
}

/// Dual graph of a fiber. For IV the three components share a single point
/// and there are no pairwise nodes; for IV* the nodes D0..D6 form the affine E6 tree.
struct FiberGraph {
  int components = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> multiplicities;
  bool common_point = false;

  int degree(int node) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == node) + (b == node);
    return d;
  }

  bool adjacent(int a, int b) const {
    for (auto [x, y] : edges) {
      if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
  }
};

inline FiberGraph component_graph(KodairaFiberType t) {
  switch (t) {
    case KodairaFiberType::IV:
      return {3, {}, {1, 1, 1}, true};
    case KodairaFiberType::IVStar:
      // D1-D4-D0-D5-D2 and D0-D6-D3
      return {7, {{1, 4}, {4, 0}, {0, 5}, {5, 2}, {0, 6}, {6, 3}}, {3, 1, 1, 1, 2, 2, 2}, false};
    default:
      throw DomainError("no component graph modelled for fiber type " + std::string(to_string(t)));
  }
}

inline nlohmann::ordered_json to_json(const FiberTable& t) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"point", to_string(r.point)},
                    {"v", r.v_g},
                    {"type", std::string(to_string(r.type))},
                    {"euler", euler_number(r.type)},
                    {"components", component_count(r.type)}});
  }
  return {{"rows", rows}, {"total_euler", t.total_euler}};
}

}  // namespace bvmirror
