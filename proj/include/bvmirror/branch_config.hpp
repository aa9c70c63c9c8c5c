#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bvmirror/error.hpp"
#include "bvmirror/polynomial.hpp"
#include "bvmirror/rational.hpp"

namespace bvmirror {

inline constexpr int kBranchDegree = 6;

struct BranchPoint {
  ProjectivePoint point;
  int multiplicity = 1;

  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

/// Degree-6 branch divisor on P^1 with pairwise distinct points of multiplicity 1 or 2.
/// Only `validate` constructs one; points are kept in canonical order (finite ascending, then inf).
class BranchConfiguration {
 public:
  const std::vector<BranchPoint>& points() const noexcept { return points_; }

  int multiplicity_at(const ProjectivePoint& p) const {
    for (const auto& bp : points_) {
      if (bp.point == p) return bp.multiplicity;
    }
    return 0;
  }

  bool contains(const ProjectivePoint& p) const { return multiplicity_at(p) > 0; }

  std::vector<int> multiplicities() const {
    std::vector<int> out;
    for (const auto& bp : points_) out.push_back(bp.multiplicity);
    return out;
  }

  /// The sextic form f(t), monic in the affine chart.
  Polynomial polynomial() const {
    std::vector<Root> roots;
    for (const auto& bp : points_) roots.push_back({bp.point, bp.multiplicity});
    return poly_from_roots(roots, kBranchDegree);
  }

  friend bool operator==(const BranchConfiguration&, const BranchConfiguration&) = default;

 private:
  friend BranchConfiguration validate(std::vector<BranchPoint> raw);
  std::vector<BranchPoint> points_;
};

inline BranchConfiguration validate(std::vector<BranchPoint> raw) {
  int degree = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& e = raw[i];
    const std::string label = "entry " + std::to_string(i) + " (" + to_string(e.point) + ":" +
                              std::to_string(e.multiplicity) + ")";
    if (e.multiplicity < 1 || e.multiplicity > 2) {
      throw InputError(label + ": multiplicity must be 1 or 2" +
                       (e.multiplicity >= 3 ? " (multiplicity >= 3 gives a non-minimal fiber)" : ""));
    }
    for (std::size_t k = 0; k < i; ++k) {
      if (raw[k].point == e.point) {
        throw InputError(label + ": repeated point " + to_string(e.point) + " (also entry " +
                         std::to_string(k) + ")");
      }
    }
    degree += e.multiplicity;
  }
  if (degree != kBranchDegree) {
    throw InputError("degree must be 6 (multiplicities sum to " + std::to_string(degree) + ")");
  }
  std::sort(raw.begin(), raw.end(),
            [](const BranchPoint& a, const BranchPoint& b) { return a.point < b.point; });
  BranchConfiguration c;
  c.points_ = std::move(raw);
  return c;
}

struct StratumLabel {
  int j = 3;
  int doubles = 0;
  bool extrapolated = false;

  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

inline StratumLabel stratum(const BranchConfiguration& c) {
  const auto m = c.multiplicities();
  const int doubles = static_cast<int>(std::count(m.begin(), m.end(), 2));
  return {3 - doubles, doubles, doubles == 3};
}

/// Merges simple point `b` into simple point `a`, which becomes a double point.
inline BranchConfiguration collide(const BranchConfiguration& c, const ProjectivePoint& a,
                                   const ProjectivePoint& b) {
  if (a == b) throw InputError("cannot collide " + to_string(a) + " with itself");
  for (const auto* p : {&a, &b}) {
    const int m = c.multiplicity_at(*p);
    if (m == 0) throw InputError("point " + to_string(*p) + " is not in the configuration");
    if (m != 1) {
      throw InputError("point " + to_string(*p) + " has multiplicity " + std::to_string(m) +
                       "; collision would create multiplicity >= 3");
    }
  }
  std::vector<BranchPoint> next;
  for (const auto& bp : c.points()) {
    if (bp.point == b) continue;
    next.push_back(bp.point == a ? BranchPoint{a, 2} : bp);
  }
  return validate(std::move(next));
}

// ---------------------------------------------------------------------------
// Text and JSON forms

/// Compact form "0:1,1:2,7:2,inf:1". A bare point means multiplicity 1.
inline std::vector<BranchPoint> parse_inline(std::string_view text) {
  std::vector<BranchPoint> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = detail::trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (item.empty()) throw InputError("empty entry in configuration '" + std::string(text) + "'");
    const auto colon = item.find(':');
    BranchPoint bp{parse_point(item.substr(0, colon)), 1};
    if (colon != std::string::npos) {
      const std::string m = detail::trim(item.substr(colon + 1));
      if (!detail::is_integer_literal(m, false) || m.size() > 3) {
        throw InputError("malformed multiplicity in entry '" + item + "'");
      }
      bp.multiplicity = std::stoi(m);
    }
    out.push_back(std::move(bp));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string to_inline(const BranchConfiguration& c) {
  std::string out;
  for (const auto& bp : c.points()) {
    if (!out.empty()) out += ',';
    out += to_string(bp.point) + ":" + std::to_string(bp.multiplicity);
  }
  return out;
}

/// JSON form: array of {"point": "n/d" | "inf", "mult": 1 | 2}. Integer points are also accepted.
inline std::vector<BranchPoint> parse_json_points(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("configuration JSON must be an array");
  std::vector<BranchPoint> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("point") || !item.contains("mult")) {
      throw InputError("configuration entry must be an object with \"point\" and \"mult\": " + item.dump());
    }
    const auto& p = item.at("point");
    const auto& m = item.at("mult");
    BranchPoint bp;
    if (p.is_string()) {
      bp.point = parse_point(p.get<std::string>());
    } else if (p.is_number_integer()) {
      bp.point = ProjectivePoint(Rational(p.get<long long>()));
    } else {
      throw InputError("\"point\" must be a string or integer: " + item.dump());
    }
    if (!m.is_number_integer()) throw InputError("\"mult\" must be an integer: " + item.dump());
    bp.multiplicity = m.get<int>();
    out.push_back(std::move(bp));
  }
  return out;
}

inline nlohmann::ordered_json to_json(const BranchConfiguration& c) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& bp : c.points()) {
    arr.push_back({{"point", to_string(bp.point)}, {"mult", bp.multiplicity}});
  }
  return arr;
}

/// Accepts either the JSON array form or the compact inline form.
inline BranchConfiguration parse_configuration(std::string_view text) {
  const std::string s = detail::trim(text);
  if (!s.empty() && s.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed configuration JSON: ") + e.what());
    }
    return validate(parse_json_points(j));
  }
  return validate(parse_inline(s));
}

/// Canonical sample configuration for each stratum j in {0,1,2,3}.
inline BranchConfiguration representative(int j) {
  switch (j) {
    case 3: return parse_configuration("0:1,1:1,2:1,3:1,5:1,inf:1");
    case 2: return parse_configuration("0:1,1:1,2:1,3:1,inf:2");
    case 1: return parse_configuration("0:1,1:2,7:2,inf:1");
    case 0: return parse_configuration("0:2,1:2,2:2");
    default: throw DomainError("no stratum j=" + std::to_string(j));
  }
}

}  // namespace bvmirror
