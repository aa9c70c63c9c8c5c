#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "bvmirror/branch_config.hpp"
#include "bvmirror/error.hpp"
#include "bvmirror/fixed_locus.hpp"
#include "bvmirror/kodaira.hpp"
#include "bvmirror/superelliptic.hpp"

namespace bvmirror {

inline constexpr int kReportSchemaVersion = 1;

struct HodgeNumbers {
  int h11 = 0;
  int h21 = 0;

  friend bool operator==(const HodgeNumbers&, const HodgeNumbers&) = default;
};

/// h11 = 11 + 5N - N', h21 = 11 + 5N' - N for a K3 involution fixing N curves of total genus N'.
struct BorceaVoisinFormula {
  HodgeNumbers operator()(int N, int Nprime) const {
    if (N < 1) throw DomainError("N must be positive (got " + std::to_string(N) + ")");
    if (Nprime < 0) throw DomainError("N' must be non-negative (got " + std::to_string(Nprime) + ")");
    HodgeNumbers h{11 + 5 * N - Nprime, 11 + 5 * Nprime - N};
    if (h.h11 <= 0) throw DomainError("non-positive h11 = " + std::to_string(h.h11));
    return h;
  }
};

inline HodgeNumbers borcea_voisin_hodge(int N, int Nprime) { return BorceaVoisinFormula{}(N, Nprime); }

inline constexpr int euler_characteristic(const HodgeNumbers& h) { return 2 * (h.h11 - h.h21); }

inline constexpr bool mirror_check(const HodgeNumbers& a, const HodgeNumbers& b) {
  return a.h11 == b.h21 && a.h21 == b.h11;
}

/// Stratum j <-> 4 - j for j in {1, 2, 3}; j = 0 has no partner.
inline constexpr std::optional<int> mirror_partner(int j) {
  if (j >= 1 && j <= 3) return 4 - j;
  return std::nullopt;
}

struct MirrorVerdict {
  std::optional<int> partner_j;
  std::optional<HodgeNumbers> partner_hodge;
  bool holds = false;
};

struct PipelineReport {
  BranchConfiguration configuration;
  StratumLabel stratum;
  int genus = 0;
  FiberTable fibers;
  bool k3 = false;
  FixedLocusSummary fixed_locus;
  HodgeNumbers hodge;
  int euler = 0;
  MirrorVerdict mirror;
  std::optional<Rational> lambda;  // modulus of the elliptic factor; recorded, unused
};

struct AnalyzeOptions {
  std::optional<Rational> lambda;
  bool check_mirror = true;
};

inline void validate_lambda(const ProjectivePoint& lambda) {
  if (lambda.is_infinity() || lambda.value() == 0 || lambda.value() == 1) {
    throw InputError("lambda must avoid 0, 1 and inf (got " + to_string(lambda) + ")");
  }
}

template <class Formula = BorceaVoisinFormula>
PipelineReport analyze(const BranchConfiguration& c, const AnalyzeOptions& options = {},
                       const Formula& formula = {}) {
  if (options.lambda) validate_lambda(*options.lambda);
  PipelineReport r{c, stratum(c), genus(c), {}, false, {}, {}, 0, {}, options.lambda};
  const auto model = build_model(c);
  const auto k3 = check_k3(model);
  r.k3 = k3.ok;
  if (!r.k3) throw InvariantBreach("valid configuration failed the K3 check: " + k3.diagnostic);
  r.fibers = fiber_table(model);
  r.fixed_locus = involution_fixed_locus(c);
  r.hodge = formula(r.fixed_locus.N, r.fixed_locus.Nprime);
  r.euler = euler_characteristic(r.hodge);

  if (r.fixed_locus.Nprime != r.genus || r.fixed_locus.N - 2 != r.fibers.count(KodairaFiberType::IVStar)) {
    throw InvariantBreach("fixed locus disagrees with genus or fiber table");
  }

  if (options.check_mirror) {
    r.mirror.partner_j = mirror_partner(r.stratum.j);
    if (r.mirror.partner_j) {
      const auto partner = analyze(representative(*r.mirror.partner_j), {std::nullopt, false}, formula);
      r.mirror.partner_hodge = partner.hodge;
      r.mirror.holds = mirror_check(r.hodge, partner.hodge);
    }
  }
  return r;
}

inline nlohmann::ordered_json to_json(const PipelineReport& r) {
  nlohmann::ordered_json mirror{{"partner_j", nullptr}, {"partner_hodge", nullptr}, {"holds", r.mirror.holds}};
  if (r.mirror.partner_j) mirror["partner_j"] = *r.mirror.partner_j;
  if (r.mirror.partner_hodge) {
    mirror["partner_hodge"] = {{"h11", r.mirror.partner_hodge->h11}, {"h21", r.mirror.partner_hodge->h21}};
  }
  return {{"schema_version", kReportSchemaVersion},
          {"configuration", to_json(r.configuration)},
          {"stratum", {{"j", r.stratum.j}, {"doubles", r.stratum.doubles}, {"extrapolated", r.stratum.extrapolated}}},
          {"genus", r.genus},
          {"fiber_table", to_json(r.fibers)},
          {"k3", r.k3},
          {"fixed_locus", to_json(r.fixed_locus)},
          {"hodge", {{"h11", r.hodge.h11}, {"h21", r.hodge.h21}}},
          {"euler_characteristic", r.euler},
          {"mirror", mirror},
          {"lambda", r.lambda ? nlohmann::ordered_json(to_string(*r.lambda)) : nlohmann::ordered_json(nullptr)},
          {"extrapolated", r.stratum.extrapolated}};
}

struct TableRow {
  int j = 0;
  HodgeNumbers hodge;
};

/// (j, h11, h21) for j = 3, 2, 1 (and 0 if requested), computed from the representatives.
template <class Formula = BorceaVoisinFormula>
std::vector<TableRow> hodge_table(bool extrapolate = false, const Formula& formula = {}) {
  std::vector<TableRow> rows;
  for (int j = 3; j >= (extrapolate ? 0 : 1); --j) {
    rows.push_back({j, analyze(representative(j), {std::nullopt, false}, formula).hodge});
  }
  return rows;
}

}  // namespace bvmirror
