#include <random>

#include <gtest/gtest.h>

#include "bvmirror/kodaira.hpp"
#include "support/random_config.hpp"
#include "support/tate_oracle.hpp"

namespace bvmirror {
namespace {

const ProjectivePoint inf = ProjectivePoint::infinity();

TEST(TateOracle, FrozenTypesForPureSexticTwists) {
  // Frozen from the step-by-step oracle; the units 1 and 5 must not matter.
  const char* expected[] = {"Smooth", "II", "IV", "I0*", "IV*", "II*", "non-minimal"};
  for (int v = 0; v <= 6; ++v) {
    EXPECT_EQ(testing::tate_type_for_pure_sextic_twist(v), expected[v]) << v;
    EXPECT_EQ(testing::tate_type_for_pure_sextic_twist(v, 5), expected[v]) << v;
  }
}

TEST(ClassifyFiber, MatchesTateOracle) {
  for (int v = 0; v < 6; ++v) {
    EXPECT_EQ(to_string(classify_fiber(v)), testing::tate_type_for_pure_sextic_twist(v)) << v;
  }
  EXPECT_EQ(classify_fiber(2), KodairaFiberType::IV);
  EXPECT_EQ(classify_fiber(4), KodairaFiberType::IVStar);
  EXPECT_EQ(classify_fiber(0), KodairaFiberType::Smooth);
}

TEST(ClassifyFiber, NonMinimalValuationsAreRejected) {
  EXPECT_THROW(classify_fiber(6), NonMinimalFiber);
  try {
    classify_fiber(7);
  } catch (const NonMinimalFiber& e) {
    EXPECT_EQ(e.valuation(), 7);
  }
  EXPECT_EQ(classify_fiber(minimalize(8)), KodairaFiberType::IV);
  EXPECT_THROW(classify_fiber(-1), DomainError);
}

TEST(KodairaTable, GoldenEulerNumbersAndComponents) {
  struct Golden {
    KodairaFiberType type;
    int euler;
    int components;
  };
  for (const auto& g : {Golden{KodairaFiberType::Smooth, 0, 1}, Golden{KodairaFiberType::II, 2, 1},
                        Golden{KodairaFiberType::IV, 4, 3}, Golden{KodairaFiberType::IStar0, 6, 5},
                        Golden{KodairaFiberType::IVStar, 8, 7}, Golden{KodairaFiberType::IIStar, 10, 9}}) {
    EXPECT_EQ(euler_number(g.type), g.euler);
    EXPECT_EQ(component_count(g.type), g.components);
  }
  // Additive fibers: e = v(Delta) = 2 v(g).
  for (int v = 1; v < 6; ++v) EXPECT_EQ(euler_number(classify_fiber(v)), 2 * v);
}

TEST(BuildModel, SquaresTheConfigurationPolynomial) {
  const auto m3 = build_model(representative(3));
  EXPECT_EQ(m3.g.formal_degree(), 12);
  EXPECT_EQ(valuation(m3.g, inf), 2);
  EXPECT_EQ(m3.g, poly_pow(poly_from_roots({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {5, 1}, {inf, 1}}, 6), 2));

  const auto m1 = build_model(representative(1));
  EXPECT_EQ(valuation(m1.g, 0), 2);
  EXPECT_EQ(valuation(m1.g, 1), 4);
  EXPECT_EQ(valuation(m1.g, 7), 4);
  EXPECT_EQ(valuation(m1.g, inf), 2);

  const auto m0 = build_model(representative(0));
  for (int p : {0, 1, 2}) EXPECT_EQ(valuation(m0.g, p), 4);
  EXPECT_EQ(valuation(m0.g, inf), 0);
}

TEST(FiberTable, PerStratum) {
  const auto t3 = fiber_table(build_model(representative(3)));
  EXPECT_EQ(t3.rows.size(), 6u);
  EXPECT_EQ(t3.count(KodairaFiberType::IV), 6);
  EXPECT_EQ(t3.total_euler, 24);
  EXPECT_EQ(t3.rows.back().point, inf);

  const auto t2 = fiber_table(build_model(representative(2)));
  EXPECT_EQ(t2.count(KodairaFiberType::IV), 4);
  EXPECT_EQ(t2.count(KodairaFiberType::IVStar), 1);
  EXPECT_EQ(t2.total_euler, 24);

  const auto t1 = fiber_table(build_model(representative(1)));
  EXPECT_EQ(t1.count(KodairaFiberType::IV), 2);
  EXPECT_EQ(t1.count(KodairaFiberType::IVStar), 2);
  EXPECT_EQ(t1.total_euler, 24);

  const auto t0 = fiber_table(build_model(representative(0)));
  EXPECT_EQ(t0.count(KodairaFiberType::IVStar), 3);
  EXPECT_EQ(t0.total_euler, 24);
}

TEST(FiberTable, JsonRows) {
  const auto j = to_json(fiber_table(build_model(representative(1))));
  EXPECT_EQ(j["rows"][1].dump(), R"({"point":"1","v":4,"type":"IV*","euler":8,"components":7})");
  EXPECT_EQ(j["total_euler"], 24);
}

TEST(CheckK3, MultiplicityThreeIsNonMinimal) {
  // f = t^3 (t - 1)(t - 2) with a simple point at infinity; v_0(f^2) = 6.
  const auto f = poly_from_roots({{0, 3}, {1, 1}, {2, 1}, {inf, 1}}, 6);
  const WeierstrassModel m{poly_pow(f, 2), {0, 1, 2, inf}};
  const auto result = check_k3(m);
  EXPECT_FALSE(result);
  ASSERT_EQ(result.non_minimal.size(), 1u);
  EXPECT_EQ(result.non_minimal.front(), ProjectivePoint(0));
  EXPECT_NE(result.diagnostic.find("non-minimal fiber at 0"), std::string::npos);
  EXPECT_THROW(fiber_table(m), NonMinimalFiber);
}

TEST(CheckK3, RejectsUndeclaredZeros) {
  const auto f = poly_from_roots({{0, 2}, {1, 2}, {2, 2}}, 6);
  const WeierstrassModel m{poly_pow(f, 2), {0, 1}};
  EXPECT_THROW(fiber_table(m), DomainError);
  EXPECT_FALSE(check_k3(m));
}

TEST(CheckK3Property, RandomValidConfigurationsAreK3) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testing::random_configuration(rng);
    const auto m = build_model(c);
    const auto result = check_k3(m);
    ASSERT_TRUE(result) << to_inline(c) << ": " << result.diagnostic;
    ASSERT_EQ(result.total_euler, 24);
    const auto table = fiber_table(m);
    int v_delta = 0;
    for (const auto& row : table.rows) {
      v_delta += 2 * row.v_g;
      ASSERT_EQ(row.type, classify_fiber(2 * c.multiplicity_at(row.point)));
    }
    ASSERT_EQ(v_delta, 24);
    ASSERT_EQ(table.count(KodairaFiberType::IVStar), 3 - stratum(c).j);
  }
}

TEST(ComponentGraph, IVIsThreeLinesThroughAPoint) {
  const auto g = component_graph(KodairaFiberType::IV);
  EXPECT_EQ(g.components, 3);
  EXPECT_TRUE(g.common_point);
  EXPECT_TRUE(g.edges.empty());
}

TEST(ComponentGraph, IVStarIsAffineE6) {
  const auto g = component_graph(KodairaFiberType::IVStar);
  EXPECT_EQ(g.components, component_count(KodairaFiberType::IVStar));
  const int degrees[] = {3, 1, 1, 1, 2, 2, 2};
  for (int k = 0; k < 7; ++k) EXPECT_EQ(g.degree(k), degrees[k]) << "D" << k;
  EXPECT_TRUE(g.adjacent(1, 4));
  EXPECT_TRUE(g.adjacent(6, 3));
  EXPECT_FALSE(g.adjacent(0, 3));
  // fiber multiplicities 3, 1, 1, 1, 2, 2, 2
  int weighted = 0;
  for (int m : g.multiplicities) weighted += m;
  EXPECT_EQ(weighted, 12);
  EXPECT_THROW(component_graph(KodairaFiberType::Smooth), DomainError);
  EXPECT_THROW(component_graph(KodairaFiberType::II), DomainError);
}

}  // namespace
}  // namespace bvmirror
