#include <random>

#include <gtest/gtest.h>

#include "bvmirror/branch_config.hpp"
#include "support/random_config.hpp"

namespace bvmirror {
namespace {

const ProjectivePoint inf = ProjectivePoint::infinity();

TEST(Validate, AcceptsEachStratumShape) {
  EXPECT_EQ(stratum(parse_configuration("0:1,1:1,2:1,3:1,5:1,inf:1")).j, 3);
  EXPECT_EQ(stratum(parse_configuration("0:1,1:1,2:1,3:1,inf:2")).j, 2);
  EXPECT_EQ(stratum(parse_configuration("0:1,1:2,7:2,inf:1")).j, 1);
}

TEST(Validate, DiagnosticsNameTheOffendingEntry) {
  const auto message = [](const std::string& text) {
    try {
      parse_configuration(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("<accepted>");
  };
  EXPECT_NE(message("0:1,1:1,2:1,3:1,5:1").find("degree must be 6"), std::string::npos);
  EXPECT_NE(message("0:1,1:1,2:1,3:1,1:2").find("repeated point 1"), std::string::npos);
  EXPECT_NE(message("0:3,1:1,2:1,inf:1").find("entry 0 (0:3)"), std::string::npos);
  EXPECT_NE(message("0:3,1:1,2:1,inf:1").find("non-minimal"), std::string::npos);
  EXPECT_NE(message("0:0,1:2,2:2,3:2").find("multiplicity must be 1 or 2"), std::string::npos);
  EXPECT_NE(message("2/4:1,1/2:1,0:2,inf:2").find("repeated point 1/2"), std::string::npos);
  EXPECT_NE(message("0:1,,1:1").find("empty entry"), std::string::npos);
  EXPECT_NE(message("0:x,1:1").find("malformed multiplicity"), std::string::npos);
}

TEST(Validate, IsOrderInsensitive) {
  EXPECT_EQ(parse_configuration("inf:1,7:2,1:2,0:1"), parse_configuration("0:1,1:2,7:2,inf:1"));
  EXPECT_EQ(to_inline(parse_configuration("inf,3,1/2,0,-1,2")), "-1:1,0:1,1/2:1,2:1,3:1,inf:1");
}

TEST(Stratum, CountsDoublePoints) {
  const auto s3 = stratum(parse_configuration("0,1,2,3,5,inf"));
  EXPECT_EQ(s3, (StratumLabel{3, 0, false}));
  EXPECT_EQ(stratum(parse_configuration("0:2,1:1,2:2,3:1")), (StratumLabel{1, 2, false}));
  EXPECT_EQ(stratum(parse_configuration("0:2,1:2,2:2")), (StratumLabel{0, 3, true}));
}

TEST(Collide, MergesIntoADoublePoint) {
  const auto c = parse_configuration("0:1,1:1,2:1,3:1,5:1,inf:1");
  const auto c2 = collide(c, 5, inf);
  EXPECT_EQ(c2, parse_configuration("0:1,1:1,2:1,3:1,5:2"));
  EXPECT_EQ(stratum(c2).j, 2);
  const auto c1 = collide(c2, 0, 1);
  EXPECT_EQ(stratum(c1).j, 1);
  EXPECT_EQ(c1, parse_configuration("0:2,2:1,3:1,5:2"));
}

TEST(Collide, RejectsIllegalCollisions) {
  const auto c2 = parse_configuration("0:1,1:1,2:1,3:1,5:2");
  EXPECT_THROW(collide(c2, 5, 0), InputError);  // would give multiplicity 3
  EXPECT_THROW(collide(c2, 0, 5), InputError);
  EXPECT_THROW(collide(c2, 0, 0), InputError);
  EXPECT_THROW(collide(c2, 0, 9), InputError);
  EXPECT_THROW(collide(c2, inf, 0), InputError);
}

TEST(Json, ParsesTheDocumentedForm) {
  const auto c = parse_configuration(R"([{"point": "inf", "mult": 1}, {"point": "7", "mult": 2},
                                         {"point": "0", "mult": 1}, {"point": 1, "mult": 2}])");
  EXPECT_EQ(c, representative(1));
  EXPECT_EQ(to_json(c).dump(), R"([{"point":"0","mult":1},{"point":"1","mult":2},{"point":"7","mult":2},{"point":"inf","mult":1}])");
  EXPECT_THROW(parse_configuration(R"([{"point": "0"}])"), InputError);
  EXPECT_THROW(parse_configuration(R"([{"point": 0.5, "mult": 1}])"), InputError);
  EXPECT_THROW(parse_configuration(R"([{"point": "0", "mult": 1},)"), InputError);
  EXPECT_THROW(parse_configuration(R"({"point": "0", "mult": 1})"), InputError);
}

TEST(BranchConfigProperty, SerializationRoundTripsAndCollisionDropsOneStratum) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testing::random_configuration(rng);
    ASSERT_EQ(parse_configuration(to_inline(c)), c);
    ASSERT_EQ(validate(parse_json_points(nlohmann::json::parse(to_json(c).dump()))), c);

    std::vector<ProjectivePoint> simple;
    for (const auto& bp : c.points()) {
      if (bp.multiplicity == 1) simple.push_back(bp.point);
    }
    for (std::size_t a = 0; a < simple.size(); ++a) {
      for (std::size_t b = 0; b < simple.size(); ++b) {
        if (a == b) continue;
        const auto d = collide(c, simple[a], simple[b]);
        ASSERT_EQ(stratum(d).j, stratum(c).j - 1);
        int degree = 0;
        for (int m : d.multiplicities()) degree += m;
        ASSERT_EQ(degree, 6);
      }
    }
  }
}

TEST(BranchConfiguration, PolynomialHasTheConfiguredZeros) {
  const auto f = representative(2).polynomial();
  EXPECT_EQ(f.formal_degree(), 6);
  EXPECT_EQ(valuation(f, inf), 2);
  EXPECT_EQ(valuation(f, 3), 1);
}

}  // namespace
}  // namespace bvmirror
