#include <gtest/gtest.h>

#include <cmath>

#include "grouplab/bounds.hpp"
#include "grouplab/group_context.hpp"
#include "grouplab/group_spec.hpp"

using namespace grouplab;

namespace {

const CheckReport &find(const std::vector<CheckReport> &rs, const std::string &name) {
  for (const auto &r : rs)
    if (r.check == name)
      return r;
  throw std::runtime_error("missing report " + name);
}

bool all_ok(const std::vector<CheckReport> &rs) {
  for (const auto &r : rs)
    if (r.status == Status::Fail || r.status == Status::Marginal)
      return false;
  return true;
}

} // namespace

TEST(Bounds, Constants) {
  // Oracle: long double evaluation of the same closed forms.
  const long double a = std::log(12.0L) / std::log(20160.0L);
  const long double b = std::log(24.0L) / std::log(60.0L) / 3.0L;
  const long double e0 = 0.705L * (1.0L + a);
  const long double te0 = (e0 + a + b) / (1.0L + a + b);
  EXPECT_NEAR(constants::log_out(), 0.2507106, 5e-8);
  // Printed digits agree to within one unit in the fourth decimal.
  EXPECT_NEAR(constants::e0(), 0.8817, 1e-4);
  EXPECT_NEAR(constants::e1(), -12.7650, 1e-4);
  // Frozen from a 30-digit evaluation.
  EXPECT_NEAR(constants::e0(), 0.881750947308301702, 1e-15);
  EXPECT_NEAR(constants::e1(), -12.7649717468906551, 1e-12);
  EXPECT_NEAR(constants::e0(), double(e0), 1e-14);
  EXPECT_NEAR(po_improve(constants::e0()), double(te0), 1e-14);
  EXPECT_NEAR(po_improve(constants::e0()), 0.921660617835399114, 1e-15);
  EXPECT_NEAR(constants::e1(), 1.0 / (po_improve(constants::e0()) - 1.0), 1e-12);
  EXPECT_NEAR(constants::dixon_base(), std::pow(24.0, 1.0 / 3.0), 1e-15);
}

TEST(Bounds, ImproveMap) {
  EXPECT_NEAR(po_improve(1.0), 1.0, 1e-12);
  for (double e = -2.0; e < 1.0; e += 0.125) {
    EXPECT_LT(e, po_improve(e));
    EXPECT_LT(po_improve(e), 1.0);
    EXPECT_LT(po_improve(e), po_improve(e + 0.0625));
  }
  // Affine: equal steps give equal differences.
  EXPECT_NEAR(po_improve(0.5) - po_improve(0.25), po_improve(0.25) - po_improve(0.0), 1e-15);
}

TEST(Bounds, SlackComparison) {
  EXPECT_EQ(compare_with_slack(1.0, 1.0), Status::Pass);
  EXPECT_EQ(compare_with_slack(1.0 + 1e-12, 1.0), Status::Marginal);
  EXPECT_EQ(compare_with_slack(1.1, 1.0), Status::Fail);
}

TEST(Bounds, AlmostPredicates) {
  GroupContext c6(parse_group("C6"));
  EXPECT_TRUE(is_almost_abelian(c6, 1, 1));
  GroupContext a5(parse_group("A5"));
  EXPECT_TRUE(is_almost_solvable(a5, 60));
  EXPECT_FALSE(is_almost_solvable(a5, 59));
  GroupContext s3a5(parse_group("S3xA5"));
  EXPECT_TRUE(is_almost_abelian(s3a5, 60, 2));
  EXPECT_FALSE(is_almost_abelian(s3a5, 60, 1));
  GroupContext s3(parse_group("S3"));
  EXPECT_TRUE(is_almost_solvable(s3, 1));
  EXPECT_FALSE(is_almost_abelian(s3, 1, 1));
}

TEST(Bounds, MainTheoExamples) {
  GroupContext a4(parse_group("A4"));
  auto r = check_mainTheo(a4);
  const auto &two = find(r, "mainTheo.2");
  EXPECT_EQ(two.status, Status::Pass);
  EXPECT_DOUBLE_EQ(two.witness["rho"].get<double>(), 5.0 / 12.0);
  EXPECT_NEAR(two.witness["dl_bound"].get<double>(), 2 * std::log(5.0 / 12) / std::log(0.75) + 1,
              1e-12);
  EXPECT_EQ(find(r, "mainTheo.3").status, Status::Info);

  GroupContext a5(parse_group("A5"));
  auto ra = check_mainTheo(a5);
  EXPECT_TRUE(all_ok(ra));
  const double rho = double(a5.l(-1).value) / 60.0;
  EXPECT_LE(60.0, std::pow(rho, constants::e1()));

  GroupContext c4(parse_group("C4"));
  auto rc = check_mainTheo(c4);
  EXPECT_DOUBLE_EQ(find(rc, "mainTheo.1").witness["rho"].get<double>(), 1.0);
  EXPECT_TRUE(all_ok(rc));
}

TEST(Bounds, Thresholds) {
  for (const char *spec : {"S3", "D8", "Q8", "A4", "S4", "A5", "C2xS3", "SL(2,3)", "C6"}) {
    GroupContext ctx(parse_group(spec));
    EXPECT_TRUE(all_ok(check_thresholds(ctx))) << spec;
  }
  // D8 attains the inversion bound 3/4 exactly.
  GroupContext d8(parse_group("D8"));
  EXPECT_EQ(d8.l(-1).value * 4, d8.order() * 3);
  EXPECT_EQ(thresholds().size(), 11u);
}

TEST(Bounds, GtfProperties) {
  for (const char *spec : {"A4", "S4", "D8", "Q8", "S3", "C2xC4", "SL(2,3)", "A5"}) {
    GroupContext ctx(parse_group(spec));
    auto rs = check_gtf_properties(ctx);
    EXPECT_TRUE(all_ok(rs)) << spec;
  }
  GroupContext a4(parse_group("A4"));
  auto rs = check_gtf_properties(a4);
  const auto &w = find(rs, "gtf.l2.CSwitness");
  ASSERT_EQ(w.witness["witnesses"].size(), 1u);
  EXPECT_EQ(w.witness["witnesses"][0]["N_order"], 4);
  EXPECT_DOUBLE_EQ(w.witness["witnesses"][0]["l2_N"].get<double>(), 0.25);
  EXPECT_DOUBLE_EQ(w.witness["l2_G"].get<double>(), 5.0 / 12.0);
}

TEST(Bounds, ExternalBounds) {
  GroupContext s4(parse_group("S4"));
  auto rs = check_external_bounds(s4);
  EXPECT_EQ(find(rs, "external.lieTheo1").status, Status::Pass);
  EXPECT_EQ(find(rs, "external.dixonTheo").status, Status::Pass); // 24 <= 24, equality

  GroupContext s5(parse_group("S5"));
  auto r5 = check_external_bounds(s5);
  EXPECT_EQ(find(r5, "external.fulTheo").status, Status::Pass);
  const auto &po = find(r5, "external.fulCor");
  EXPECT_EQ(po.status, Status::Pass);
  EXPECT_EQ(po.witness["maxsqrt"], 26);
  EXPECT_NEAR(po.witness["bound"].get<double>(), std::pow(60.0, constants::e0()), 1e-9);

  GroupContext a5(parse_group("A5"));
  for (const auto &r : check_external_bounds(a5))
    EXPECT_NE(r.check, "external.fulCor"); // A5 is not Aut(A5)
}

TEST(Bounds, PoBoundOnSemilinearTables) {
  auto r = check_po_bound(parse_group("PGammaL(2,4)"), 60);
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.witness["maxsqrt"], 26);
}

TEST(Bounds, SocleBoundFormulas) {
  EXPECT_DOUBLE_EQ(order_bound(1e6, 0.5), 1e6);
  EXPECT_NEAR(order_bound(1.0, 0.5), std::pow(2.0, 1.0 / 0.053), 1e-3);
  const double eb = exponent_bound(1e6, 0.5, 12);
  EXPECT_TRUE(std::isfinite(eb));
  EXPECT_GT(eb, 0.0);
}
