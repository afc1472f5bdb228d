#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "grouplab/errors.hpp"
#include "grouplab/group_context.hpp"
#include "grouplab/group_spec.hpp"
#include "grouplab/power_maps.hpp"

using namespace grouplab;

namespace {

// Oracle: x^e by repeated multiplication, x^-1 by search.
Element naive_power(const GroupTable &g, Element x, long long e) {
  Element base = x;
  if (e < 0) {
    for (Element y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == kIdentity)
        base = y;
    e = -e;
  }
  Element r = kIdentity;
  for (long long i = 0; i < e; ++i)
    r = g.mul(r, base);
  return r;
}

std::size_t naive_l(const GroupTable &g, const AutGroup &aut, long long e) {
  std::size_t best = 0;
  for (const auto &a : aut.elements) {
    std::size_t c = 0;
    for (Element x = 0; x < g.order(); ++x)
      c += a(x) == naive_power(g, x, e);
    best = std::max(best, c);
  }
  return best;
}

// Oracle: lhat by evaluating each product element-wise, no precomputation.
std::size_t naive_lhat(const GroupTable &g, const AutGroup &aut, unsigned e) {
  const std::size_t m = aut.order();
  std::size_t tuples = 1;
  for (unsigned i = 0; i <= e; ++i)
    tuples *= m;
  std::size_t best = 0;
  for (std::size_t code = 0; code < tuples; ++code) {
    std::vector<std::size_t> idx;
    for (std::size_t c = code, i = 0; i <= e; ++i, c /= m)
      idx.push_back(c % m);
    std::size_t count = 0;
    for (Element x = 0; x < g.order(); ++x) {
      Element p = kIdentity;
      for (unsigned i = 1; i <= e; ++i)
        p = g.mul(p, aut.elements[idx[i]](x));
      count += aut.elements[idx[0]](x) == p;
    }
    best = std::max(best, count);
  }
  return best;
}

bool passed(const CheckReport &r) { return r.status == Status::Pass; }

} // namespace

TEST(PowerMaps, LValuesAgreeWithOracle) {
  for (const char *spec : {"C2", "V4", "C6", "S3", "D8", "Q8", "A4", "C3xC3", "S4", "SL(2,3)"}) {
    auto g = parse_group(spec);
    auto aut = automorphism_group(g);
    for (long long e : {-1LL, 1LL, 2LL, 3LL})
      EXPECT_EQ(l_value(g, aut, e).value, naive_l(g, aut, e)) << spec << " e=" << e;
  }
}

TEST(PowerMaps, FrozenValues) {
  // Frozen from naive_l.
  auto a4 = parse_group("A4");
  auto aut = automorphism_group(a4);
  EXPECT_EQ(l_value(a4, aut, 2).value, naive_l(a4, aut, 2));
  EXPECT_EQ(l_value(a4, aut, -1).value, 6u);
  EXPECT_EQ(l_value(parse_group("S3"), automorphism_group(parse_group("S3")), -1).value, 4u);
  // Inversion is an automorphism of an abelian group.
  for (const char *spec : {"C5", "V4", "C2xC6"}) {
    auto g = parse_group(spec);
    EXPECT_EQ(l_value(g, automorphism_group(g), -1).value, g.order()) << spec;
  }
}

TEST(PowerMaps, WitnessAttainsValue) {
  auto g = parse_group("D8");
  auto aut = automorphism_group(g);
  auto l = l_value(g, aut, 3);
  EXPECT_EQ(l_count(g, aut.elements[l.witness], 3), l.value);
  EXPECT_EQ(p_set(g, aut.elements[l.witness], 3).size(), l.value);
}

TEST(PowerMaps, SquareRoots) {
  EXPECT_EQ(maxsqrt(parse_group("S5")), 26u);
  EXPECT_EQ(maxsqrt(parse_group("C2xC2xC2")), 8u);
  EXPECT_EQ(maxsqrt(parse_group("C7")), 1u);
  auto g = parse_group("Q8");
  auto counts = sqrt_counts(g);
  EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::size_t{0}), g.order());
  for (Element x = 0; x < g.order(); ++x)
    EXPECT_EQ(sqrt_set(g, x).size(), counts[x]);
}

TEST(PowerMaps, InnerInversionMatchesMaxsqrt) {
  for (const char *spec : {"S3", "D8", "Q8", "A4", "S4", "A5", "C2xS3"}) {
    auto g = parse_group(spec);
    auto r = inverted_by_inner(g);
    EXPECT_TRUE(r.identity_holds) << spec;
    EXPECT_EQ(r.value, maxsqrt(g)) << spec;
  }
}

TEST(PowerMaps, FuncValues) {
  auto c3 = parse_group("C3");
  EXPECT_EQ(func_value(c3, automorphism_group(c3)).value, 3u);
  auto s3 = parse_group("S3");
  auto aut = automorphism_group(s3);
  auto f = func_value(s3, aut);
  EXPECT_EQ(func_count(s3, aut.elements[f.witness[0]], aut.elements[f.witness[1]]), f.value);
  EXPECT_LE(f.value, s3.order());
  EXPECT_THROW(func_value(s3, aut, 10.0), BudgetExceeded);
}

TEST(PowerMaps, GeneralizedSets) {
  auto g = parse_group("S3");
  auto aut = automorphism_group(g);
  std::vector<Automorphism> two{aut.elements[0], aut.elements[0]};
  // a(x) = x x reduces to P_2(a).
  for (const auto &a : aut.elements)
    EXPECT_EQ(generalized_p_set(g, a, two), p_set(g, a, 2).members);
}

TEST(PowerMaps, LhatRoutesAgree) {
  for (const char *spec : {"C3", "V4", "S3", "Q8"}) {
    auto g = parse_group(spec);
    auto aut = automorphism_group(g);
    auto normals = normal_subgroups(g);
    for (unsigned e = 1; e <= 3; ++e) {
      const auto direct = lhat(g, aut, e);
      EXPECT_EQ(direct.value, naive_lhat(g, aut, e)) << spec << " e=" << e;
      for (const auto &n : characteristic_subgroups(g, aut.elements))
        EXPECT_EQ(lhat_cosetwise(g, aut, e, n).value, direct.value) << spec << " e=" << e;
    }
  }
  auto s3 = parse_group("S3");
  EXPECT_EQ(lhat(s3, automorphism_group(s3), 1).value, s3.order());
  EXPECT_THROW(lhat(s3, automorphism_group(s3), 4), PreconditionViolated);
}

TEST(PowerMaps, CheckersPassOnSmallGroups) {
  for (const char *spec : {"C4", "V4", "S3", "D8", "Q8", "A4", "C3xS3", "S4", "SL(2,3)"}) {
    GroupContext ctx(parse_group(spec));
    EXPECT_TRUE(passed(check_lE(ctx))) << spec;
    EXPECT_TRUE(passed(check_lTwo(ctx))) << spec;
    EXPECT_TRUE(passed(check_lThree(ctx))) << spec;
    EXPECT_TRUE(passed(check_shiftCor(ctx))) << spec;
    EXPECT_TRUE(passed(check_t_fibers(ctx))) << spec;
    EXPECT_TRUE(passed(check_shiftTwo(ctx))) << spec;
    EXPECT_TRUE(passed(check_sqrtProp(ctx))) << spec;
    EXPECT_TRUE(passed(check_func_gadget(ctx))) << spec;
    EXPECT_TRUE(passed(check_aut_invariants(ctx))) << spec;
    EXPECT_TRUE(passed(check_lhat_routes(ctx, 2))) << spec;
  }
}

TEST(PowerMaps, NonShiftOnA5) {
  GroupContext a5(parse_group("A5"));
  auto r = check_nonShift(a5);
  EXPECT_EQ(r.status, Status::Pass);
  GroupContext s3(parse_group("S3"));
  EXPECT_THROW(check_nonShift(s3), PreconditionViolated);
}

TEST(PowerMaps, ShiftTwoSkipsLargeGroups) {
  GroupContext ctx(parse_group("A5"));
  EXPECT_EQ(check_shiftTwo(ctx).status, Status::Skipped);
}

TEST(PowerMaps, CheckerDetectsFalseClaim) {
  // A tally with a failing case reports Fail with a witness.
  CheckTally t("demo");
  t.expect(true, {});
  t.expect(false, {{"x", 1}});
  auto r = t.finish();
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_EQ(r.witness["first_failure"]["x"], 1);
}
