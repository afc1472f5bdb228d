#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "grouplab/automorphisms.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/group_spec.hpp"

using namespace grouplab;

namespace {

// Oracle: every bijection fixing the identity, kept when it respects the table.
std::set<std::vector<Element>> brute_automorphisms(const GroupTable &g) {
  std::vector<Element> rest(g.order() - 1);
  std::iota(rest.begin(), rest.end(), 1u);
  std::set<std::vector<Element>> out;
  do {
    std::vector<Element> img{0};
    img.insert(img.end(), rest.begin(), rest.end());
    bool ok = true;
    for (Element a = 0; a < g.order() && ok; ++a)
      for (Element b = 0; b < g.order() && ok; ++b)
        ok = img[g.mul(a, b)] == g.mul(img[a], img[b]);
    if (ok)
      out.insert(img);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::set<std::vector<Element>> as_set(const AutGroup &aut) {
  std::set<std::vector<Element>> out;
  for (const auto &a : aut.elements)
    out.emplace(a.image().begin(), a.image().end());
  return out;
}

unsigned euler_phi(unsigned n) {
  unsigned c = 0;
  for (unsigned k = 1; k <= n; ++k)
    c += std::gcd(k, n) == 1;
  return c;
}

} // namespace

TEST(Automorphisms, MatchesBruteForceOnSmallGroups) {
  for (const char *spec : {"C1", "C2", "C4", "V4", "C6", "S3", "C7", "D8", "Q8", "C2xC4"}) {
    auto g = parse_group(spec);
    auto aut = automorphism_group(g);
    EXPECT_EQ(as_set(aut), brute_automorphisms(g)) << spec;
    EXPECT_TRUE(aut.elements[0].is_identity()) << spec;
  }
}

TEST(Automorphisms, KnownOrders) {
  EXPECT_EQ(automorphism_group(parse_group("A4")).order(), 24u);
  EXPECT_EQ(automorphism_group(parse_group("S4")).order(), 24u);
  EXPECT_EQ(automorphism_group(parse_group("A5")).order(), 120u);
  EXPECT_EQ(automorphism_group(parse_group("C2xC2xC2")).order(), 168u);
  EXPECT_EQ(automorphism_group(parse_group("SL(2,3)")).order(), 24u);
  EXPECT_EQ(automorphism_group(parse_group("PSL(2,7)")).order(), 336u);
}

TEST(Automorphisms, CyclicGroupsHaveEulerPhiAutomorphisms) {
  for (unsigned n = 1; n <= 32; ++n)
    EXPECT_EQ(automorphism_group(cyclic_group(n)).order(), euler_phi(n)) << n;
}

TEST(Automorphisms, InnerCountIsIndexOfCenter) {
  auto s3 = automorphism_group(parse_group("S3"));
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(s3.inner_count, 6u);
  EXPECT_EQ(automorphism_group(parse_group("D8")).inner_count, 4u);
  EXPECT_EQ(automorphism_group(parse_group("C5")).inner_count, 1u);
}

TEST(Automorphisms, Completeness) {
  EXPECT_TRUE(is_complete(parse_group("S3")));
  EXPECT_TRUE(is_complete(parse_group("S4")));
  EXPECT_FALSE(is_complete(parse_group("A4")));
  EXPECT_FALSE(is_complete(parse_group("A5")));
  EXPECT_FALSE(is_complete(parse_group("C2")));
}

TEST(Automorphisms, Caps) {
  AutOptions tight;
  tight.cap = 10;
  EXPECT_THROW(automorphism_group(parse_group("C2xC2xC2"), tight), AutCapExceeded);
  EXPECT_THROW(automorphism_group(parse_group("S3xS3xC2xC2xC2xC2")), AutCapExceeded);
  EXPECT_EQ(count_automorphisms_up_to(parse_group("C2xC2xC2"), 50), 50u);
}

TEST(Automorphisms, FixAndMao) {
  auto c5 = cyclic_group(5);
  auto inversion = Automorphism(c5, {0, 4, 3, 2, 1});
  EXPECT_EQ(fix(c5, inversion).order(), 1u);
  EXPECT_EQ(mao(automorphism_group(parse_group("V4"))), 3u);
  EXPECT_EQ(mao(automorphism_group(parse_group("S3"))), 3u);
  EXPECT_EQ(mao(automorphism_group(parse_group("C2"))), 1u);
  EXPECT_EQ(mao(automorphism_group(parse_group("C2xC2xC2"))), 7u);
  EXPECT_EQ(mao(automorphism_group(parse_group("A5"))), 6u);
}

TEST(Automorphisms, ElementaryAbelian) {
  EXPECT_TRUE(is_elementary_abelian(trivial_group()));
  EXPECT_TRUE(is_elementary_abelian(parse_group("C3xC3")));
  EXPECT_FALSE(is_elementary_abelian(parse_group("C4")));
  EXPECT_FALSE(is_elementary_abelian(parse_group("S3")));
}

TEST(Automorphisms, ShiftAndMaps) {
  auto g = parse_group("S3");
  auto aut = automorphism_group(g);
  for (const auto &a : aut.elements)
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(shift(g, a, 0, x), kIdentity);
      EXPECT_EQ(shift(g, a, 1, x), x);
      EXPECT_EQ(shift(g, a, 2, x), g.mul(x, a(x)));
      EXPECT_EQ(shift(g, a, 3, x), g.mul(g.mul(x, a(x)), a(a(x))));
      EXPECT_EQ(t_map(g, a, x), g.mul(g.inv(x), a(x)));
    }
}

TEST(Automorphisms, CharacteristicSubgroupsUseFullAut) {
  auto a4 = parse_group("A4");
  auto aut = automorphism_group(a4);
  auto chars = characteristic_subgroups(a4, aut.elements);
  std::vector<std::size_t> orders;
  for (const auto &h : chars)
    orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 4, 12}));

  // In D8 the two Klein subgroups are swapped by an outer automorphism.
  auto d8 = parse_group("D8");
  auto normals = normal_subgroups(d8);
  auto d8_chars = characteristic_subgroups(d8, automorphism_group(d8).elements);
  EXPECT_EQ(normals.size(), 6u);
  EXPECT_EQ(d8_chars.size(), 4u);
}

TEST(Automorphisms, QuotientAndRestriction) {
  auto s4 = parse_group("S4");
  auto aut = automorphism_group(s4);
  auto normals = normal_subgroups(s4);
  for (const auto &n : normals) {
    auto q = quotient(s4, n);
    auto sub = induced_table(s4, n);
    for (const auto &a : aut.elements) {
      auto qa = induced_on_quotient(s4, a, q);
      for (Element x = 0; x < s4.order(); ++x)
        EXPECT_EQ(qa(q.projection[x]), q.projection[a(x)]);
      auto ra = restrict_to(a, sub);
      for (Element i = 0; i < sub.table.order(); ++i)
        EXPECT_EQ(sub.embedding[ra(i)], a(sub.embedding[i]));
    }
  }
}
