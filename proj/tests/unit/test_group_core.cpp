#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>

#include "grouplab/errors.hpp"
#include "grouplab/group_spec.hpp"
#include "grouplab/subgroups.hpp"

using namespace grouplab;

namespace {

// Oracle: naive permutation closure with std::set, independent of the BFS table builder.
std::size_t naive_closure_size(unsigned degree, const std::vector<Permutation> &gens) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &p : frontier)
      for (const auto &s : gens) {
        Permutation r(degree);
        for (unsigned i = 0; i < degree; ++i)
          r[i] = p[s[i]];
        if (seen.insert(r).second)
          next.push_back(r);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// Oracle: conjugacy classes by conjugating with every element.
std::multiset<std::size_t> brute_class_sizes(const GroupTable &g) {
  std::vector<char> done(g.order(), 0);
  std::multiset<std::size_t> sizes;
  for (Element x = 0; x < g.order(); ++x) {
    if (done[x])
      continue;
    std::set<Element> orbit;
    for (Element y = 0; y < g.order(); ++y)
      orbit.insert(g.conjugate(y, x));
    for (auto z : orbit)
      done[z] = 1;
    sizes.insert(orbit.size());
  }
  return sizes;
}

// Oracle: subgroups as closed subsets, by exhaustive subset search (|G| <= 12).
std::pair<std::size_t, std::size_t> brute_subgroup_counts(const GroupTable &g) {
  const std::size_t n = g.order();
  std::size_t all = 0, normal = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1))
      continue;
    bool closed = true;
    for (Element a = 0; a < n && closed; ++a)
      for (Element b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.mul(a, b) & 1))
          closed = false;
    if (!closed)
      continue;
    ++all;
    bool is_norm = true;
    for (Element a = 0; a < n && is_norm; ++a)
      for (Element x = 0; x < n && is_norm; ++x)
        if ((mask >> a & 1) && !(mask >> g.conjugate(x, a) & 1))
          is_norm = false;
    normal += is_norm;
  }
  return {all, normal};
}

std::size_t brute_center_order(const GroupTable &g) {
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    c += central;
  }
  return c;
}

} // namespace

TEST(GroupFromPermutations, SmallExamplesMatchNaiveClosure) {
  auto s3 = group_from_permutations(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
  EXPECT_EQ(s3.order(), 6u);
  std::vector<Permutation> a4 = {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 2 3)", 4)};
  EXPECT_EQ(group_from_permutations(4, a4).order(), naive_closure_size(4, a4));
  EXPECT_EQ(naive_closure_size(4, a4), 12u);
  std::vector<Permutation> a5 = {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)};
  EXPECT_EQ(group_from_permutations(5, a5).order(), naive_closure_size(5, a5));
  EXPECT_EQ(naive_closure_size(5, a5), 60u);
}

TEST(GroupFromPermutations, IdentityIsZeroAndNamesAreCycles) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(s3.name(kIdentity), "()");
  for (Element x = 0; x < s3.order(); ++x) {
    EXPECT_EQ(s3.mul(kIdentity, x), x);
    EXPECT_EQ(s3.mul(x, s3.inv(x)), kIdentity);
    EXPECT_EQ(s3.mul(s3.inv(x), x), kIdentity);
  }
  std::set<std::string> names(s3.names().begin(), s3.names().end());
  EXPECT_TRUE(names.count("(1 2 3)"));
  EXPECT_TRUE(names.count("(2 3)"));
}

TEST(GroupFromPermutations, Errors) {
  EXPECT_THROW(group_from_permutations(3, {Permutation{0, 0, 1}}), NotBijective);
  EXPECT_THROW(group_from_permutations(3, {Permutation{0, 1}}), NotBijective);
  EXPECT_THROW(group_from_permutations(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)}, 50),
               ClosureExceeded);
  EXPECT_THROW(parse_cycles("(1 2", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 4)", 3), ParseError);
}

TEST(GroupTable, RejectsNonAssociativeTable) {
  // A Latin square with identity 0 and inverses that is not associative.
  std::vector<Element> mul = {0, 1, 2, 3, 4, //
                              1, 0, 3, 4, 2, //
                              2, 4, 0, 1, 3, //
                              3, 2, 4, 0, 1, //
                              4, 3, 1, 2, 0};
  EXPECT_THROW(GroupTable(mul, {"e", "a", "b", "c", "d"}, {1, 2}), PreconditionViolated);
}

TEST(DirectProduct, OrdersAndCenter) {
  auto v = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(v.order(), 4u);
  EXPECT_EQ(exponent(v), 2u);
  EXPECT_EQ(direct_product(symmetric_group(3), alternating_group(5)).order(), 360u);
  auto a5a5 = parse_group("A5xA5");
  EXPECT_EQ(a5a5.order(), 3600u);
  EXPECT_EQ(center(a5a5).order(), 1u);
  EXPECT_EQ(a5a5.permutation_degree(), 10u);
}

TEST(ConjugacyClasses, MatchBruteForce) {
  for (const char *spec : {"S3", "A4", "Q8", "D10", "S4", "A5", "SL(2,3)"}) {
    auto g = parse_group(spec);
    auto p = conjugacy_classes(g);
    std::multiset<std::size_t> sizes;
    for (const auto &c : p.classes)
      sizes.insert(c.size());
    EXPECT_EQ(sizes, brute_class_sizes(g)) << spec;
    EXPECT_EQ(p.classes[0], std::vector<Element>{kIdentity});
    for (Element x = 0; x < g.order(); ++x)
      EXPECT_TRUE(std::binary_search(p.classes[p.class_of[x]].begin(),
                                     p.classes[p.class_of[x]].end(), x));
  }
  EXPECT_EQ(brute_class_sizes(symmetric_group(3)), (std::multiset<std::size_t>{1, 2, 3}));
  EXPECT_EQ(brute_class_sizes(alternating_group(4)), (std::multiset<std::size_t>{1, 3, 4, 4}));
  auto c12 = cyclic_group(12);
  EXPECT_EQ(conjugacy_classes(c12).count(), 12u);
}

TEST(Centralizer, ExamplesAndCenter) {
  auto s3 = symmetric_group(3);
  for (Element x = 0; x < s3.order(); ++x)
    if (s3.element_order(x) == 3)
      EXPECT_EQ(centralizer(s3, x).order(), 3u);
  for (const char *spec : {"Q8", "S4", "D8", "SL(2,3)", "C6", "A4xC2"}) {
    auto g = parse_group(spec);
    EXPECT_EQ(center(g).order(), brute_center_order(g)) << spec;
  }
  EXPECT_EQ(center(quaternion_group()).order(), 2u);
  EXPECT_TRUE(center(cyclic_group(9)).is_whole());
}

TEST(Subgroups, LatticeMatchesSubsetSearch) {
  for (const char *spec : {"S3", "C6", "Q8", "V4", "D10", "A4", "D12", "C7"}) {
    auto g = parse_group(spec);
    auto [all, normal] = brute_subgroup_counts(g);
    EXPECT_EQ(subgroups(g).size(), all) << spec;
    EXPECT_EQ(normal_subgroups(g).size(), normal) << spec;
  }
  auto s3 = symmetric_group(3);
  EXPECT_EQ(subgroups(s3).size(), 6u);
  auto normals = normal_subgroups(s3);
  ASSERT_EQ(normals.size(), 3u);
  EXPECT_EQ(normals[0].order(), 1u);
  EXPECT_EQ(normals[1].order(), 3u);
  EXPECT_EQ(normals[2].order(), 6u);
  EXPECT_EQ(subgroups(cyclic_group(13)).size(), 2u);
  EXPECT_THROW(subgroups(symmetric_group(6), 256), ClosureExceeded);
}

TEST(Subgroups, FourGroupCharacteristicInA4) {
  auto a4 = alternating_group(4);
  std::vector<Automorphism> gens;
  for (Element x = 0; x < a4.order(); ++x)
    gens.push_back(Automorphism::inner(a4, x));
  auto chars = characteristic_subgroups(a4, gens);
  bool has_v4 = std::any_of(chars.begin(), chars.end(), [&](const Subgroup &h) {
    return h.order() == 4 && exponent(induced_table(a4, h).table) == 2;
  });
  EXPECT_TRUE(has_v4);
}

TEST(Quotient, ExamplesAndHomomorphism) {
  auto s3 = symmetric_group(3);
  auto a3 = normal_subgroups(s3)[1];
  auto q = quotient(s3, a3);
  EXPECT_EQ(q.table.order(), 2u);

  auto a4 = alternating_group(4);
  Subgroup v4;
  for (const auto &n : normal_subgroups(a4))
    if (n.order() == 4)
      v4 = n;
  auto qa = quotient(a4, v4);
  EXPECT_EQ(qa.table.order(), 3u);
  EXPECT_TRUE(qa.table.is_abelian());
  for (Element x = 0; x < a4.order(); ++x)
    for (Element y = 0; y < a4.order(); ++y)
      EXPECT_EQ(qa.projection[a4.mul(x, y)], qa.table.mul(qa.projection[x], qa.projection[y]));

  auto triv = quotient(a4, Subgroup::trivial(a4));
  EXPECT_EQ(triv.table.order(), 12u);
  EXPECT_EQ(conjugacy_classes(triv.table).count(), 4u);

  for (Element x = 0; x < s3.order(); ++x)
    if (s3.element_order(x) == 2) {
      auto h = Subgroup::generated_by(s3, std::span<const Element>(&x, 1));
      EXPECT_THROW(quotient(s3, h), NotNormal);
      break;
    }
}

TEST(Quotient, LagrangeExponentAndClassCount) {
  for (const char *spec : {"S4", "D12", "Q8", "A4xC2", "SL(2,3)", "C2xC2xC2", "S3xC3"}) {
    auto g = parse_group(spec);
    for (const auto &n : normal_subgroups(g)) {
      auto q = quotient(g, n);
      auto sub = induced_table(g, n);
      EXPECT_EQ(g.order(), n.order() * q.table.order()) << spec;
      EXPECT_EQ((exponent(sub.table) * exponent(q.table)) % exponent(g), 0u) << spec;
      EXPECT_LE(conjugacy_classes(g).count(),
                conjugacy_classes(sub.table).count() * conjugacy_classes(q.table).count())
          << spec;
    }
  }
}

TEST(SeriesReport, Examples) {
  auto a5 = alternating_group(5);
  auto r = series_report(a5);
  EXPECT_FALSE(r.dl.has_value());
  EXPECT_TRUE(r.radical.is_trivial());
  EXPECT_TRUE(r.socle.is_whole());

  auto g = parse_group("S3xA5");
  auto rg = series_report(g);
  EXPECT_EQ(rg.radical.order(), 6u);
  EXPECT_EQ(g.order() / rg.radical.order(), 60u);
  EXPECT_EQ(rg.radical_dl, 2u);

  auto c = cyclic_group(10);
  auto rc = series_report(c);
  EXPECT_EQ(rc.dl, 1u);
  EXPECT_TRUE(rc.radical.is_whole());

  EXPECT_EQ(series_report(symmetric_group(3)).socle.order(), 3u);
  EXPECT_EQ(series_report(alternating_group(4)).socle.order(), 4u);
  EXPECT_EQ(series_report(symmetric_group(3)).dl, 2u);
  EXPECT_EQ(series_report(symmetric_group(4)).dl, 3u);
  EXPECT_EQ(series_report(sl23_group()).dl, 3u);
}

TEST(SeriesReport, RadicalQuotientIsSemisimple) {
  for (const char *spec : {"S3xA5", "S4", "A4xC2", "S5", "D20", "SL(2,3)"}) {
    auto g = parse_group(spec);
    auto r = series_report(g);
    EXPECT_TRUE(r.radical_dl.has_value()) << spec;
    auto q = quotient(g, r.radical);
    EXPECT_TRUE(series_report(q.table).radical.is_trivial()) << spec;
  }
}

TEST(Series, NilpotencyAndDerivedSeries) {
  EXPECT_TRUE(is_nilpotent(quaternion_group()));
  EXPECT_TRUE(is_nilpotent(dihedral_group(16)));
  EXPECT_FALSE(is_nilpotent(symmetric_group(3)));
  EXPECT_TRUE(is_nilpotent(cyclic_group(6)));
  EXPECT_TRUE(is_solvable(symmetric_group(4)));
  EXPECT_FALSE(is_solvable(symmetric_group(5)));
  auto s4 = symmetric_group(4);
  auto ds = derived_series(s4, Subgroup::whole(s4));
  ASSERT_EQ(ds.size(), 4u);
  EXPECT_EQ(ds[1].order(), 12u);
  EXPECT_EQ(ds[2].order(), 4u);
  EXPECT_EQ(ds[3].order(), 1u);
}

TEST(Exponent, Examples) {
  EXPECT_EQ(exponent(cyclic_group(6)), 6u);
  EXPECT_EQ(exponent(symmetric_group(3)), 6u);
  EXPECT_EQ(exponent(quaternion_group()), 4u);
  EXPECT_EQ(exponent(trivial_group()), 1u);
}

TEST(GroupSpec, NamedGroupsHaveExpectedOrders) {
  EXPECT_EQ(parse_group("C1").order(), 1u);
  EXPECT_EQ(parse_group("D8").order(), 8u);
  EXPECT_EQ(parse_group("Q8").order(), 8u);
  EXPECT_EQ(parse_group("V4").order(), 4u);
  EXPECT_EQ(parse_group("S5").order(), 120u);
  EXPECT_EQ(parse_group("A6").order(), 360u);
  EXPECT_EQ(parse_group("SL(2,3)").order(), 24u);
  EXPECT_EQ(center(parse_group("SL(2,3)")).order(), 2u);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u}) {
    std::size_t full = std::size_t(q) * q * q - q;
    std::size_t d = q % 2 ? 2 : 1;
    EXPECT_EQ(psl2_group(q).order(), full / d) << q;
    EXPECT_EQ(pgl2_group(q).order(), full) << q;
  }
  EXPECT_EQ(pgammal2_group(4).order(), 120u);
  EXPECT_EQ(pgammal2_group(8).order(), 1512u);
  EXPECT_EQ(pgammal2_group(9).order(), 1440u);
  EXPECT_EQ(parse_group("S3 x A5").order(), 360u);
  EXPECT_EQ(parse_group("PSL(2,4)xC2").order(), 120u);
  EXPECT_THROW(parse_group("Z5"), ParseError);
  EXPECT_THROW(parse_group("PSL(2,6)"), NotPrimePower);
  EXPECT_THROW(parse_group("S3x"), ParseError);
}

TEST(GroupSpec, PermutationFile) {
  const std::string path = ::testing::TempDir() + "grouplab_perm_file.txt";
  {
    std::ofstream out(path);
    out << "degree 4\n(1 2 3 4)\n(1 3)\n";
  }
  auto g = parse_group("file:" + path);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(parse_group("C3xfile:" + path).order(), 24u);
  EXPECT_THROW(parse_group("file:/nonexistent/grouplab"), IoError);
}
