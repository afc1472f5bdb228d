#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "grouplab/automorphisms.hpp"
#include "grouplab/corpus.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/group_spec.hpp"

using namespace grouplab;

namespace {

// Oracles built from the multiplication table alone.
std::vector<Element> naive_closure(const GroupTable &g, std::vector<Element> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{kIdentity};
  in[kIdentity] = 1;
  for (Element s : seed)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Element p : {g.mul(members[i], members[j]), g.mul(members[j], members[i])})
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
  std::sort(members.begin(), members.end());
  return members;
}

bool naive_abelian(const GroupTable &g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

bool naive_solvable(const GroupTable &g) {
  std::vector<Element> h(g.order());
  for (Element x = 0; x < g.order(); ++x)
    h[x] = x;
  while (h.size() > 1) {
    std::vector<Element> comms;
    for (Element a : h)
      for (Element b : h)
        comms.push_back(g.commutator(a, b));
    auto next = naive_closure(g, comms);
    if (next.size() == h.size())
      return false;
    h = std::move(next);
  }
  return true;
}

bool naive_simple(const GroupTable &g) {
  if (g.order() == 1)
    return false;
  for (Element x = 1; x < g.order(); ++x) {
    std::vector<Element> conj;
    for (Element y = 0; y < g.order(); ++y)
      conj.push_back(g.conjugate(y, x));
    if (naive_closure(g, conj).size() != g.order())
      return false;
  }
  return true;
}

std::vector<std::string> oracle_tags(const GroupTable &g) {
  std::vector<std::string> t;
  if (naive_abelian(g))
    t.push_back("abelian");
  if (naive_solvable(g))
    t.push_back("solvable");
  if (naive_simple(g))
    t.push_back("simple");
  bool centerless = true;
  for (Element z = 1; z < g.order() && centerless; ++z) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y)
      central = g.mul(z, y) == g.mul(y, z);
    centerless = !central;
  }
  if (centerless && automorphism_group(g).order() == g.order())
    t.push_back("complete");
  if (auto d = g.permutation_degree())
    t.push_back("permutation-degree:" + std::to_string(*d));
  std::sort(t.begin(), t.end());
  return t;
}

std::set<std::string> names_of(const std::vector<CorpusEntry> &c) {
  std::set<std::string> s;
  for (const auto &e : c)
    s.insert(e.name);
  return s;
}

} // namespace

TEST(Corpus, OrderTwelve) {
  const auto c = builtin_corpus(12);
  const auto names = names_of(c);
  for (int n = 1; n <= 12; ++n)
    EXPECT_TRUE(names.count("C" + std::to_string(n))) << n;
  for (const char *n : {"S3", "A4", "D8", "D10", "D12", "Q8", "V4"})
    EXPECT_TRUE(names.count(n)) << n;
  EXPECT_FALSE(names.count("A5"));
  for (const auto &e : c)
    EXPECT_LE(e.table.order(), 12u);
  for (std::size_t i = 1; i < c.size(); ++i)
    EXPECT_LE(c[i - 1].table.order(), c[i].table.order());
}

TEST(Corpus, OrderSixtyIncludesA5) {
  const auto names = names_of(builtin_corpus(60));
  EXPECT_TRUE(names.count("A5"));
  EXPECT_TRUE(names.count("PSL(2,4)"));
  EXPECT_FALSE(names.count("S5"));
}

TEST(Corpus, TagsMatchOracle) {
  for (const auto &e : builtin_corpus(60))
    EXPECT_EQ(e.tags, oracle_tags(e.table)) << e.name;
  const auto s3a5 = parse_group("S3xA5");
  EXPECT_EQ(compute_tags(s3a5), oracle_tags(s3a5));
}

TEST(Corpus, Caps) {
  EXPECT_THROW(builtin_corpus(513), PreconditionViolated);
  EXPECT_EQ(builtin_corpus(1).size(), 1u);
}

TEST(Suites, UnknownSuiteThrows) {
  EXPECT_FALSE(is_known_suite("nope"));
  EXPECT_TRUE(is_known_suite("all"));
  EXPECT_THROW(run_suite("nope", builtin_corpus(4)), PreconditionViolated);
}

TEST(Suites, EntryErrorsBecomeSkipped) {
  const std::vector<CorpusEntry> big{{"S6", symmetric_group(6), {}}};
  const auto rs = run_suite("lemmas", big);
  ASSERT_FALSE(rs.empty());
  const auto le = std::find_if(rs.begin(), rs.end(), [](auto &r) { return r.check == "lemma.lE"; });
  ASSERT_NE(le, rs.end());
  EXPECT_EQ(le->status, Status::Skipped);
  EXPECT_EQ(le->group, "S6");
  EXPECT_TRUE(le->witness.contains("reason"));
  for (const auto &r : rs)
    EXPECT_NE(r.status, Status::Fail) << r.check;
}

TEST(Suites, SmallCorpusAllPassesAndIsDeterministic) {
  const auto corpus = builtin_corpus(12);
  const auto a = run_suite("all", corpus, {7, 1, false});
  const auto b = run_suite("all", corpus, {7, 2, false});
  EXPECT_EQ(report_document(a, 7).dump(), report_document(b, 7).dump());
  EXPECT_EQ(count_statuses(a).fail, 0u);
  EXPECT_EQ(count_statuses(a).marginal, 0u);
  for (std::size_t i = 1; i < a.size(); ++i)
    EXPECT_LE(a[i - 1].group, a[i].group);
}

TEST(Suites, CharactersPassUpTo24) {
  for (const auto &r : run_suite("characters", builtin_corpus(24)))
    EXPECT_EQ(r.status, Status::Pass) << r.group << ' ' << r.check;
}

TEST(Reports, EmptyListIsValidJson) {
  const auto doc = report_document({}, 3);
  EXPECT_TRUE(doc.at("results").empty());
  EXPECT_EQ(doc.at("meta").at("seed"), 3);
  EXPECT_EQ(doc.at("meta").at("version"), kVersion);
  EXPECT_TRUE(doc.at("meta").at("constants").contains("E0"));
  EXPECT_TRUE(doc.at("meta").at("constants").contains("E1"));
}

TEST(Reports, JsonRoundTrip) {
  CheckReport fail;
  fail.group = "A4";
  fail.check = "demo";
  fail.status = Status::Fail;
  fail.witness = {{"x", 3}, {"why", "a,b \"quoted\""}};
  fail.elapsed_ms = 1.25;
  auto rs = run_suite("thresholds", builtin_corpus(8));
  rs.push_back(fail);
  const auto text = report_document(rs, 1).dump(2);
  EXPECT_EQ(parse_report_document(nlohmann::json::parse(text)), rs);
  EXPECT_THROW(parse_report_document(nlohmann::json::parse("{\"results\": 3}")), ParseError);
  EXPECT_THROW(report_from_json({{"group", "x"}}), ParseError);
}

TEST(Reports, CsvQuotesWitness) {
  CheckReport r;
  r.group = "S3xA5";
  r.check = "demo";
  r.status = Status::Fail;
  r.witness = {{"k", "a,b"}};
  std::ostringstream out;
  write_csv(out, {r});
  EXPECT_EQ(out.str(), "group,check,status,elapsed_ms,witness\n"
                       "S3xA5,demo,fail,0.0,\"{\"\"k\"\":\"\"a,b\"\"}\"\n");
}

TEST(Reports, EmitErrors) {
  EXPECT_THROW(emit_report({}, "xml", "-", 1), PreconditionViolated);
  EXPECT_THROW(emit_report({}, "json", "/nonexistent-dir/x.json", 1), IoError);
}
