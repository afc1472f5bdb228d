#include "grouplab/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <thread>

#include "grouplab/bounds.hpp"
#include "grouplab/characters.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/group_context.hpp"
#include "grouplab/group_spec.hpp"
#include "grouplab/power_maps.hpp"
#include "grouplab/subgroups.hpp"

namespace grouplab {

namespace {

using Runner = std::function<std::vector<CheckReport>(GroupContext &)>;

struct Checker {
  std::string name;
  Runner run;
};

Runner single(CheckReport (*f)(GroupContext &)) {
  return [f](GroupContext &ctx) { return std::vector<CheckReport>{f(ctx)}; };
}

std::vector<Checker> lemma_checkers() {
  return {
      {"lemma.lE", single(check_lE)},
      {"lemma.lTwo", single(check_lTwo)},
      {"lemma.lThree", single(check_lThree)},
      {"lemma.shiftCor", single(check_shiftCor)},
      {"lemma.tFibers", single(check_t_fibers)},
      {"lemma.shiftTwo", [](GroupContext &c) { return std::vector{check_shiftTwo(c)}; }},
      {"lemma.sqrtProp", single(check_sqrtProp)},
      {"gadget.commute", [](GroupContext &c) { return std::vector{check_func_gadget(c)}; }},
      {"lemma.nonShift",
       [](GroupContext &c) {
         if (!center(c.table()).is_trivial() || c.solvable())
           return std::vector<CheckReport>{};
         return std::vector{check_nonShift(c)};
       }},
      {"lemma.lhatRoutes2", [](GroupContext &c) { return std::vector{check_lhat_routes(c, 2)}; }},
      {"lemma.lhatRoutes3", [](GroupContext &c) { return std::vector{check_lhat_routes(c, 3)}; }},
      {"aut.invariants", single(check_aut_invariants)},
  };
}

std::vector<Checker> character_checkers() {
  return {{"characters.tables", single(check_character_tables)},
          {"characters.sqrtIdentity", single(check_sqrt_identity)},
          {"characters.characterCor", single(check_characterCor)}};
}

std::vector<Checker> checkers_for(const std::string &suite) {
  if (suite == "lemmas")
    return lemma_checkers();
  if (suite == "characters")
    return character_checkers();
  if (suite == "thresholds")
    return {{"thresholds", check_thresholds}};
  if (suite == "gtf")
    return {{"gtf", check_gtf_properties}};
  if (suite == "bounds")
    return {{"external", check_external_bounds}};
  if (suite == "mainTheo")
    return {{"mainTheo", check_mainTheo}};
  if (suite == "all") {
    std::vector<Checker> all;
    for (const auto &s : suite_names())
      if (s != "all")
        for (auto &c : checkers_for(s))
          all.push_back(std::move(c));
    return all;
  }
  throw PreconditionViolated("unknown suite '" + suite + "'");
}

std::vector<CheckReport> run_entry(const CorpusEntry &entry, const std::vector<Checker> &checkers,
                                   bool timings) {
  GroupContext ctx(entry.table);
  std::vector<CheckReport> out;
  for (const auto &c : checkers) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckReport> rs;
    try {
      rs = c.run(ctx);
    } catch (const Error &e) {
      rs = {skipped_report(c.name, e.what())};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (auto &r : rs) {
      r.group = entry.name;
      r.elapsed_ms = timings ? ms / double(rs.size()) : 0.0;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string r = "\"";
  for (char ch : s) {
    if (ch == '"')
      r += '"';
    r += ch;
  }
  return r + "\"";
}

} // namespace

std::vector<std::string> compute_tags(const GroupTable &g) {
  std::vector<std::string> tags;
  GroupContext ctx(g);
  if (g.is_abelian())
    tags.push_back("abelian");
  if (ctx.solvable())
    tags.push_back("solvable");
  if (g.order() > 1 && ctx.normal_subgroups().size() == 2)
    tags.push_back("simple");
  try {
    if (ctx.complete())
      tags.push_back("complete");
  } catch (const AutCapExceeded &) {
    // Unknown; left untagged.
  }
  if (auto d = g.permutation_degree())
    tags.push_back("permutation-degree:" + std::to_string(*d));
  std::sort(tags.begin(), tags.end());
  return tags;
}

std::vector<CorpusEntry> builtin_corpus(std::size_t max_order) {
  if (max_order > 512)
    throw PreconditionViolated("builtin corpus limited to max_order <= 512");
  struct Candidate {
    std::string name;
    std::size_t order;
  };
  std::vector<Candidate> cand;
  for (std::size_t n = 1; n <= max_order; ++n)
    cand.push_back({"C" + std::to_string(n), n});
  for (std::size_t n = 3; 2 * n <= max_order; ++n)
    cand.push_back({"D" + std::to_string(2 * n), 2 * n});
  cand.push_back({"V4", 4});
  cand.push_back({"Q8", 8});
  const std::size_t fact[] = {1, 1, 2, 6, 24, 120, 720};
  for (unsigned n = 3; n <= 6; ++n)
    cand.push_back({"S" + std::to_string(n), fact[n]});
  for (unsigned n = 4; n <= 6; ++n)
    cand.push_back({"A" + std::to_string(n), fact[n] / 2});
  cand.push_back({"SL(2,3)", 24});
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11}) {
    const std::uint64_t d = q % 2 == 0 ? 1 : 2;
    cand.push_back({"PSL(2," + std::to_string(q) + ")", (q * q * q - q) / d});
  }
  cand.push_back({"A4xC2", 24});
  cand.push_back({"S3xA5", 360});
  cand.push_back({"A5xA5", 3600});

  std::vector<CorpusEntry> out;
  for (const auto &c : cand) {
    if (c.order > max_order)
      continue;
    CorpusEntry e;
    e.name = c.name;
    e.table = parse_group(c.name);
    e.tags = compute_tags(e.table);
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry &a, const CorpusEntry &b) {
    return std::pair(a.table.order(), a.name) < std::pair(b.table.order(), b.name);
  });
  return out;
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"lemmas", "characters", "thresholds", "gtf",
                                              "bounds", "mainTheo",   "all"};
  return names;
}

bool is_known_suite(const std::string &suite) {
  const auto &n = suite_names();
  return std::find(n.begin(), n.end(), suite) != n.end();
}

std::vector<CheckReport> run_suite(const std::string &suite, const std::vector<CorpusEntry> &corpus,
                                   const SuiteOptions &options) {
  const auto checkers = checkers_for(suite);
  std::vector<std::vector<CheckReport>> per_entry(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++)
      per_entry[i] = run_entry(corpus[i], checkers, options.timings);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, corpus.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return corpus[a].name < corpus[b].name; });
  std::vector<CheckReport> out;
  for (std::size_t i : order)
    for (auto &r : per_entry[i])
      out.push_back(std::move(r));
  return out;
}

StatusCounts count_statuses(const std::vector<CheckReport> &reports) {
  StatusCounts c;
  for (const auto &r : reports) {
    switch (r.status) {
    case Status::Pass: ++c.pass; break;
    case Status::Fail: ++c.fail; break;
    case Status::Marginal: ++c.marginal; break;
    case Status::Skipped: ++c.skipped; break;
    case Status::Info: ++c.info; break;
    }
  }
  return c;
}

nlohmann::json to_json(const CheckReport &r) {
  return {{"group", r.group},
          {"check", r.check},
          {"status", to_string(r.status)},
          {"elapsed_ms", r.elapsed_ms},
          {"witness", r.witness}};
}

CheckReport report_from_json(const nlohmann::json &j) {
  try {
    CheckReport r;
    r.group = j.at("group").get<std::string>();
    r.check = j.at("check").get<std::string>();
    r.status = status_from_string(j.at("status").get<std::string>());
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.witness = j.value("witness", nlohmann::json());
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

nlohmann::json report_document(const std::vector<CheckReport> &reports, std::uint64_t seed) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto &r : reports)
    results.push_back(to_json(r));
  return {{"meta", {{"version", kVersion}, {"seed", seed}, {"constants", constants_json()}}},
          {"results", std::move(results)}};
}

std::vector<CheckReport> parse_report_document(const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("results") || !doc.at("results").is_array())
    throw ParseError("report document lacks a results array");
  std::vector<CheckReport> out;
  for (const auto &j : doc.at("results"))
    out.push_back(report_from_json(j));
  return out;
}

void write_csv(std::ostream &out, const std::vector<CheckReport> &reports) {
  out << "group,check,status,elapsed_ms,witness\n";
  for (const auto &r : reports)
    out << csv_field(r.group) << ',' << csv_field(r.check) << ',' << to_string(r.status) << ','
        << nlohmann::json(r.elapsed_ms).dump() << ',' << csv_field(r.witness.dump()) << '\n';
}

void emit_report(const std::vector<CheckReport> &reports, const std::string &format,
                 const std::string &path, std::uint64_t seed) {
  if (format != "json" && format != "csv")
    throw PreconditionViolated("unknown report format '" + format + "'");
  std::ofstream file;
  std::ostream *out = &std::cout;
  if (path != "-") {
    file.open(path);
    if (!file)
      throw IoError("cannot open " + path + " for writing");
    out = &file;
  }
  if (format == "json")
    *out << report_document(reports, seed).dump(2) << '\n';
  else
    write_csv(*out, reports);
  out->flush();
  if (!*out)
    throw IoError("write failed for " + path);
}

} // namespace grouplab
