#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grouplab/group_table.hpp"
#include "grouplab/report.hpp"

namespace grouplab {

inline constexpr const char *kVersion = "0.1.0";

struct CorpusEntry {
  std::string name; // a parse_group spec
  GroupTable table;
  /// Sorted subset of abelian, solvable, simple, complete, permutation-degree:<d>.
  std::vector<std::string> tags;
};

/// Tags recomputed from the table.
std::vector<std::string> compute_tags(const GroupTable &g);

/// Cyclic groups C1..C_N, dihedral D6..D_N, V4, Q8, S3..S6, A4..A6, SL(2,3),
/// PSL(2,q) for q in {4,5,7,8,9,11}, A4xC2, S3xA5 and A5xA5, keeping orders
/// <= max_order. Sorted by (order, name). Throws PreconditionViolated above 512.
std::vector<CorpusEntry> builtin_corpus(std::size_t max_order);

const std::vector<std::string> &suite_names();
bool is_known_suite(const std::string &suite);

struct SuiteOptions {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Fill elapsed_ms; off by default so identical runs emit identical bytes.
  bool timings = false;
};

/// Runs every checker of `suite` on each entry. A grouplab::Error raised by a
/// checker becomes one skipped report carrying the reason. Reports are
/// ordered by group name, then by checker order. Throws PreconditionViolated
/// on an unknown suite.
std::vector<CheckReport> run_suite(const std::string &suite, const std::vector<CorpusEntry> &corpus,
                                   const SuiteOptions &options = {});

struct StatusCounts {
  std::size_t pass = 0, fail = 0, marginal = 0, skipped = 0, info = 0;
};
StatusCounts count_statuses(const std::vector<CheckReport> &reports);

nlohmann::json to_json(const CheckReport &r);
/// Throws ParseError on malformed input.
CheckReport report_from_json(const nlohmann::json &j);

/// {meta: {version, seed, constants}, results: [...]}
nlohmann::json report_document(const std::vector<CheckReport> &reports, std::uint64_t seed);
/// Inverse of report_document's results. Throws ParseError.
std::vector<CheckReport> parse_report_document(const nlohmann::json &doc);

/// Columns group,check,status,elapsed_ms,witness with the witness as compact JSON.
void write_csv(std::ostream &out, const std::vector<CheckReport> &reports);

/// format is "json" or "csv"; path "-" writes to stdout. Throws IoError or
/// PreconditionViolated on an unknown format.
void emit_report(const std::vector<CheckReport> &reports, const std::string &format,
                 const std::string &path, std::uint64_t seed);

} // namespace grouplab
