#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace grouplab {

enum class Status { Pass, Fail, Marginal, Skipped, Info };

std::string to_string(Status s);
/// Throws ParseError on an unknown name.
Status status_from_string(const std::string &s);

/// Outcome of one check on one group. A Fail always carries a witness.
struct CheckReport {
  std::string group;
  std::string check;
  Status status = Status::Pass;
  nlohmann::json witness;
  double elapsed_ms = 0.0;

  friend bool operator==(const CheckReport &, const CheckReport &) = default;
};

/// Accumulates the cases of one check. The first failure becomes the witness;
/// later failures only bump the counter.
class CheckTally {
public:
  explicit CheckTally(std::string check) : check_(std::move(check)) {}

  /// Records one case; returns `ok`.
  bool expect(bool ok, const nlohmann::json &witness_if_failed);
  /// Records a failure that lies within numeric slack.
  void marginal(const nlohmann::json &witness);
  void add_cases(std::size_t n) { cases_ += n; }
  /// Extra fields merged into the witness of the final report.
  nlohmann::json &data() { return data_; }

  std::size_t failures() const { return failures_; }
  CheckReport finish() const;

private:
  std::string check_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::size_t marginals_ = 0;
  nlohmann::json first_failure_;
  nlohmann::json first_marginal_;
  nlohmann::json data_ = nlohmann::json::object();
};

CheckReport info_report(std::string check, nlohmann::json data);
CheckReport skipped_report(std::string check, const std::string &reason);

} // namespace grouplab
