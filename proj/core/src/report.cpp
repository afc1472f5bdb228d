#include "grouplab/report.hpp"

#include "grouplab/errors.hpp"

namespace grouplab {

std::string to_string(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Marginal:
    return "marginal";
  case Status::Skipped:
    return "skipped";
  case Status::Info:
    return "info";
  }
  return "unknown";
}

Status status_from_string(const std::string &s) {
  for (auto st : {Status::Pass, Status::Fail, Status::Marginal, Status::Skipped, Status::Info})
    if (to_string(st) == s)
      return st;
  throw ParseError("unknown status '" + s + "'");
}

bool CheckTally::expect(bool ok, const nlohmann::json &witness_if_failed) {
  ++cases_;
  if (!ok) {
    if (failures_ == 0)
      first_failure_ = witness_if_failed;
    ++failures_;
  }
  return ok;
}

void CheckTally::marginal(const nlohmann::json &witness) {
  ++cases_;
  if (marginals_ == 0)
    first_marginal_ = witness;
  ++marginals_;
}

CheckReport CheckTally::finish() const {
  CheckReport r;
  r.check = check_;
  r.witness = data_;
  r.witness["cases"] = cases_;
  if (failures_ > 0) {
    r.status = Status::Fail;
    r.witness["failures"] = failures_;
    r.witness["first_failure"] = first_failure_;
  } else if (marginals_ > 0) {
    r.status = Status::Marginal;
    r.witness["marginals"] = marginals_;
    r.witness["first_marginal"] = first_marginal_;
  } else {
    r.status = Status::Pass;
  }
  return r;
}

CheckReport info_report(std::string check, nlohmann::json data) {
  CheckReport r;
  r.check = std::move(check);
  r.status = Status::Info;
  r.witness = std::move(data);
  return r;
}

CheckReport skipped_report(std::string check, const std::string &reason) {
  CheckReport r;
  r.check = std::move(check);
  r.status = Status::Skipped;
  r.witness = {{"reason", reason}};
  return r;
}

} // namespace grouplab
