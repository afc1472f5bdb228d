#pragma once

#include <exception>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "grouplab/automorphisms.hpp"
#include "grouplab/power_maps.hpp"
#include "grouplab/subgroups.hpp"

namespace grouplab {

struct AnalysisLimits {
  AutOptions aut;
  /// Work budget for Func(G) (|Aut|^2 |G|).
  double func_budget = 2e9;
  /// Work budget and Aut-size limit for lhat_e.
  double lhat_budget = 5e8;
  std::size_t lhat_max_aut = 300;
  /// Order limit for normal-subgroup enumeration.
  std::size_t normal_max_order = 4096;
};

/// Lazily computed, memoized analyses of one group: classes, Aut(G), series,
/// characteristic subgroups, and contexts for N and G/N. Errors raised while
/// computing a memoized value are stored and rethrown on every later request.
///
/// Not thread-safe; use one context per thread.
class GroupContext {
public:
  explicit GroupContext(GroupTable table, AnalysisLimits limits = {});

  const GroupTable &table() const { return table_; }
  std::size_t order() const { return table_.order(); }
  const AnalysisLimits &limits() const { return limits_; }

  const ConjClassPartition &classes();
  std::size_t k() { return classes().count(); }
  const AutGroup &aut();
  const SeriesReport &series();
  bool solvable();
  bool nilpotent();
  bool complete();
  std::uint64_t exponent();
  const std::vector<Subgroup> &normal_subgroups();
  /// Normal subgroups invariant under all of Aut(G).
  const std::vector<Subgroup> &characteristic_subgroups();

  const Quotient &quotient(const Subgroup &n);
  const InducedTable &induced(const Subgroup &n);
  GroupContext &quotient_context(const Subgroup &n);
  GroupContext &subgroup_context(const Subgroup &n);

  const LValue &l(long long e);
  unsigned mao();
  std::size_t maxsqrt();
  const TupleMax &func();
  const TupleMax &lhat(unsigned e);

private:
  template <class T> struct Memo {
    std::optional<T> value;
    std::exception_ptr error;
  };
  template <class T, class F> const T &memo(Memo<T> &m, F &&compute);

  GroupTable table_;
  AnalysisLimits limits_;
  Memo<ConjClassPartition> classes_;
  Memo<AutGroup> aut_;
  Memo<SeriesReport> series_;
  Memo<bool> nilpotent_;
  Memo<bool> complete_;
  Memo<std::vector<Subgroup>> normals_;
  Memo<std::vector<Subgroup>> characteristic_;
  Memo<std::size_t> maxsqrt_;
  Memo<TupleMax> func_;
  std::map<long long, Memo<LValue>> l_;
  std::map<unsigned, Memo<TupleMax>> lhat_;
  std::map<std::vector<Element>, std::unique_ptr<Quotient>> quotients_;
  std::map<std::vector<Element>, std::unique_ptr<InducedTable>> induced_;
  std::map<std::vector<Element>, std::unique_ptr<GroupContext>> quotient_ctx_;
  std::map<std::vector<Element>, std::unique_ptr<GroupContext>> subgroup_ctx_;
};

} // namespace grouplab
