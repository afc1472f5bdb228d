#include "grouplab/group_context.hpp"

namespace grouplab {

namespace {

std::vector<Element> key_of(const Subgroup &n) {
  return {n.members().begin(), n.members().end()};
}

} // namespace

GroupContext::GroupContext(GroupTable table, AnalysisLimits limits)
    : table_(std::move(table)), limits_(limits) {}

template <class T, class F> const T &GroupContext::memo(Memo<T> &m, F &&compute) {
  if (m.error)
    std::rethrow_exception(m.error);
  if (!m.value) {
    try {
      m.value.emplace(compute());
    } catch (...) {
      m.error = std::current_exception();
      throw;
    }
  }
  return *m.value;
}

const ConjClassPartition &GroupContext::classes() {
  return memo(classes_, [&] { return conjugacy_classes(table_); });
}

const AutGroup &GroupContext::aut() {
  return memo(aut_, [&] { return automorphism_group(table_, limits_.aut); });
}

const SeriesReport &GroupContext::series() {
  return memo(series_, [&] { return series_report(table_, limits_.normal_max_order); });
}

bool GroupContext::solvable() { return series().dl.has_value(); }

bool GroupContext::nilpotent() {
  return memo(nilpotent_, [&] { return is_nilpotent(table_); });
}

bool GroupContext::complete() {
  return memo(complete_, [&] {
    if (center(table_).order() != 1)
      return false;
    return aut().order() == table_.order();
  });
}

std::uint64_t GroupContext::exponent() { return grouplab::exponent(table_); }

const std::vector<Subgroup> &GroupContext::normal_subgroups() {
  return memo(normals_, [&] { return grouplab::normal_subgroups(table_, limits_.normal_max_order); });
}

const std::vector<Subgroup> &GroupContext::characteristic_subgroups() {
  return memo(characteristic_, [&] {
    const auto &a = aut();
    std::vector<Subgroup> out;
    for (const auto &n : normal_subgroups()) {
      bool invariant = true;
      for (const auto &alpha : a.elements)
        if (!is_invariant(n, alpha)) {
          invariant = false;
          break;
        }
      if (invariant)
        out.push_back(n);
    }
    return out;
  });
}

const Quotient &GroupContext::quotient(const Subgroup &n) {
  auto &slot = quotients_[key_of(n)];
  if (!slot)
    slot = std::make_unique<Quotient>(grouplab::quotient(table_, n));
  return *slot;
}

const InducedTable &GroupContext::induced(const Subgroup &n) {
  auto &slot = induced_[key_of(n)];
  if (!slot)
    slot = std::make_unique<InducedTable>(induced_table(table_, n));
  return *slot;
}

GroupContext &GroupContext::quotient_context(const Subgroup &n) {
  auto &slot = quotient_ctx_[key_of(n)];
  if (!slot)
    slot = std::make_unique<GroupContext>(quotient(n).table, limits_);
  return *slot;
}

GroupContext &GroupContext::subgroup_context(const Subgroup &n) {
  auto &slot = subgroup_ctx_[key_of(n)];
  if (!slot)
    slot = std::make_unique<GroupContext>(induced(n).table, limits_);
  return *slot;
}

const LValue &GroupContext::l(long long e) {
  return memo(l_[e], [&] { return l_value(table_, aut(), e); });
}

unsigned GroupContext::mao() { return grouplab::mao(aut()); }

std::size_t GroupContext::maxsqrt() {
  return memo(maxsqrt_, [&] { return grouplab::maxsqrt(table_); });
}

const TupleMax &GroupContext::func() {
  return memo(func_, [&] { return func_value(table_, aut(), limits_.func_budget); });
}

const TupleMax &GroupContext::lhat(unsigned e) {
  return memo(lhat_[e], [&] {
    return grouplab::lhat(table_, aut(), e, limits_.lhat_budget, limits_.lhat_max_aut);
  });
}

} // namespace grouplab
