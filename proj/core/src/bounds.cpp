#include "grouplab/bounds.hpp"

#include <cmath>
#include <functional>

#include "grouplab/errors.hpp"
#include "grouplab/group_context.hpp"

namespace grouplab {

namespace constants {

double log_out() { return std::log(12.0) / std::log(20160.0); }
double dixon_term() { return std::log(24.0) / std::log(60.0) / 3.0; }
double dixon_base() { return std::cbrt(24.0); }
double e0() { return 0.705 * (1.0 + log_out()); }
double e1() { return 1.0 / (po_improve(e0()) - 1.0); }

} // namespace constants

double po_improve(double e) {
  const double a = constants::log_out() + constants::dixon_term();
  return (e + a) / (1.0 + a);
}

Status compare_with_slack(double value, double bound) {
  if (value <= bound)
    return Status::Pass;
  if (value <= bound + kSlack * std::max(1.0, std::abs(bound)))
    return Status::Marginal;
  return Status::Fail;
}

const std::vector<Threshold> &thresholds() {
  static const std::vector<Threshold> table = {
      {"L-1", "abelian", 3, 4},  {"L2", "abelian", 1, 2},   {"L3", "abelian", 3, 4},
      {"L-1", "solvable", 4, 15}, {"L2", "solvable", 7, 60}, {"L3", "solvable", 4, 15},
      {"k", "abelian", 5, 8},    {"k", "nilpotent", 1, 2},  {"k", "solvable", 1, 12},
      {"mao", "abelian", 1, 2},  {"mao", "solvable", 1, 10},
  };
  return table;
}

nlohmann::json constants_json() {
  nlohmann::json th = nlohmann::json::array();
  for (const auto &t : thresholds())
    th.push_back({{"function", t.function},
                  {"property", t.property},
                  {"ratio", std::to_string(t.num) + "/" + std::to_string(t.den)}});
  return {{"E0", constants::e0()},
          {"E1", constants::e1()},
          {"log_20160_12", constants::log_out()},
          {"dixon_base", constants::dixon_base()},
          {"thresholds", th}};
}

bool is_almost_solvable(GroupContext &ctx, double index_bound) {
  const auto &s = ctx.series();
  return double(ctx.order() / s.radical.order()) <= index_bound;
}

bool is_almost_abelian(GroupContext &ctx, double index_bound, double dl_bound) {
  return is_almost_solvable(ctx, index_bound) && double(*ctx.series().radical_dl) <= dl_bound;
}

AlmostParams inversion_params(double rho) {
  const double log34 = std::log(0.75);
  return {std::pow(rho, constants::e1()), std::max(2.0, std::log(2.0 * rho) / log34 + 3.0)};
}

AlmostParams squaring_params(double rho) {
  return {std::pow(rho, -4.0), 2.0 * std::log(rho) / std::log(0.75) + 1.0};
}

namespace {

void expect_le(CheckTally &t, double value, double bound, nlohmann::json witness) {
  witness["value"] = value;
  witness["bound"] = bound;
  switch (compare_with_slack(value, bound)) {
  case Status::Pass:
    t.expect(true, {});
    break;
  case Status::Marginal:
    t.marginal(witness);
    break;
  default:
    t.expect(false, witness);
  }
}

CheckReport almost_abelian_check(GroupContext &ctx, const std::string &name, double rho,
                                 const AlmostParams &p) {
  CheckTally t(name);
  const auto &s = ctx.series();
  const double index = double(ctx.order() / s.radical.order());
  const double dl = double(*s.radical_dl);
  expect_le(t, index, p.index_bound, {{"quantity", "radical_index"}, {"rho", rho}});
  expect_le(t, dl, p.dl_bound, {{"quantity", "radical_dl"}, {"rho", rho}});
  t.data()["rho"] = rho;
  t.data()["radical_index"] = index;
  t.data()["radical_dl"] = dl;
  t.data()["index_bound"] = p.index_bound;
  t.data()["dl_bound"] = p.dl_bound;
  return t.finish();
}

} // namespace

std::vector<CheckReport> check_mainTheo(GroupContext &ctx) {
  const double n = double(ctx.order());
  std::vector<CheckReport> out;
  const double rho1 = double(ctx.l(-1).value) / n;
  out.push_back(almost_abelian_check(ctx, "mainTheo.1", rho1, inversion_params(rho1)));
  const double rho2 = double(ctx.l(2).value) / n;
  out.push_back(almost_abelian_check(ctx, "mainTheo.2", rho2, squaring_params(rho2)));
  const auto &s = ctx.series();
  out.push_back(info_report("mainTheo.3", {{"L3", ctx.l(3).value},
                                           {"l3", double(ctx.l(3).value) / n},
                                           {"radical_index", ctx.order() / s.radical.order()},
                                           {"radical_dl", *s.radical_dl}}));
  return out;
}

std::vector<CheckReport> check_thresholds(GroupContext &ctx) {
  const std::size_t n = ctx.order();
  const bool abelian = ctx.table().is_abelian();
  auto property = [&](const std::string &p) {
    if (p == "abelian")
      return abelian;
    if (p == "nilpotent")
      return ctx.nilpotent();
    return ctx.solvable();
  };
  auto value = [&](const std::string &f) -> std::size_t {
    if (f == "L-1")
      return ctx.l(-1).value;
    if (f == "L2")
      return ctx.l(2).value;
    if (f == "L3")
      return ctx.l(3).value;
    if (f == "k")
      return ctx.k();
    return ctx.mao();
  };
  std::vector<CheckReport> out;
  for (const auto &th : thresholds()) {
    CheckTally t("threshold." + th.function + "." + th.property);
    const std::size_t v = value(th.function);
    const bool above = v * th.den > std::size_t(th.num) * n;
    const bool holds = property(th.property);
    t.expect(!above || holds, {{"value", v}, {"order", n}, {th.property, holds}});
    t.data()["value"] = v;
    t.data()["ratio"] = double(v) / double(n);
    out.push_back(t.finish());
  }

  try {
    const std::size_t f = ctx.func().value;
    CheckTally t("gadget.funcThreshold");
    const bool above = 4 * f > 3 * n;
    t.expect(!above || abelian, {{"Func", f}, {"order", n}, {"abelian", abelian}});
    if (ctx.solvable() && ctx.series().dl.value_or(0) >= 2)
      t.expect(!above, {{"Func", f}, {"order", n}, {"dl", *ctx.series().dl}});
    t.data()["Func"] = f;
    t.data()["func_rel"] = double(f) / double(n);
    out.push_back(t.finish());
  } catch (const BudgetExceeded &e) {
    out.push_back(skipped_report("gadget.funcThreshold", e.what()));
  }
  return out;
}

namespace {

using Getter = std::function<std::uint64_t(GroupContext &)>;

enum class Relation {
  CQ,        // F(G) <= |N| F(G/N)
  CSub,      // F(G) <= F(N) F(G/N)
  Divides,   // F(G) | F(N) F(G/N)
};

struct GtfSpec {
  std::string name;
  Relation relation;
  Getter get;
  bool all_normal = false; // the property is claimed for every normal N
};

GroupContext &sub_of(GroupContext &ctx, const Subgroup &n) {
  return n.is_whole() ? ctx : ctx.subgroup_context(n);
}

GroupContext &quot_of(GroupContext &ctx, const Subgroup &n) {
  return n.is_trivial() ? ctx : ctx.quotient_context(n);
}

CheckReport run_gtf(GroupContext &ctx, const GtfSpec &spec) {
  CheckTally t(spec.name);
  std::size_t skipped = 0, evaluated = 0;
  std::uint64_t fg;
  try {
    fg = spec.get(ctx);
  } catch (const BudgetExceeded &e) {
    return skipped_report(spec.name, e.what());
  } catch (const AutCapExceeded &e) {
    return skipped_report(spec.name, e.what());
  }
  const auto &subs = spec.all_normal ? ctx.normal_subgroups() : ctx.characteristic_subgroups();
  for (const auto &n : subs) {
    std::uint64_t fq, fn = 0;
    try {
      fq = spec.get(quot_of(ctx, n));
      if (spec.relation != Relation::CQ)
        fn = spec.get(sub_of(ctx, n));
    } catch (const BudgetExceeded &) {
      ++skipped;
      continue;
    } catch (const AutCapExceeded &) {
      ++skipped;
      continue;
    }
    ++evaluated;
    const nlohmann::json w = {{"N_order", n.order()}, {"f_G", fg}, {"f_N", fn}, {"f_GN", fq}};
    switch (spec.relation) {
    case Relation::CQ:
      t.expect(fg <= n.order() * fq, w);
      break;
    case Relation::CSub:
      t.expect(fg <= fn * fq, w);
      break;
    case Relation::Divides:
      t.expect((fn * fq) % fg == 0, w);
      break;
    }
  }
  if (evaluated == 0 && skipped > 0)
    return skipped_report(spec.name, "every subgroup or quotient exceeded a limit");
  t.data()["value"] = fg;
  t.data()["skipped_subgroups"] = skipped;
  return t.finish();
}

} // namespace

std::vector<CheckReport> check_gtf_properties(GroupContext &ctx) {
  auto l = [](long long e) { return [e](GroupContext &c) -> std::uint64_t { return c.l(e).value; }; };
  auto lhat = [](unsigned e) {
    return [e](GroupContext &c) -> std::uint64_t { return c.lhat(e).value; };
  };
  const Getter k = [](GroupContext &c) -> std::uint64_t { return c.k(); };
  const Getter ex = [](GroupContext &c) -> std::uint64_t { return c.exponent(); };
  const Getter mao = [](GroupContext &c) -> std::uint64_t { return c.mao(); };
  const Getter func = [](GroupContext &c) -> std::uint64_t { return c.func().value; };

  // F_rel CQ-increasing is F(G) <= |N| F(G/N); C-submultiplicativity of F and F_rel coincide.
  const std::vector<GtfSpec> specs = {
      {"gtf.l-1.CQ", Relation::CQ, l(-1)},
      {"gtf.l2.CQ", Relation::CQ, l(2)},
      {"gtf.l3.CQ", Relation::CQ, l(3)},
      {"gtf.L-1.Csub", Relation::CSub, l(-1)},
      {"gtf.k_rel.Csub", Relation::CSub, k},
      {"gtf.k.normalSub", Relation::CSub, k, true},
      {"gtf.exp.divides", Relation::Divides, ex, true},
      {"gtf.mao_rel.CQ", Relation::CQ, mao},
      {"gtf.func_rel.Csub", Relation::CSub, func},
      {"gtf.lhat2_rel.Csub", Relation::CSub, lhat(2)},
      {"gtf.lhat3_rel.Csub", Relation::CSub, lhat(3)},
  };
  std::vector<CheckReport> out;
  for (const auto &s : specs)
    out.push_back(run_gtf(ctx, s));

  // f(G) <= f(G/Rad G) for the CQ-increasing functions.
  {
    CheckTally t("gtf.radicalQuotient");
    const auto &rad = ctx.series().radical;
    GroupContext &q = quot_of(ctx, rad);
    try {
      for (long long e : {-1LL, 2LL, 3LL})
        t.expect(ctx.l(e).value * q.order() <= q.l(e).value * ctx.order(),
                 {{"function", "l" + std::to_string(e)},
                  {"f_G", ctx.l(e).value},
                  {"f_quotient", q.l(e).value},
                  {"quotient_order", q.order()}});
      t.expect(std::uint64_t(ctx.mao()) * q.order() <= std::uint64_t(q.mao()) * ctx.order(),
               {{"function", "mao_rel"}, {"f_G", ctx.mao()}, {"f_quotient", q.mao()}});
      t.data()["radical_order"] = rad.order();
      out.push_back(t.finish());
    } catch (const AutCapExceeded &e) {
      out.push_back(skipped_report("gtf.radicalQuotient", e.what()));
    }
  }

  // l_2 is not CS-increasing: record characteristic N with l_2(N) < l_2(G).
  {
    nlohmann::json rows = nlohmann::json::array();
    const double lg = double(ctx.l(2).value) / double(ctx.order());
    for (const auto &n : ctx.characteristic_subgroups()) {
      if (n.is_trivial() || n.is_whole())
        continue;
      try {
        auto &sub = sub_of(ctx, n);
        const double ln = double(sub.l(2).value) / double(n.order());
        if (ln < lg)
          rows.push_back({{"N_order", n.order()}, {"l2_N", ln}, {"l2_G", lg}});
      } catch (const AutCapExceeded &) {
      }
    }
    out.push_back(info_report("gtf.l2.CSwitness", {{"l2_G", lg}, {"witnesses", rows}}));
  }
  return out;
}

namespace {

// Socle as a group if it is nonabelian simple.
bool socle_is_nonabelian_simple(GroupContext &ctx) {
  const auto &soc = ctx.series().socle;
  if (soc.is_trivial())
    return false;
  auto &s = sub_of(ctx, soc);
  if (s.table().is_abelian())
    return false;
  return s.normal_subgroups().size() == 2;
}

} // namespace

std::vector<CheckReport> check_external_bounds(GroupContext &ctx) {
  std::vector<CheckReport> out;
  const auto &g = ctx.table();
  const double n = double(g.order());
  if (auto d = g.permutation_degree()) {
    CheckTally t("external.lieTheo1");
    const double bound = std::ldexp(1.0, int(*d) - 1);
    t.expect(double(ctx.k()) <= bound, {{"k", ctx.k()}, {"degree", *d}, {"bound", bound}});
    t.data()["degree"] = *d;
    out.push_back(t.finish());
    if (ctx.solvable()) {
      CheckTally dix("external.dixonTheo");
      const double b = std::pow(24.0, (double(*d) - 1.0) / 3.0);
      expect_le(dix, n, b, {{"degree", *d}});
      dix.data()["degree"] = *d;
      dix.data()["bound"] = b;
      out.push_back(dix.finish());
    }
  }
  if (socle_is_nonabelian_simple(ctx)) {
    CheckTally t("external.fulTheo");
    const double bound = std::pow(n, 0.41);
    expect_le(t, double(ctx.k()), bound, {{"k", ctx.k()}});
    t.data()["k"] = ctx.k();
    t.data()["bound"] = bound;
    out.push_back(t.finish());

    // G = Aut(S) when |G| = |Aut(S)| for the socle S.
    const auto &soc = ctx.series().socle;
    try {
      if (sub_of(ctx, soc).aut().order() == g.order()) {
        auto r = check_po_bound(g, soc.order());
        out.push_back(std::move(r));
      }
    } catch (const AutCapExceeded &e) {
      out.push_back(skipped_report("external.fulCor", e.what()));
    }
  }
  return out;
}

CheckReport check_po_bound(const GroupTable &aut_s, std::size_t simple_order) {
  CheckTally t("external.fulCor");
  const double bound = std::pow(double(simple_order), constants::e0());
  const std::size_t ms = maxsqrt(aut_s);
  expect_le(t, double(ms), bound, {{"simple_order", simple_order}});
  t.data()["maxsqrt"] = ms;
  t.data()["bound"] = bound;
  t.data()["margin"] = bound - double(ms);
  return t.finish();
}

double order_bound(double c, double rho) { return std::max(c, std::pow(rho, -1.0 / 0.053)); }

double exponent_bound(double c, double rho, double max_out) {
  const double b = order_bound(c, rho);
  const double m = 16.0 * (std::log(rho) / std::log(60.0)) / -0.053;
  return m + std::log(rho / std::pow(max_out, m)) / std::log(1.0 - 1.0 / b);
}

} // namespace grouplab
