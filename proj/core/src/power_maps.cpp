#include "grouplab/power_maps.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "grouplab/errors.hpp"
#include "grouplab/group_context.hpp"

namespace grouplab {

namespace {

std::vector<Element> power_table(const GroupTable &g, long long e) {
  std::vector<Element> pw(g.order());
  for (Element x = 0; x < g.order(); ++x)
    pw[x] = g.power(x, e);
  return pw;
}

void require_budget(double work, double budget, const std::string &what) {
  if (work > budget)
    throw BudgetExceeded(what + " needs ~" + std::to_string(static_cast<long long>(work)) +
                         " steps, budget " + std::to_string(static_cast<long long>(budget)));
}

// Right cosets N x as member lists, with the coset index of every element.
struct CosetSplit {
  std::vector<std::vector<Element>> cosets;
};

CosetSplit split_cosets(const GroupTable &g, const Subgroup &n) {
  CosetSplit s;
  std::vector<char> seen(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    std::vector<Element> c;
    for (auto m : n.members()) {
      Element y = g.mul(m, x);
      seen[y] = 1;
      c.push_back(y);
    }
    s.cosets.push_back(std::move(c));
  }
  return s;
}

// prod[x] = b_1(x) ... b_e(x) for the chosen tuple.
void tuple_products(const GroupTable &g, const std::vector<const Automorphism *> &betas,
                    std::vector<Element> &prod) {
  prod.assign(g.order(), kIdentity);
  for (const auto *b : betas)
    for (Element x = 0; x < g.order(); ++x)
      prod[x] = g.mul(prod[x], (*b)(x));
}

std::size_t count_matches(const Automorphism &a, const std::vector<Element> &prod) {
  std::size_t c = 0;
  for (Element x = 0; x < prod.size(); ++x)
    c += a(x) == prod[x];
  return c;
}

// |P_e(a | betas)| counted coset-wise over N through the shifted equation.
std::size_t count_cosetwise(const GroupTable &g, const Automorphism &a,
                            const std::vector<const Automorphism *> &betas, const Subgroup &n,
                            const CosetSplit &split) {
  auto in_set = [&](Element x) {
    Element p = kIdentity;
    for (const auto *b : betas)
      p = g.mul(p, (*b)(x));
    return a(x) == p;
  };
  std::size_t total = 0;
  std::vector<Element> conj(betas.size());
  for (const auto &coset : split.cosets) {
    auto hit = std::find_if(coset.begin(), coset.end(), in_set);
    if (hit == coset.end())
      continue;
    // conj[i] = b_1(x0) ... b_i(x0); factor i+1 is conjugated by conj[i].
    Element c = kIdentity;
    for (std::size_t i = 0; i < betas.size(); ++i) {
      conj[i] = c;
      c = g.mul(c, (*betas[i])(*hit));
    }
    for (auto m : n.members()) {
      Element rhs = kIdentity;
      for (std::size_t i = 0; i < betas.size(); ++i)
        rhs = g.mul(rhs, g.conjugate(conj[i], (*betas[i])(m)));
      total += a(m) == rhs;
    }
  }
  return total;
}

// Calls visit(alpha_index, beta_indices) over Aut^(1+e).
template <class F> void for_each_tuple(std::size_t aut_size, unsigned e, F &&visit) {
  std::vector<std::size_t> idx(e, 0);
  for (;;) {
    visit(idx);
    std::size_t i = 0;
    while (i < e && ++idx[i] == aut_size)
      idx[i++] = 0;
    if (i == e)
      return;
  }
}

std::vector<const Automorphism *> pick(const AutGroup &aut, const std::vector<std::size_t> &idx) {
  std::vector<const Automorphism *> out;
  for (auto i : idx)
    out.push_back(&aut.elements[i]);
  return out;
}

void check_lhat_args(const AutGroup &aut, unsigned e, double work, double budget,
                     std::size_t max_aut) {
  if (e < 1 || e > 3)
    throw PreconditionViolated("lhat supports 1 <= e <= 3");
  if (aut.order() > max_aut)
    throw BudgetExceeded("lhat limited to |Aut| <= " + std::to_string(max_aut) + ", got " +
                         std::to_string(aut.order()));
  require_budget(work, budget, "lhat");
}

} // namespace

PowerSet p_set(const GroupTable &g, const Automorphism &a, long long e) {
  PowerSet s;
  s.exponent = e;
  for (Element x = 0; x < g.order(); ++x)
    if (a(x) == g.power(x, e))
      s.members.push_back(x);
  return s;
}

std::size_t l_count(const GroupTable &g, const Automorphism &a, long long e) {
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x)
    c += a(x) == g.power(x, e);
  return c;
}

LValue l_value(const GroupTable &g, const AutGroup &aut, long long e) {
  const auto pw = power_table(g, e);
  LValue best;
  for (std::size_t i = 0; i < aut.order(); ++i) {
    const auto &a = aut.elements[i];
    std::size_t c = 0;
    for (Element x = 0; x < g.order(); ++x)
      c += a(x) == pw[x];
    if (c > best.value) {
      best.value = c;
      best.witness = i;
    }
  }
  return best;
}

std::vector<Element> sqrt_set(const GroupTable &g, Element x) {
  std::vector<Element> out;
  for (Element f = 0; f < g.order(); ++f)
    if (g.mul(f, f) == x)
      out.push_back(f);
  return out;
}

std::vector<std::size_t> sqrt_counts(const GroupTable &g) {
  std::vector<std::size_t> counts(g.order(), 0);
  for (Element f = 0; f < g.order(); ++f)
    ++counts[g.mul(f, f)];
  return counts;
}

std::size_t maxsqrt(const GroupTable &g) {
  auto c = sqrt_counts(g);
  return *std::max_element(c.begin(), c.end());
}

InnerInversion inverted_by_inner(const GroupTable &g) {
  InnerInversion r;
  std::vector<Element> inverted, predicted;
  for (Element x = 0; x < g.order(); ++x) {
    inverted.clear();
    for (Element y = 0; y < g.order(); ++y)
      if (g.conjugate(x, y) == g.inv(y))
        inverted.push_back(y);
    predicted.clear();
    const Element target = g.inv(g.mul(x, x));
    for (auto f : sqrt_set(g, target))
      predicted.push_back(g.mul(f, x));
    std::sort(predicted.begin(), predicted.end());
    if (predicted != inverted)
      r.identity_holds = false;
    if (inverted.size() > r.value) {
      r.value = inverted.size();
      r.witness = x;
    }
  }
  return r;
}

std::vector<Element> generalized_p_set(const GroupTable &g, const Automorphism &a,
                                       std::span<const Automorphism> factors) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    Element p = kIdentity;
    for (const auto &b : factors)
      p = g.mul(p, b(x));
    if (a(x) == p)
      out.push_back(x);
  }
  return out;
}

std::size_t func_count(const GroupTable &g, const Automorphism &a, const Automorphism &b) {
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x)
    c += a(x) == g.mul(x, b(x));
  return c;
}

TupleMax func_value(const GroupTable &g, const AutGroup &aut, double budget) {
  const double m = double(aut.order());
  require_budget(m * m * double(g.order()), budget, "Func");
  TupleMax best;
  std::vector<Element> rhs(g.order());
  for (std::size_t j = 0; j < aut.order(); ++j) {
    const auto &b = aut.elements[j];
    for (Element x = 0; x < g.order(); ++x)
      rhs[x] = g.mul(x, b(x));
    for (std::size_t i = 0; i < aut.order(); ++i) {
      const std::size_t c = count_matches(aut.elements[i], rhs);
      if (c > best.value) {
        best.value = c;
        best.witness = {i, j};
      }
    }
  }
  return best;
}

TupleMax lhat(const GroupTable &g, const AutGroup &aut, unsigned e, double budget,
              std::size_t max_aut) {
  check_lhat_args(aut, e, std::pow(double(aut.order()), e + 1) * double(g.order()), budget,
                  max_aut);
  TupleMax best;
  std::vector<Element> prod;
  for_each_tuple(aut.order(), e, [&](const std::vector<std::size_t> &betas) {
    tuple_products(g, pick(aut, betas), prod);
    for (std::size_t i = 0; i < aut.order(); ++i) {
      const std::size_t c = count_matches(aut.elements[i], prod);
      if (c > best.value) {
        best.value = c;
        best.witness = {i};
        best.witness.insert(best.witness.end(), betas.begin(), betas.end());
      }
    }
  });
  return best;
}

TupleMax lhat_cosetwise(const GroupTable &g, const AutGroup &aut, unsigned e, const Subgroup &n,
                        double budget, std::size_t max_aut) {
  check_lhat_args(aut, e, std::pow(double(aut.order()), e + 1) * double(g.order()) * (e + 1),
                  budget, max_aut);
  const auto split = split_cosets(g, n);
  TupleMax best;
  for_each_tuple(aut.order(), e, [&](const std::vector<std::size_t> &betas) {
    const auto bs = pick(aut, betas);
    for (std::size_t i = 0; i < aut.order(); ++i) {
      const std::size_t c = count_cosetwise(g, aut.elements[i], bs, n, split);
      if (c > best.value) {
        best.value = c;
        best.witness = {i};
        best.witness.insert(best.witness.end(), betas.begin(), betas.end());
      }
    }
  });
  return best;
}

CheckReport check_lE(GroupContext &ctx) {
  const auto &g = ctx.table();
  const auto &aut = ctx.aut();
  const std::size_t k = ctx.k();
  CheckTally t("lemma.lE");
  std::size_t tightest_gap = SIZE_MAX;
  for (long long e : {-1LL, 2LL, 3LL}) {
    const auto pw = power_table(g, e);
    for (std::size_t i = 0; i < aut.order(); ++i) {
      const auto &a = aut.elements[i];
      std::size_t fixed = 0, count = 0;
      for (Element x = 0; x < g.order(); ++x) {
        fixed += a(x) == x;
        count += a(x) == pw[x];
      }
      t.expect(count <= k * fixed,
               {{"alpha", i}, {"e", e}, {"L_e", count}, {"k", k}, {"fix", fixed}});
      if (count <= k * fixed)
        tightest_gap = std::min(tightest_gap, k * fixed - count);
    }
  }
  t.data()["k"] = k;
  t.data()["aut_order"] = aut.order();
  t.data()["tightest_gap"] = tightest_gap;
  return t.finish();
}

namespace {

std::size_t fixed_in(const Subgroup &n, const Automorphism &a) {
  std::size_t c = 0;
  for (auto x : n.members())
    c += a(x) == x;
  return c;
}

} // namespace

CheckReport check_lTwo(GroupContext &ctx) {
  const auto &g = ctx.table();
  const auto &aut = ctx.aut();
  CheckTally t("lemma.lTwo");
  for (const auto &n : ctx.characteristic_subgroups()) {
    const auto &q = ctx.quotient(n);
    for (std::size_t i = 0; i < aut.order(); ++i) {
      const auto &a = aut.elements[i];
      const std::size_t index = n.order() / fixed_in(n, a);
      const std::size_t l2q = l_count(q.table, induced_on_quotient(g, a, q), 2);
      const std::size_t l2 = l_count(g, a, 2);
      t.expect(l2 <= index * l2q, {{"alpha", i},
                                   {"N_order", n.order()},
                                   {"L2", l2},
                                   {"index_fix", index},
                                   {"L2_quotient", l2q}});
    }
  }
  t.data()["characteristic_subgroups"] = ctx.characteristic_subgroups().size();
  return t.finish();
}

CheckReport check_lThree(GroupContext &ctx) {
  const auto &g = ctx.table();
  const auto &aut = ctx.aut();
  CheckTally t("lemma.lThree");
  std::size_t skipped = 0;
  for (const auto &n : ctx.characteristic_subgroups()) {
    std::size_t lm1_n;
    try {
      if (n.is_trivial())
        lm1_n = 1;
      else if (n.is_whole())
        lm1_n = ctx.l(-1).value;
      else
        lm1_n = ctx.subgroup_context(n).l(-1).value;
    } catch (const AutCapExceeded &) {
      ++skipped;
      continue;
    }
    const auto &q = ctx.quotient(n);
    for (std::size_t i = 0; i < aut.order(); ++i) {
      const auto &a = aut.elements[i];
      const std::size_t index = n.order() / fixed_in(n, a);
      const std::size_t l3q = l_count(q.table, induced_on_quotient(g, a, q), 3);
      const std::size_t l3 = l_count(g, a, 3);
      t.expect(l3 <= index * lm1_n * l3q, {{"alpha", i},
                                           {"N_order", n.order()},
                                           {"L3", l3},
                                           {"index_fix", index},
                                           {"L-1_N", lm1_n},
                                           {"L3_quotient", l3q}});
    }
  }
  t.data()["skipped_subgroups"] = skipped;
  return t.finish();
}

CheckReport check_shiftCor(GroupContext &ctx) {
  const auto &g = ctx.table();
  const auto &aut = ctx.aut();
  CheckTally t("lemma.shiftCor");
  for (unsigned e : {2u, 3u}) {
    const auto pw = power_table(g, e);
    for (const auto &n : ctx.characteristic_subgroups()) {
      for (std::size_t i = 0; i < aut.order(); ++i) {
        const auto &a = aut.elements[i];
        for (Element x = 0; x < g.order(); ++x) {
          if (a(x) != pw[x])
            continue;
          for (auto m : n.members()) {
            // sh_{tau_x}^(e)(m) = m tau_x(m) ... tau_x^(e-1)(m)
            Element sh = kIdentity, term = m;
            for (unsigned j = 0; j < e; ++j) {
              sh = g.mul(sh, term);
              term = g.conjugate(x, term);
            }
            const Element mx = g.mul(m, x);
            const bool in_set = a(mx) == pw[mx];
            const bool predicted = a(m) == sh;
            t.expect(in_set == predicted, {{"alpha", i},
                                           {"e", e},
                                           {"N_order", n.order()},
                                           {"x", g.name(x)},
                                           {"n", g.name(m)},
                                           {"member", in_set},
                                           {"shift_equation", predicted}});
          }
        }
      }
    }
  }
  return t.finish();
}

CheckReport check_t_fibers(GroupContext &ctx) {
  const auto &g = ctx.table();
  const auto &aut = ctx.aut();
  CheckTally t("lemma.tFibers");
  std::vector<std::vector<Element>> fibers(g.order());
  std::vector<Element> coset;
  for (std::size_t i = 0; i < aut.order(); ++i) {
    const auto &a = aut.elements[i];
    for (auto &f : fibers)
      f.clear();
    std::vector<Element> fixed;
    for (Element x = 0; x < g.order(); ++x) {
      fibers[t_map(g, a, x)].push_back(x);
      if (a(x) == x)
        fixed.push_back(x);
    }
    for (Element x = 0; x < g.order(); ++x) {
      coset.clear();
      for (auto f : fixed)
        coset.push_back(g.mul(f, x));
      std::sort(coset.begin(), coset.end());
      t.expect(coset == fibers[t_map(g, a, x)],
               {{"alpha", i}, {"x", g.name(x)}, {"fiber_size", fibers[t_map(g, a, x)].size()},
                {"fix_order", fixed.size()}});
    }
  }
  return t.finish();
}

CheckReport check_shiftTwo(GroupContext &ctx, std::size_t max_order) {
  const auto &g = ctx.table();
  if (g.order() > max_order)
    return skipped_report("lemma.shiftTwo", "group order above " + std::to_string(max_order));
  const auto &aut = ctx.aut();
  CheckTally t("lemma.shiftTwo");
  const std::size_t n = g.order();
  std::vector<Element> values(n), fiber, predicted;
  for (Element c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < aut.order(); ++i) {
      const auto &a = aut.elements[i];
      for (Element x = 0; x < n; ++x)
        values[x] = f_map(g, c, a, x);
      for (Element g1 = 0; g1 < n; ++g1) {
        fiber.clear();
        for (Element x = 0; x < n; ++x)
          if (values[x] == values[g1])
            fiber.push_back(x);
        predicted.clear();
        // (tau_g1 tau_c a)(y) = y^-1
        for (Element y = 0; y < n; ++y)
          if (g.conjugate(g.mul(g1, c), a(y)) == g.inv(y))
            predicted.push_back(g.mul(y, g1));
        std::sort(predicted.begin(), predicted.end());
        t.expect(fiber == predicted, {{"c", g.name(c)},
                                      {"alpha", i},
                                      {"g1", g.name(g1)},
                                      {"fiber_size", fiber.size()},
                                      {"predicted_size", predicted.size()}});
      }
    }
  }
  return t.finish();
}

CheckReport check_sqrtProp(GroupContext &ctx) {
  const auto &g = ctx.table();
  CheckTally t("lemma.sqrtProp");
  const auto inner = inverted_by_inner(g);
  const std::size_t ms = ctx.maxsqrt();
  t.expect(inner.identity_holds, {{"reason", "P_-1(tau_x) != sqrt(x^-2) x for some x"}});
  t.expect(inner.value == ms, {{"inverted_by_inner", inner.value}, {"maxsqrt", ms}});
  if (g.is_abelian()) {
    std::size_t involutions_and_one = sqrt_counts(g)[kIdentity];
    t.expect(inner.value == involutions_and_one,
             {{"inverted_by_inner", inner.value}, {"square_roots_of_1", involutions_and_one}});
  }
  t.data()["maxsqrt"] = ms;
  t.data()["witness"] = g.name(inner.witness);
  if (ctx.complete()) {
    const std::size_t lm1 = ctx.l(-1).value;
    t.expect(lm1 == ms, {{"L-1", lm1}, {"maxsqrt", ms}, {"complete", true}});
    t.data()["complete"] = true;
  }
  return t.finish();
}

CheckReport check_func_gadget(GroupContext &ctx, double budget) {
  const auto &g = ctx.table();
  const auto &aut = ctx.aut();
  const double m = double(aut.order()), n = double(g.order());
  if (m * m * n * n > budget)
    return skipped_report("gadget.commute", "|Aut|^2 |G|^2 above budget");
  CheckTally t("gadget.commute");
  std::vector<char> in(g.order());
  std::vector<Element> members;
  for (std::size_t i = 0; i < aut.order(); ++i)
    for (std::size_t j = 0; j < aut.order(); ++j) {
      const auto &a = aut.elements[i];
      const auto &b = aut.elements[j];
      members.clear();
      for (Element x = 0; x < g.order(); ++x) {
        in[x] = a(x) == g.mul(x, b(x));
        if (in[x])
          members.push_back(x);
      }
      for (auto x : members)
        for (auto y : members) {
          if (!in[g.mul(x, y)])
            continue;
          const Element bx = b(x);
          t.expect(g.mul(y, bx) == g.mul(bx, y),
                   {{"alpha", i}, {"beta", j}, {"g", g.name(x)}, {"h", g.name(y)}});
        }
    }
  return t.finish();
}

CheckReport check_nonShift(GroupContext &ctx, double budget) {
  const auto &g = ctx.table();
  if (center(g).order() != 1 || ctx.solvable())
    throw PreconditionViolated("nonShift applies to centerless nonsolvable groups");
  const auto &aut = ctx.aut();
  const double m = double(aut.order());
  require_budget(m * m * m, budget, "nonShift");
  CheckTally t("lemma.nonShift");
  std::size_t largest = 0;
  std::vector<Element> xb(g.order());
  for (std::size_t j = 0; j < aut.order(); ++j) {
    const auto &b = aut.elements[j];
    for (Element x = 0; x < g.order(); ++x)
      xb[x] = g.mul(x, b(x));
    for (std::size_t l = 0; l < aut.order(); ++l) {
      const auto &c = aut.elements[l];
      for (std::size_t i = 0; i < aut.order(); ++i) {
        const auto &a = aut.elements[i];
        // Count solutions only until a violating x shows up.
        std::size_t solutions = 0;
        bool violated = false;
        for (Element x = 0; x < g.order(); ++x) {
          if (a(x) != g.mul(xb[x], c(x))) {
            violated = true;
            break;
          }
          ++solutions;
        }
        largest = std::max(largest, solutions);
        t.expect(violated, {{"alpha", i}, {"beta", j}, {"gamma", l}});
      }
    }
  }
  t.data()["longest_prefix_of_solutions"] = largest;
  return t.finish();
}

CheckReport check_lhat_routes(GroupContext &ctx, unsigned e) {
  const auto &g = ctx.table();
  const auto &aut = ctx.aut();
  const std::string name = "lemma.lhatRoutes" + std::to_string(e);
  const auto &chars = ctx.characteristic_subgroups();
  double work = std::pow(double(aut.order()), e + 1) * double(g.order()) * (e + 2) *
                double(chars.size());
  if (aut.order() > ctx.limits().lhat_max_aut || work > ctx.limits().lhat_budget)
    return skipped_report(name, "tuple enumeration above budget");
  CheckTally t(name);
  std::vector<Element> prod;
  std::size_t best = 0;
  for (const auto &n : chars) {
    const auto split = split_cosets(g, n);
    for_each_tuple(aut.order(), e, [&](const std::vector<std::size_t> &betas) {
      const auto bs = pick(aut, betas);
      tuple_products(g, bs, prod);
      for (std::size_t i = 0; i < aut.order(); ++i) {
        const std::size_t direct = count_matches(aut.elements[i], prod);
        const std::size_t cosetwise = count_cosetwise(g, aut.elements[i], bs, n, split);
        best = std::max(best, direct);
        t.expect(direct == cosetwise, {{"alpha", i},
                                       {"betas", betas},
                                       {"N_order", n.order()},
                                       {"direct", direct},
                                       {"cosetwise", cosetwise}});
      }
    });
  }
  t.data()["lhat"] = best;
  return t.finish();
}

CheckReport check_aut_invariants(GroupContext &ctx) {
  const auto &g = ctx.table();
  const auto &aut = ctx.aut();
  CheckTally t("aut.invariants");
  const std::size_t z = center(g).order();
  t.expect(aut.inner_count * z == g.order(),
           {{"inner_count", aut.inner_count}, {"center", z}, {"order", g.order()}});
  t.expect(aut.order() % aut.inner_count == 0,
           {{"aut_order", aut.order()}, {"inner_count", aut.inner_count}});
  t.expect(aut.elements[0].is_identity(), {{"reason", "elements[0] is not the identity"}});

  std::set<std::vector<Element>> images;
  for (const auto &a : aut.elements)
    images.emplace(a.image().begin(), a.image().end());
  auto contains = [&](const Automorphism &a) {
    return images.count(std::vector<Element>(a.image().begin(), a.image().end())) > 0;
  };
  const double m = double(aut.order()), n = double(g.order());
  const std::size_t partners = m * m * n <= 5e7 ? aut.order() : std::min<std::size_t>(16, aut.order());
  for (std::size_t i = 0; i < aut.order(); ++i) {
    t.expect(contains(aut.elements[i].inverse()), {{"alpha", i}, {"reason", "inverse missing"}});
    for (std::size_t j = 0; j < partners; ++j)
      t.expect(contains(aut.elements[i].compose(aut.elements[j])),
               {{"alpha", i}, {"beta", j}, {"reason", "composition missing"}});
  }
  // a tau_x a^-1 = tau_{a(x)}, so inner automorphisms form a normal subset.
  std::set<std::vector<Element>> inner;
  for (Element x = 0; x < g.order(); ++x) {
    auto tx = Automorphism::inner(g, x);
    inner.emplace(tx.image().begin(), tx.image().end());
  }
  t.expect(inner.size() == aut.inner_count,
           {{"distinct_inner", inner.size()}, {"inner_count", aut.inner_count}});
  if (m * n * n <= 5e7) {
    for (std::size_t i = 0; i < aut.order(); ++i) {
      const auto &a = aut.elements[i];
      const auto ainv = a.inverse();
      for (Element x = 0; x < g.order(); ++x) {
        auto c = a.compose(Automorphism::inner(g, x)).compose(ainv);
        t.expect(inner.count(std::vector<Element>(c.image().begin(), c.image().end())) > 0,
                 {{"alpha", i}, {"x", g.name(x)}, {"reason", "conjugate of inner not inner"}});
      }
    }
  }

  const unsigned mo = mao(aut);
  if (g.order() > 1) {
    const bool elementary = is_elementary_abelian(g);
    t.expect(mo <= g.order() - 1, {{"mao", mo}, {"order", g.order()}});
    t.expect((mo == g.order() - 1) == elementary,
             {{"mao", mo}, {"order", g.order()}, {"elementary_abelian", elementary}});
  }
  if (ctx.complete()) {
    for (std::size_t i = 0; i < aut.order(); ++i)
      t.expect(inner.count(std::vector<Element>(aut.elements[i].image().begin(),
                                                aut.elements[i].image().end())) > 0,
               {{"alpha", i}, {"reason", "complete group with outer automorphism"}});
  }
  t.data()["aut_order"] = aut.order();
  t.data()["inner_count"] = aut.inner_count;
  t.data()["mao"] = mo;
  return t.finish();
}

} // namespace grouplab
