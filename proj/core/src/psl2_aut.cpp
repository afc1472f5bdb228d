#include "grouplab/psl2_aut.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

// Matrix entries as a 2x2 array for the arithmetic below.
struct M2 {
  Fq a, b, c, d;
};

M2 mat_mul(const FqField &f, const M2 &x, const M2 &y) {
  return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

M2 mat_of(const GammaL2Element &x) { return {x.a, x.b, x.c, x.d}; }

M2 frob_mat(const GammaL2 &g, const M2 &x, unsigned m) {
  return {g.frob(x.a, m), g.frob(x.b, m), g.frob(x.c, m), g.frob(x.d, m)};
}

bool psi_squared_trivial(const GammaL2 &g, unsigned m) { return (2 * m) % g.K() == 0; }

} // namespace

GammaL2::GammaL2(std::uint32_t q) : q_(q) {
  if (q > (1u << 13))
    throw FieldTooLarge("PGammaL(2,q) limited to q <= 2^13");
  field_ = FqField::of_order(q);
  frob_.assign(K(), std::vector<Fq>(q));
  for (unsigned m = 0; m < K(); ++m)
    for (Fq x = 0; x < q; ++x)
      frob_[m][x] = field_->frob(x, m);
}

std::uint64_t GammaL2::order() const {
  const std::uint64_t q = q_;
  return (q * q * q - q) * K();
}

GammaL2Element GammaL2::normalize(Fq a, Fq b, Fq c, Fq d, unsigned frob) const {
  const auto &f = *field_;
  if (f.sub(f.mul(a, d), f.mul(b, c)) == 0)
    throw PreconditionViolated("singular matrix");
  const Fq s = f.inv(d != 0 ? d : b);
  return {f.mul(a, s), f.mul(b, s), f.mul(c, s), f.mul(d, s), frob % K()};
}

GammaL2Element GammaL2::mul(const GammaL2Element &x, const GammaL2Element &y) const {
  const M2 p = mat_mul(*field_, mat_of(x), frob_mat(*this, mat_of(y), x.frob));
  return normalize(p.a, p.b, p.c, p.d, x.frob + y.frob);
}

GammaL2Element GammaL2::inv(const GammaL2Element &x) const {
  const auto &f = *field_;
  const unsigned back = (K() - x.frob) % K();
  const M2 adj{x.d, f.neg(x.b), f.neg(x.c), x.a};
  const M2 r = frob_mat(*this, adj, back);
  return normalize(r.a, r.b, r.c, r.d, back);
}

GammaL2Element GammaL2::random(std::mt19937_64 &rng) const {
  std::uniform_int_distribution<Fq> entry(0, q_ - 1);
  std::uniform_int_distribution<unsigned> power(0, K() - 1);
  const auto &f = *field_;
  for (;;) {
    Fq a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    if (f.sub(f.mul(a, d), f.mul(b, c)) != 0)
      return normalize(a, b, c, d, power(rng));
  }
}

std::vector<GammaL2Element> GammaL2::generators() const {
  const auto &f = *field_;
  std::vector<GammaL2Element> gens{normalize(1, 1, 0, 1, 0),
                                   normalize(f.primitive(), 0, 0, 1, 0),
                                   normalize(0, f.neg(1), 1, 0, 0)};
  if (K() > 1)
    gens.push_back(GammaL2Element{1, 0, 0, 1, 1});
  return gens;
}

std::uint64_t GammaL2::code(const GammaL2Element &x) const {
  const std::uint64_t q = q_;
  return (((std::uint64_t(x.frob) * 2 + (x.d == 1 ? 1 : 0)) * q + x.a) * q + x.b) * q + x.c;
}

std::uint64_t GammaL2::code_space() const {
  const std::uint64_t q = q_;
  return 2 * std::uint64_t(K()) * q * q * q;
}

GammaL2Element cube_generic(const GammaL2 &g, const GammaL2Element &b) {
  return g.mul(g.mul(b, b), b);
}

GammaL2Element cube_formula(const GammaL2 &g, const GammaL2Element &b) {
  if (!psi_squared_trivial(g, b.frob))
    return cube_generic(g, b);
  const auto &f = g.field();
  const unsigned m = b.frob;
  const Fq e = b.a, ff = b.b, gg = b.c, h = b.d;
  const Fq pe = g.frob(e, m), pf = g.frob(ff, m), pg = g.frob(gg, m), ph = g.frob(h, m);
  auto sum4 = [&](Fq w, Fq x, Fq y, Fq z) { return f.add(f.add(w, x), f.add(y, z)); };
  const Fq top_left = sum4(f.mul(f.mul(e, e), pe), f.mul(f.mul(e, ff), pg),
                           f.mul(f.mul(e, gg), pf), f.mul(f.mul(ff, gg), ph));
  const Fq bottom_left = sum4(f.mul(f.mul(e, gg), pe), f.mul(f.mul(e, h), pg),
                              f.mul(f.mul(gg, gg), pf), f.mul(f.mul(gg, h), ph));
  const Fq top_right = sum4(f.mul(f.mul(e, ff), pe), f.mul(f.mul(ff, ff), pg),
                            f.mul(f.mul(e, h), pf), f.mul(f.mul(ff, h), ph));
  const Fq bottom_right = sum4(f.mul(f.mul(ff, gg), pe), f.mul(f.mul(ff, h), pg),
                               f.mul(f.mul(gg, h), pf), f.mul(f.mul(h, h), ph));
  return g.normalize(top_left, top_right, bottom_left, bottom_right, m);
}

GammaL2Element conj_generic(const GammaL2 &g, const GammaL2Element &a, const GammaL2Element &b) {
  return g.mul(g.mul(a, b), g.inv(a));
}

GammaL2Element conj_formula(const GammaL2 &g, const GammaL2Element &a, const GammaL2Element &b) {
  // (A sigma(B) psi(adj A), psi); the Galois group is abelian, so this holds for every psi.
  const auto &f = g.field();
  const unsigned s = a.frob, m = b.frob;
  const Fq sa = g.frob(b.a, s), sb = g.frob(b.b, s), sc = g.frob(b.c, s), sd = g.frob(b.d, s);
  const Fq pa = g.frob(a.a, m), pb = g.frob(a.b, m), pc = g.frob(a.c, m), pd = g.frob(a.d, m);
  auto lin = [&](Fq x, Fq y, Fq z, Fq w) { return f.add(f.mul(x, y), f.mul(z, w)); };
  // A sigma(B) = [[u1, u2], [u3, u4]]
  const Fq u1 = lin(a.a, sa, a.b, sc), u2 = lin(a.a, sb, a.b, sd);
  const Fq u3 = lin(a.c, sa, a.d, sc), u4 = lin(a.c, sb, a.d, sd);
  const Fq top_left = f.sub(f.mul(u1, pd), f.mul(u2, pc));
  const Fq top_right = f.sub(f.mul(u2, pa), f.mul(u1, pb));
  const Fq bottom_left = f.sub(f.mul(u3, pd), f.mul(u4, pc));
  const Fq bottom_right = f.sub(f.mul(u4, pa), f.mul(u3, pb));
  return g.normalize(top_left, top_right, bottom_left, bottom_right, m);
}

std::vector<unsigned> psi_constraint_filter(std::uint32_t q) {
  const unsigned k = FqField::of_order(q)->degree();
  if (k % 2 == 0)
    return {0, k / 2};
  return {0};
}

GoodCount count_good(const GammaL2 &g, const GammaL2Element &conjugator) {
  GoodCount r;
  r.q = g.q();
  r.conjugator = conjugator;
  g.for_each([&](const GammaL2Element &b) {
    if (conj_formula(g, conjugator, b) == cube_formula(g, b)) {
      ++r.count;
      if (!psi_squared_trivial(g, b.frob))
        ++r.outside_filter;
    }
  });
  return r;
}

std::uint64_t count_good_filtered(const GammaL2 &g, const GammaL2Element &conjugator) {
  std::uint64_t count = 0;
  for (unsigned m : psi_constraint_filter(g.q()))
    g.for_each_with_frob(m, [&](const GammaL2Element &b) {
      count += conj_formula(g, conjugator, b) == cube_formula(g, b);
    });
  return count;
}

std::vector<GammaL2Element> class_representatives(const GammaL2 &g, std::uint32_t max_q) {
  if (g.q() > max_q)
    throw ScanTooLarge("class scan limited to q <= " + std::to_string(max_q));
  const auto gens = g.generators();
  std::vector<GammaL2Element> inv_gens;
  for (const auto &s : gens)
    inv_gens.push_back(g.inv(s));
  std::vector<bool> seen(g.code_space(), false);
  std::vector<GammaL2Element> reps, stack;
  g.for_each([&](const GammaL2Element &x) {
    if (seen[g.code(x)])
      return;
    reps.push_back(x);
    seen[g.code(x)] = true;
    stack.push_back(x);
    while (!stack.empty()) {
      const auto y = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto z = g.mul(g.mul(gens[i], y), inv_gens[i]);
        if (!seen[g.code(z)]) {
          seen[g.code(z)] = true;
          stack.push_back(z);
        }
      }
    }
  });
  return reps;
}

L3InnerMax l3_inner_max(std::uint32_t q, std::uint32_t max_q) {
  GammaL2 g(q);
  L3InnerMax best;
  const auto reps = class_representatives(g, max_q);
  best.classes = reps.size();
  for (const auto &a : reps) {
    const auto c = count_good_filtered(g, a);
    if (c > best.value) {
      best.value = c;
      best.witness = a;
    }
  }
  return best;
}

int good_type(const GammaL2 &g, const GammaL2Element &b) {
  if (b.b == 0 || b.c == 0)
    return 1;
  const auto &f = g.field();
  const unsigned m = b.frob;
  const Fq e = b.a, ff = b.b, gg = b.c, h = b.d;
  const Fq corner =
      f.add(f.add(f.mul(f.mul(ff, gg), g.frob(e, m)), f.mul(f.mul(ff, h), g.frob(gg, m))),
            f.add(f.mul(f.mul(gg, h), g.frob(ff, m)), f.mul(f.mul(h, h), g.frob(h, m))));
  return corner == 0 ? 2 : 3;
}

GroupTable gammaL2_table(const GammaL2 &g) {
  check_table_order(g.order());
  std::vector<GammaL2Element> elems;
  elems.reserve(g.order());
  elems.push_back(g.identity());
  g.for_each([&](const GammaL2Element &x) {
    if (!(x == g.identity()))
      elems.push_back(x);
  });
  std::unordered_map<std::uint64_t, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(g.code(elems[i]), static_cast<Element>(i));
  const std::size_t n = elems.size();
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mul[i * n + j] = index.at(g.code(g.mul(elems[i], elems[j])));
  const auto &f = g.field();
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto &x : elems)
    names.push_back("[" + f.to_string(x.a) + "," + f.to_string(x.b) + ";" + f.to_string(x.c) +
                    "," + f.to_string(x.d) + "]F^" + std::to_string(x.frob));
  std::vector<Element> gens;
  for (const auto &s : g.generators())
    gens.push_back(index.at(g.code(s)));
  return GroupTable(std::move(mul), std::move(names), std::move(gens));
}

CheckReport check_gammaL2_formulas(std::uint32_t q, std::size_t trials, std::uint64_t seed) {
  GammaL2 g(q);
  CheckTally t("psl2.formulas");
  std::mt19937_64 rng(seed);
  const auto filter = psi_constraint_filter(q);
  std::uniform_int_distribution<std::size_t> pick(0, filter.size() - 1);
  auto show = [&](const GammaL2Element &x) {
    return nlohmann::json{x.a, x.b, x.c, x.d, x.frob};
  };
  for (std::size_t i = 0; i < trials; ++i) {
    auto b = g.random(rng);
    b.frob = filter[pick(rng)];
    t.expect(cube_formula(g, b) == cube_generic(g, b), {{"formula", "cube"}, {"b", show(b)}});
    const auto a = g.random(rng);
    const auto c = g.random(rng);
    t.expect(conj_formula(g, a, c) == conj_generic(g, a, c),
             {{"formula", "conjugation"}, {"a", show(a)}, {"b", show(c)}});
  }
  std::uint64_t counted = 0;
  g.for_each([&](const GammaL2Element &) { ++counted; });
  t.expect(counted == g.order(), {{"enumerated", counted}, {"order", g.order()}});
  for (int i = 0; i < 10000; ++i) {
    const auto x = g.random(rng), y = g.random(rng), z = g.random(rng);
    t.expect(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)),
             {{"reason", "associativity"}, {"x", show(x)}, {"y", show(y)}, {"z", show(z)}});
    t.expect(g.mul(x, g.inv(x)) == g.identity(), {{"reason", "inverse"}, {"x", show(x)}});
  }
  t.data()["q"] = q;
  t.data()["order"] = g.order();
  t.data()["trials"] = trials;
  auto r = t.finish();
  r.group = "PGammaL(2," + std::to_string(q) + ")";
  return r;
}

} // namespace grouplab
