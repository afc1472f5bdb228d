#include "grouplab/wreath_socle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "grouplab/errors.hpp"
#include "grouplab/subgroups.hpp"

namespace grouplab {

namespace {

Permutation identity_perm(unsigned n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool is_identity_perm(const Permutation &p) {
  for (std::uint32_t i = 0; i < p.size(); ++i)
    if (p[i] != i)
      return false;
  return true;
}

// Mixed-radix increment over B^n; false once every tuple has been visited.
bool next_tuple(std::vector<Element> &t, std::size_t radix) {
  for (auto &x : t) {
    if (++x < radix)
      return true;
    x = 0;
  }
  return false;
}

std::uint64_t checked_power(std::uint64_t base, unsigned n, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > cap / std::max<std::uint64_t>(base, 1))
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

nlohmann::json show(const WreathElement &x) {
  return {{"tuple", x.tuple}, {"perm", x.perm}};
}

Automorphism random_inner(const GroupTable &g, std::mt19937_64 &rng) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
  return Automorphism::inner(g, pick(rng));
}

} // namespace

std::vector<Element> permute_tuple(const Permutation &sigma, const std::vector<Element> &u) {
  std::vector<Element> r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    r[sigma[i]] = u[i];
  return r;
}

Permutation compose_perm(const Permutation &a, const Permutation &b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[b[i]];
  return r;
}

Permutation invert_perm(const Permutation &a) {
  Permutation r(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i)
    r[a[i]] = i;
  return r;
}

Permutation random_perm(unsigned n, std::mt19937_64 &rng) {
  auto p = identity_perm(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Permutation cycle_perm(unsigned n) {
  Permutation p(n);
  for (unsigned i = 0; i < n; ++i)
    p[i] = (i + 1) % n;
  return p;
}

WreathProduct::WreathProduct(GroupTable base, unsigned n) : base_(std::move(base)), n_(n) {
  if (n == 0)
    throw PreconditionViolated("wreath product needs n >= 1");
}

std::uint64_t WreathProduct::order() const {
  const auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = checked_power(base_.order(), n_, cap);
  for (unsigned i = 2; i <= n_; ++i) {
    if (r > cap / i)
      return cap;
    r *= i;
  }
  return r;
}

WreathElement WreathProduct::identity() const {
  return {std::vector<Element>(n_, kIdentity), identity_perm(n_)};
}

WreathElement WreathProduct::mul(const WreathElement &x, const WreathElement &y) const {
  WreathElement r;
  r.tuple.resize(n_);
  // (x.perm(y.tuple))_i = y.tuple[x.perm^-1(i)]
  for (unsigned j = 0; j < n_; ++j)
    r.tuple[x.perm[j]] = base_.mul(x.tuple[x.perm[j]], y.tuple[j]);
  r.perm = compose_perm(x.perm, y.perm);
  return r;
}

WreathElement WreathProduct::inv(const WreathElement &x) const {
  // (t, s)^-1 = (s^-1(t^-1), s^-1)
  const auto back = invert_perm(x.perm);
  std::vector<Element> t(n_);
  for (unsigned i = 0; i < n_; ++i)
    t[i] = base_.inv(x.tuple[i]);
  return {permute_tuple(back, t), back};
}

WreathElement WreathProduct::power(const WreathElement &x, unsigned e) const {
  auto r = identity();
  for (unsigned i = 0; i < e; ++i)
    r = mul(r, x);
  return r;
}

WreathElement WreathProduct::conjugate(const WreathElement &x, const WreathElement &y) const {
  return mul(mul(x, y), inv(x));
}

WreathElement WreathProduct::random(std::mt19937_64 &rng) const {
  auto r = random_base(rng);
  r.perm = random_perm(n_, rng);
  return r;
}

WreathElement WreathProduct::random_base(std::mt19937_64 &rng) const {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(base_.order() - 1));
  WreathElement r = identity();
  for (auto &x : r.tuple)
    x = pick(rng);
  return r;
}

std::vector<WreathElement> WreathProduct::elements(std::uint64_t cap) const {
  if (order() > cap)
    throw SizeExceeded("wreath product of order " + std::to_string(order()) +
                       " exceeds cap " + std::to_string(cap));
  std::vector<WreathElement> out;
  out.reserve(order());
  auto perm = identity_perm(n_);
  do {
    std::vector<Element> t(n_, kIdentity);
    do {
      // Lexicographic: the first coordinate varies slowest.
      std::vector<Element> lex(t.rbegin(), t.rend());
      out.push_back({std::move(lex), perm});
    } while (next_tuple(t, base_.order()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

GroupTable WreathProduct::table() const {
  const auto elems = elements(kMaxTableOrder);
  std::map<WreathElement, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], static_cast<Element>(i));
  const std::size_t n = elems.size();
  std::vector<Element> mul_table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mul_table[i * n + j] = index.at(mul(elems[i], elems[j]));
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto &x : elems) {
    std::string s = "(";
    for (unsigned i = 0; i < n_; ++i)
      s += (i ? "," : "") + base_.name(x.tuple[i]);
    s += ";" + cycle_notation(x.perm) + ")";
    names.push_back(std::move(s));
  }
  // Base generators in coordinate 0, plus transposition and n-cycle.
  std::vector<Element> gens;
  for (Element b : base_.generators()) {
    auto x = identity();
    x.tuple[0] = b;
    gens.push_back(index.at(x));
  }
  if (n_ > 1) {
    auto swap = identity();
    std::swap(swap.perm[0], swap.perm[1]);
    gens.push_back(index.at(swap));
    auto cyc = identity();
    cyc.perm = cycle_perm(n_);
    gens.push_back(index.at(cyc));
  }
  return GroupTable(std::move(mul_table), std::move(names), std::move(gens));
}

std::vector<unsigned> opportune_set(const Permutation &sa, const Permutation &sb, unsigned i) {
  const auto sa_inv = invert_perm(sa);
  const auto sb_inv = invert_perm(sb);
  std::vector<unsigned> o{i, sa_inv[i], sb_inv[i], sb_inv[sb_inv[i]]};
  std::sort(o.begin(), o.end());
  o.erase(std::unique(o.begin(), o.end()), o.end());
  return o;
}

OpportuneFamily opportune_family(const Permutation &sigma_alpha, const Permutation &sigma_beta) {
  if (sigma_alpha.size() != sigma_beta.size())
    throw PreconditionViolated("permutations on different degrees");
  OpportuneFamily f;
  f.n = static_cast<unsigned>(sigma_alpha.size());
  f.sigma_alpha = sigma_alpha;
  f.sigma_beta = sigma_beta;
  for (unsigned i = 0; i < f.n; ++i)
    if (sigma_alpha[i] != i || sigma_beta[i] != i)
      f.opportune.push_back(i);
  const auto sa_inv = invert_perm(sigma_alpha);
  const auto sb_inv = invert_perm(sigma_beta);
  std::set<unsigned> pool(f.opportune.begin(), f.opportune.end());
  while (!pool.empty()) {
    const unsigned i = *pool.begin();
    std::vector<unsigned> omega{i, sa_inv[i], sb_inv[i], sb_inv[sb_inv[i]]};
    std::sort(omega.begin(), omega.end());
    omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
    for (unsigned j : omega) {
      pool.erase(j);
      pool.erase(sigma_alpha[j]);
      pool.erase(sigma_beta[j]);
      pool.erase(sigma_beta[sigma_beta[j]]);
    }
    f.family.push_back(std::move(omega));
    f.anchors.push_back(i);
  }
  return f;
}

bool ambient_cube_condition(const WreathProduct &w, const WreathElement &alpha,
                            const WreathElement &beta, const WreathElement &k) {
  const auto kb = w.mul(k, beta);
  return w.conjugate(alpha, kb) == w.power(kb, 3);
}

bool coordinate_condition(const WreathProduct &w, const WreathElement &alpha,
                          const WreathElement &beta, const WreathElement &k) {
  if (!is_identity_perm(k.perm))
    throw PermNotTrivial("k must lie in the base group");
  if (!(w.conjugate(alpha, beta) == w.power(beta, 3)))
    throw PreconditionViolated("alpha does not cube beta");
  const auto &b = w.base();
  const auto sa_inv = invert_perm(alpha.perm);
  const auto sb_inv = invert_perm(beta.perm);
  for (unsigned i = 0; i < w.n(); ++i) {
    const unsigned j = sb_inv[i];
    const Element lhs = b.conjugate(alpha.tuple[i], k.tuple[sa_inv[i]]);
    const Element mid = b.conjugate(beta.tuple[i], k.tuple[j]);
    const Element last = b.conjugate(b.mul(beta.tuple[i], beta.tuple[j]), k.tuple[sb_inv[j]]);
    if (lhs != b.mul(b.mul(k.tuple[i], mid), last))
      return false;
  }
  return true;
}

CDetermination c_determination_ratio(const std::vector<std::vector<Element>> &k_members,
                                     const std::vector<std::vector<Element>> &k_beta_members,
                                     const std::vector<unsigned> &index_set,
                                     std::size_t s_order, unsigned n) {
  if (n > 3)
    throw SizeExceeded("C-determination limited to n <= 3");
  for (const auto &t : k_members)
    for (Element x : t)
      if (x >= 120)
        throw SizeExceeded("C-determination limited to |B| <= 120");
  CDetermination r;
  r.index_set = index_set;
  r.k = k_members.size();
  r.k_beta = k_beta_members.size();
  std::map<std::vector<Element>, std::size_t> fibers;
  for (const auto &t : k_beta_members) {
    std::vector<Element> key;
    for (unsigned i : index_set)
      key.push_back(t.at(i));
    r.c = std::max(r.c, ++fibers[key]);
  }
  r.bound = double(r.c) * double(r.k) /
            std::pow(double(s_order), double(n) - double(index_set.size()));
  r.holds = double(r.k_beta) <= r.bound * (1 + 1e-12);
  return r;
}

std::vector<std::vector<Element>> k_beta_members(const WreathProduct &w, const WreathElement &alpha,
                                                 const WreathElement &beta) {
  if (checked_power(w.base().order(), w.n(), 1'000'000) > 1'000'000)
    throw SizeExceeded("K_beta scan limited to |B|^n <= 10^6");
  std::vector<std::vector<Element>> out;
  auto k = w.identity();
  do {
    if (ambient_cube_condition(w, alpha, beta, k))
      out.push_back(k.tuple);
  } while (next_tuple(k.tuple, w.base().order()));
  std::sort(out.begin(), out.end());
  return out;
}

NcycleCount ncycle_inversion_count(const GroupTable &base, const std::vector<Automorphism> &alphas) {
  const unsigned n = static_cast<unsigned>(alphas.size());
  if (n == 0)
    throw PreconditionViolated("need at least one coordinate automorphism");
  if (checked_power(base.order(), n, 1'000'000) > 1'000'000)
    throw SizeExceeded("n-cycle scan limited to |B|^n <= 10^6");
  NcycleCount r;
  // alpha(s)_i = a_i(s_{i-1}) with s_0 read as s_n.
  std::vector<Element> s(n, kIdentity);
  do {
    bool inverted = true;
    for (unsigned i = 0; i < n && inverted; ++i)
      inverted = alphas[i](s[(i + n - 1) % n]) == base.inv(s[i]);
    if (inverted) {
      ++r.brute;
      r.members.push_back(s);
    }
  } while (next_tuple(s, base.order()));
  std::sort(r.members.begin(), r.members.end());

  std::vector<std::vector<Element>> propagated;
  for (Element s1 = 0; s1 < base.order(); ++s1) {
    std::vector<Element> t{s1};
    for (unsigned i = 1; i < n; ++i)
      t.push_back(base.inv(alphas[i](t.back())));
    if (alphas[0](t.back()) == base.inv(s1))
      propagated.push_back(std::move(t));
  }
  r.recursion = propagated.size();
  std::sort(propagated.begin(), propagated.end());
  r.agree = propagated == r.members;
  return r;
}

std::size_t coset_survivor_count(const GroupTable &base, Element kappa, const Automorphism &a,
                                 const Automorphism &b) {
  const Element twist = base.mul(kappa, b(kappa));
  std::size_t count = 0;
  for (Element s = 0; s < base.order(); ++s) {
    const Element rhs =
        base.mul(base.mul(s, base.conjugate(kappa, b(s))), base.conjugate(twist, b(b(s))));
    count += a(s) == rhs;
  }
  return count;
}

CosetSurvivors coset_survivor_fraction(const GroupTable &base,
                                       const std::vector<CoordinateTriple> &coordinates) {
  CosetSurvivors r;
  r.base_order = base.order();
  r.bound_applies = center(base).is_trivial() && !is_solvable(base);
  r.fraction = 1;
  for (const auto &c : coordinates) {
    const auto n = coset_survivor_count(base, c.kappa, c.alpha, c.beta);
    r.counts.push_back(n);
    r.fraction *= double(n) / double(base.order());
    if (r.bound_applies && n > base.order() - 1)
      r.holds = false;
  }
  return r;
}

CheckReport check_opportune(unsigned n, std::size_t trials, std::uint64_t seed) {
  CheckTally t("wreath.opportune");
  std::mt19937_64 rng(seed);
  std::size_t min_slack = std::numeric_limits<std::size_t>::max();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto sa = random_perm(n, rng);
    auto sb = random_perm(n, rng);
    // Sparse pairs so that M ranges widely.
    if (trial % 3 == 1) {
      sa = identity_perm(n);
      sb = identity_perm(n);
      const unsigned moved = std::uniform_int_distribution<unsigned>(0, n)(rng);
      for (unsigned i = 0; i + 1 < moved; i += 2)
        std::swap(sb[i], sb[i + 1]);
    } else if (trial % 3 == 2) {
      sa = cycle_perm(n);
      sb = identity_perm(n);
    }
    const auto f = opportune_family(sa, sb);
    const std::size_t m = f.opportune.size();
    const std::size_t need = (m + 15) / 16;
    std::vector<char> used(n, 0);
    bool disjoint = true, shaped = f.anchors.size() == f.family.size();
    for (std::size_t j = 0; j < f.family.size() && shaped; ++j) {
      const unsigned anchor = f.anchors[j];
      shaped = f.family[j] == opportune_set(sa, sb, anchor) &&
               std::binary_search(f.opportune.begin(), f.opportune.end(), anchor);
      for (unsigned i : f.family[j]) {
        disjoint = disjoint && !used[i];
        used[i] = 1;
      }
    }
    const bool deterministic = opportune_family(sa, sb).family == f.family;
    t.expect(disjoint && shaped && deterministic && f.family.size() >= need,
             {{"trial", trial}, {"M", m}, {"family", f.family.size()}, {"need", need},
              {"disjoint", disjoint}, {"shaped", shaped}, {"deterministic", deterministic}});
    if (f.family.size() >= need)
      min_slack = std::min(min_slack, f.family.size() - need);
  }
  t.data()["n"] = n;
  t.data()["trials"] = trials;
  t.data()["min_family_minus_bound"] = min_slack;
  return t.finish();
}

CheckReport check_coordinate_condition(const GroupTable &base, unsigned n, std::size_t trials,
                                       std::uint64_t seed, const Permutation &sigma_beta) {
  CheckTally t("wreath.coordinate");
  WreathProduct w(base, n);
  const auto elems = w.elements();
  std::vector<std::pair<std::size_t, std::size_t>> pairs; // (alpha, beta)
  for (std::size_t bi = 0; bi < elems.size(); ++bi) {
    if (!sigma_beta.empty() && elems[bi].perm != sigma_beta)
      continue;
    const auto cube = w.power(elems[bi], 3);
    for (std::size_t ai = 0; ai < elems.size(); ++ai)
      if (w.conjugate(elems[ai], elems[bi]) == cube)
        pairs.emplace_back(ai, bi);
  }
  if (pairs.empty())
    throw PreconditionViolated("no cubed element with the requested permutation");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  std::size_t members = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto [ai, bi] = pairs[pick(rng)];
    const auto k = w.random_base(rng);
    const bool coord = coordinate_condition(w, elems[ai], elems[bi], k);
    const bool ambient = ambient_cube_condition(w, elems[ai], elems[bi], k);
    members += ambient;
    t.expect(coord == ambient, {{"alpha", show(elems[ai])}, {"beta", show(elems[bi])},
                                {"k", show(k)}, {"coordinate", coord}, {"ambient", ambient}});
  }
  t.data()["n"] = n;
  t.data()["cubing_pairs"] = pairs.size();
  t.data()["k_in_K_beta"] = members;
  return t.finish();
}

CheckReport check_ncycle(const GroupTable &base, unsigned n, std::size_t trials,
                         std::uint64_t seed) {
  CheckTally t("wreath.ncycle");
  std::mt19937_64 rng(seed);
  std::size_t largest = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Automorphism> alphas;
    for (unsigned i = 0; i < n; ++i)
      alphas.push_back(trial == 0 ? Automorphism::identity(base) : random_inner(base, rng));
    const auto r = ncycle_inversion_count(base, alphas);
    largest = std::max(largest, r.brute);
    t.expect(r.agree && r.brute <= base.order(),
             {{"trial", trial}, {"brute", r.brute}, {"recursion", r.recursion}});
  }
  t.data()["n"] = n;
  t.data()["max_count"] = largest;
  t.data()["base_order"] = base.order();
  return t.finish();
}

CheckReport check_coset_survivors(const GroupTable &base, std::size_t trials, std::uint64_t seed) {
  CheckTally t("wreath.cosetSurvivors");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(base.order() - 1));
  std::vector<CoordinateTriple> coords;
  coords.push_back({kIdentity, Automorphism::identity(base), Automorphism::identity(base)});
  for (std::size_t i = 1; i < trials; ++i)
    coords.push_back({pick(rng), random_inner(base, rng), random_inner(base, rng)});
  const auto r = coset_survivor_fraction(base, coords);
  std::size_t largest = 0;
  for (std::size_t i = 0; i < r.counts.size(); ++i) {
    largest = std::max(largest, r.counts[i]);
    if (r.bound_applies)
      t.expect(r.counts[i] <= base.order() - 1,
               {{"kappa", coords[i].kappa}, {"count", r.counts[i]}});
  }
  t.data()["bound_applies"] = r.bound_applies;
  t.data()["max_count"] = largest;
  t.data()["identity_count"] = r.counts.front();
  t.data()["base_order"] = base.order();
  auto rep = t.finish();
  if (!r.bound_applies && rep.status == Status::Pass)
    rep.status = Status::Info;
  return rep;
}

CheckReport check_c_determination(const GroupTable &base, unsigned n, const Permutation &sigma_beta,
                                  std::uint64_t seed) {
  CheckTally t("wreath.cDetermination");
  WreathProduct w(base, n);
  const auto elems = w.elements();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t bi = 0; bi < elems.size(); ++bi) {
    if (elems[bi].perm != sigma_beta)
      continue;
    const auto cube = w.power(elems[bi], 3);
    for (std::size_t ai = 0; ai < elems.size(); ++ai)
      if (w.conjugate(elems[ai], elems[bi]) == cube)
        pairs.emplace_back(ai, bi);
  }
  if (pairs.empty())
    throw PreconditionViolated("no cubed element with the requested permutation");
  std::mt19937_64 rng(seed);
  const auto [ai, bi] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
  const auto &alpha = elems[ai];
  const auto &beta = elems[bi];
  std::vector<std::vector<Element>> k_all;
  auto k = w.identity();
  do
    k_all.push_back(k.tuple);
  while (next_tuple(k.tuple, base.order()));
  const auto kb = k_beta_members(w, alpha, beta);
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<unsigned> index_set;
    for (unsigned i = 0; i < n; ++i)
      if (mask >> i & 1)
        index_set.push_back(i);
    const auto r = c_determination_ratio(k_all, kb, index_set, base.order(), n);
    rows.push_back({{"I", index_set}, {"C", r.c}, {"bound", r.bound}});
    t.expect(r.holds, {{"I", index_set}, {"C", r.c}, {"k_beta", r.k_beta}, {"bound", r.bound}});
  }
  const auto fam = opportune_family(alpha.perm, beta.perm);
  const std::size_t m = fam.opportune.size();
  t.data()["alpha"] = show(alpha);
  t.data()["beta"] = show(beta);
  t.data()["k"] = k_all.size();
  t.data()["k_beta"] = kb.size();
  t.data()["subsets"] = rows;
  t.data()["opportune"] = m;
  t.data()["ratio"] = double(kb.size()) / double(k_all.size());
  if (m > 0)
    t.data()["opportune_reference"] =
        std::pow(double(base.order()), -0.118 * double((m + 15) / 16));
  return t.finish();
}

} // namespace grouplab
