#include "grouplab/subgroups.hpp"

#include <algorithm>
#include <set>

#include "grouplab/errors.hpp"

namespace grouplab {

Subgroup::Subgroup(const GroupTable &g, std::vector<Element> members, std::vector<Element> gens)
    : members_(std::move(members)), gens_(std::move(gens)), mask_(g.order(), 0) {
  for (auto m : members_)
    mask_[m] = 1;
}

Subgroup Subgroup::generated_by(const GroupTable &g, std::span<const Element> gens) {
  auto small = small_generating_set(g, gens);
  auto members = closure(g, small);
  return Subgroup(g, std::move(members), std::move(small));
}

Subgroup Subgroup::whole(const GroupTable &g) {
  std::vector<Element> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = Element(i);
  auto gens = std::vector<Element>(g.generators().begin(), g.generators().end());
  return Subgroup(g, std::move(all), std::move(gens));
}

Subgroup Subgroup::trivial(const GroupTable &g) { return Subgroup(g, {kIdentity}, {}); }

Subgroup Subgroup::from_members(const GroupTable &g, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<char> in(g.order(), 0);
  for (auto m : members) {
    if (m >= g.order())
      throw PreconditionViolated("member index out of range");
    in[m] = 1;
  }
  if (members.empty() || !in[kIdentity])
    throw PreconditionViolated("subgroup must contain the identity");
  for (auto a : members) {
    if (!in[g.inv(a)])
      throw PreconditionViolated("member set not closed under inverses");
    for (auto b : members)
      if (!in[g.mul(a, b)])
        throw PreconditionViolated("member set not closed under multiplication");
  }
  auto gens = small_generating_set(g, members);
  return Subgroup(g, std::move(members), std::move(gens));
}

bool Subgroup::is_subset_of(const Subgroup &other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element x) { return other.contains(x); });
}

ConjClassPartition conjugacy_classes(const GroupTable &g) {
  const std::size_t n = g.order();
  ConjClassPartition p;
  p.class_of.assign(n, UINT32_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    if (p.class_of[x] != UINT32_MAX)
      continue;
    const auto c = static_cast<std::uint32_t>(p.classes.size());
    std::vector<Element> orbit{Element(x)};
    p.class_of[x] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto s : g.generators()) {
        Element y = g.conjugate(s, orbit[i]);
        if (p.class_of[y] == UINT32_MAX) {
          p.class_of[y] = c;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    p.representatives.push_back(Element(x));
    p.classes.push_back(std::move(orbit));
  }
  return p;
}

Subgroup centralizer(const GroupTable &g, Element x) {
  std::vector<Element> members;
  for (std::size_t y = 0; y < g.order(); ++y)
    if (g.mul(Element(y), x) == g.mul(x, Element(y)))
      members.push_back(Element(y));
  return Subgroup::generated_by(g, members);
}

Subgroup center(const GroupTable &g) {
  std::vector<Element> members;
  for (std::size_t y = 0; y < g.order(); ++y) {
    bool central = true;
    for (auto s : g.generators())
      if (g.mul(Element(y), s) != g.mul(s, Element(y))) {
        central = false;
        break;
      }
    if (central)
      members.push_back(Element(y));
  }
  return Subgroup::generated_by(g, members);
}

Subgroup join(const GroupTable &g, const Subgroup &a, const Subgroup &b) {
  std::vector<Element> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generated_by(g, gens);
}

namespace {

// Smallest subgroup containing `elems` that is normalised by every element of
// `conjugators`.
Subgroup closure_under_conjugation(const GroupTable &g, std::span<const Element> elems,
                                   std::span<const Element> conjugators) {
  auto h = Subgroup::generated_by(g, elems);
  for (;;) {
    std::vector<Element> extra;
    for (auto x : h.generators())
      for (auto c : conjugators) {
        Element y = g.conjugate(c, x);
        if (!h.contains(y)) {
          extra.push_back(y);
          break;
        }
      }
    if (extra.empty())
      return h;
    std::vector<Element> gens(h.generators().begin(), h.generators().end());
    gens.insert(gens.end(), extra.begin(), extra.end());
    h = Subgroup::generated_by(g, gens);
  }
}

void require_order(const GroupTable &g, std::size_t max_order, const char *what) {
  if (g.order() > max_order)
    throw ClosureExceeded(std::string(what) + " enumeration limited to order " +
                          std::to_string(max_order) + ", group has order " +
                          std::to_string(g.order()));
}

} // namespace

Subgroup normal_closure(const GroupTable &g, std::span<const Element> elems) {
  return closure_under_conjugation(g, elems, g.generators());
}

bool is_normal(const GroupTable &g, const Subgroup &h) {
  for (auto x : h.generators())
    for (auto s : g.generators())
      if (!h.contains(g.conjugate(s, x)))
        return false;
  return true;
}

std::vector<Subgroup> subgroups(const GroupTable &g, std::size_t max_order) {
  require_order(g, max_order, "subgroup lattice");
  std::set<Subgroup> found{Subgroup::trivial(g)};
  std::vector<Subgroup> queue{Subgroup::trivial(g)};
  std::vector<char> covered(g.order());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Subgroup h = queue[i];
    std::fill(covered.begin(), covered.end(), 0);
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (covered[x])
        continue;
      // <H, x> = <H, hx> for h in H, so one x per right coset Hx suffices.
      for (auto m : h.members())
        covered[g.mul(m, Element(x))] = 1;
      std::vector<Element> gens(h.generators().begin(), h.generators().end());
      gens.push_back(Element(x));
      auto k = Subgroup::generated_by(g, gens);
      if (found.insert(k).second)
        queue.push_back(std::move(k));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Subgroup> normal_subgroups(const GroupTable &g, std::size_t max_order) {
  require_order(g, max_order, "normal subgroup");
  auto classes = conjugacy_classes(g);
  std::vector<Subgroup> atoms;
  for (std::size_t c = 1; c < classes.count(); ++c) {
    Element r = classes.representatives[c];
    auto n = normal_closure(g, std::span<const Element>(&r, 1));
    if (std::find(atoms.begin(), atoms.end(), n) == atoms.end())
      atoms.push_back(std::move(n));
  }
  // Every normal subgroup is a join of normal closures of its class reps.
  std::set<Subgroup> found{Subgroup::trivial(g)};
  std::vector<Subgroup> queue{Subgroup::trivial(g)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Subgroup h = queue[i];
    for (const auto &a : atoms) {
      if (a.is_subset_of(h))
        continue;
      auto k = join(g, h, a);
      if (found.insert(k).second)
        queue.push_back(std::move(k));
    }
  }
  return {found.begin(), found.end()};
}

bool is_invariant(const Subgroup &h, const Automorphism &a) {
  for (auto x : h.generators())
    if (!h.contains(a(x)))
      return false;
  return true;
}

std::vector<Subgroup> characteristic_subgroups(const GroupTable &g,
                                               std::span<const Automorphism> aut_gens,
                                               std::size_t max_order) {
  std::vector<Subgroup> out;
  for (auto &n : normal_subgroups(g, max_order))
    if (std::all_of(aut_gens.begin(), aut_gens.end(),
                    [&](const Automorphism &a) { return is_invariant(n, a); }))
      out.push_back(std::move(n));
  return out;
}

Quotient quotient(const GroupTable &g, const Subgroup &n) {
  if (!is_normal(g, n))
    throw NotNormal("subgroup of order " + std::to_string(n.order()) + " is not normal");
  const std::size_t size = g.order();
  Quotient q;
  q.projection.assign(size, UINT32_MAX);
  for (std::size_t x = 0; x < size; ++x) {
    if (q.projection[x] != UINT32_MAX)
      continue;
    const auto c = static_cast<Element>(q.coset_representative.size());
    q.coset_representative.push_back(Element(x));
    for (auto m : n.members())
      q.projection[g.mul(Element(x), m)] = c;
  }
  const std::size_t k = q.coset_representative.size();
  std::vector<Element> mul(k * k);
  std::vector<std::string> names(k);
  for (std::size_t a = 0; a < k; ++a) {
    names[a] = g.name(q.coset_representative[a]) + "N";
    for (std::size_t b = 0; b < k; ++b)
      mul[a * k + b] =
          q.projection[g.mul(q.coset_representative[a], q.coset_representative[b])];
  }
  std::vector<Element> gens;
  for (auto s : g.generators()) {
    Element c = q.projection[s];
    if (c != kIdentity && std::find(gens.begin(), gens.end(), c) == gens.end())
      gens.push_back(c);
  }
  q.table = GroupTable(std::move(mul), std::move(names), std::move(gens));
  return q;
}

InducedTable induced_table(const GroupTable &g, const Subgroup &h) {
  InducedTable t;
  t.embedding.assign(h.members().begin(), h.members().end());
  t.index_of.assign(g.order(), -1);
  for (std::size_t i = 0; i < t.embedding.size(); ++i)
    t.index_of[t.embedding[i]] = std::int64_t(i);
  const std::size_t k = t.embedding.size();
  std::vector<Element> mul(k * k);
  std::vector<std::string> names(k);
  for (std::size_t a = 0; a < k; ++a) {
    names[a] = g.name(t.embedding[a]);
    for (std::size_t b = 0; b < k; ++b)
      mul[a * k + b] = Element(t.index_of[g.mul(t.embedding[a], t.embedding[b])]);
  }
  std::vector<Element> gens;
  for (auto s : h.generators())
    gens.push_back(Element(t.index_of[s]));
  t.table = GroupTable(std::move(mul), std::move(names), std::move(gens), g.permutation_degree());
  return t;
}

Subgroup commutator_of(const GroupTable &g, const Subgroup &a, const Subgroup &b) {
  std::vector<Element> comms;
  for (auto x : a.generators())
    for (auto y : b.generators())
      comms.push_back(g.commutator(x, y));
  // [A, B] is the normal closure of the generator commutators in <A, B>.
  auto ab = join(g, a, b);
  return closure_under_conjugation(g, comms, ab.generators());
}

Subgroup commutator_subgroup(const GroupTable &g, const Subgroup &h) {
  return commutator_of(g, h, h);
}

std::vector<Subgroup> derived_series(const GroupTable &g, const Subgroup &h) {
  std::vector<Subgroup> series{h};
  for (;;) {
    auto next = commutator_subgroup(g, series.back());
    if (next == series.back())
      return series;
    series.push_back(std::move(next));
  }
}

std::optional<unsigned> derived_length(const GroupTable &g, const Subgroup &h) {
  auto series = derived_series(g, h);
  if (!series.back().is_trivial())
    return std::nullopt;
  return static_cast<unsigned>(series.size() - 1);
}

bool is_solvable(const GroupTable &g) {
  return derived_length(g, Subgroup::whole(g)).has_value();
}

bool is_nilpotent(const GroupTable &g) {
  const auto whole = Subgroup::whole(g);
  Subgroup term = whole;
  for (;;) {
    if (term.is_trivial())
      return true;
    auto next = commutator_of(g, term, whole);
    if (next == term)
      return false;
    term = std::move(next);
  }
}

SeriesReport series_report(const GroupTable &g, std::size_t max_order) {
  SeriesReport r;
  r.derived_series = derived_series(g, Subgroup::whole(g));
  if (r.derived_series.back().is_trivial())
    r.dl = static_cast<unsigned>(r.derived_series.size() - 1);

  auto normals = normal_subgroups(g, max_order);
  r.radical = Subgroup::trivial(g);
  r.socle = Subgroup::trivial(g);
  for (const auto &n : normals) {
    if (derived_length(g, n) && !n.is_subset_of(r.radical))
      r.radical = join(g, r.radical, n);
  }
  r.radical_dl = derived_length(g, r.radical);
  for (const auto &n : normals) {
    if (n.is_trivial())
      continue;
    bool minimal = std::none_of(normals.begin(), normals.end(), [&](const Subgroup &m) {
      return !m.is_trivial() && m.order() < n.order() && m.is_subset_of(n);
    });
    if (minimal)
      r.socle = join(g, r.socle, n);
  }
  return r;
}

} // namespace grouplab
