#include "grouplab/automorphisms.hpp"

#include <algorithm>
#include <map>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

class AutSearch {
public:
  AutSearch(const GroupTable &g, std::size_t cap, std::size_t stop_after)
      : g_(g), n_(g.order()), cap_(cap), stop_after_(stop_after), gens_(search_generators(g)),
        images_(gens_.size()), map_(n_), map_stamp_(n_, 0), used_stamp_(n_, 0) {
    auto classes = conjugacy_classes(g);
    auto profile = [&](Element x) {
      return std::pair{g.element_order(x), classes.size_of(classes.class_of[x])};
    };
    for (auto s : gens_) {
      std::vector<Element> cands;
      const auto want = profile(s);
      for (Element y = 0; y < n_; ++y)
        if (profile(y) == want)
          cands.push_back(y);
      candidates_.push_back(std::move(cands));
    }
  }

  std::vector<Automorphism> run() {
    descend(0);
    return std::move(found_);
  }

  std::size_t count() {
    descend(0);
    return found_.size();
  }

private:
  // Extends gens_[i] -> images_[i] (i < m) along the Cayley graph of
  // <gens_[0..m)>; fails on an inconsistent or non-injective assignment.
  bool extend(std::size_t m) {
    ++stamp_;
    queue_.clear();
    queue_.push_back(kIdentity);
    set(kIdentity, kIdentity);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Element x = queue_[head];
      const Element fx = map_[x];
      for (std::size_t j = 0; j < m; ++j) {
        const Element y = g_.mul(x, gens_[j]);
        const Element fy = g_.mul(fx, images_[j]);
        if (map_stamp_[y] == stamp_) {
          if (map_[y] != fy)
            return false;
          continue;
        }
        if (used_stamp_[fy] == stamp_)
          return false;
        set(y, fy);
        queue_.push_back(y);
      }
    }
    return true;
  }

  void set(Element x, Element fx) {
    map_[x] = fx;
    map_stamp_[x] = stamp_;
    used_stamp_[fx] = stamp_;
  }

  bool done() const { return stop_after_ != 0 && found_.size() >= stop_after_; }

  void descend(std::size_t level) {
    if (level == gens_.size()) {
      if (!extend(level))
        return;
      if (found_.size() >= cap_)
        throw AutCapExceeded("more than " + std::to_string(cap_) + " automorphisms");
      found_.push_back(Automorphism::trusted(std::vector<Element>(map_.begin(), map_.end())));
      return;
    }
    for (auto t : candidates_[level]) {
      images_[level] = t;
      if (level + 1 < gens_.size() && !extend(level + 1))
        continue;
      descend(level + 1);
      if (done())
        return;
    }
  }

  const GroupTable &g_;
  const std::size_t n_;
  const std::size_t cap_;
  const std::size_t stop_after_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<Element> map_;
  std::vector<std::uint32_t> map_stamp_, used_stamp_;
  std::uint32_t stamp_ = 0;
  std::vector<Element> queue_;
  std::vector<Automorphism> found_;
};

void require_searchable(const GroupTable &g, std::size_t max_group_order) {
  if (g.order() > max_group_order)
    throw AutCapExceeded("automorphism search limited to order " +
                         std::to_string(max_group_order) + ", group has order " +
                         std::to_string(g.order()));
}

} // namespace

std::vector<Element> search_generators(const GroupTable &g) {
  const std::size_t n = g.order();
  auto classes = conjugacy_classes(g);
  std::map<std::pair<unsigned, std::size_t>, std::size_t> profile_count;
  std::vector<std::size_t> width(n);
  for (Element x = 0; x < n; ++x)
    ++profile_count[{g.element_order(x), classes.size_of(classes.class_of[x])}];
  for (Element x = 0; x < n; ++x)
    width[x] = profile_count[{g.element_order(x), classes.size_of(classes.class_of[x])}];

  std::vector<Element> gens;
  std::vector<Element> current{kIdentity};
  std::vector<char> in(n, 0);
  in[kIdentity] = 1;
  while (current.size() < n) {
    std::size_t best_width = SIZE_MAX;
    for (Element x = 0; x < n; ++x)
      if (!in[x])
        best_width = std::min(best_width, width[x]);
    Element best = 0;
    std::vector<Element> best_closure;
    for (Element x = 0; x < n; ++x) {
      if (in[x] || width[x] != best_width)
        continue;
      std::vector<Element> trial = gens;
      trial.push_back(x);
      auto c = closure(g, trial);
      if (c.size() > best_closure.size()) {
        best = x;
        best_closure = std::move(c);
      }
    }
    gens.push_back(best);
    current = std::move(best_closure);
    for (auto y : current)
      in[y] = 1;
  }
  return gens;
}

AutGroup automorphism_group(const GroupTable &g, const AutOptions &opts) {
  require_searchable(g, opts.max_group_order);
  AutGroup aut;
  aut.elements = AutSearch(g, opts.cap, 0).run();
  std::sort(aut.elements.begin(), aut.elements.end());
  auto id = std::find_if(aut.elements.begin(), aut.elements.end(),
                         [](const Automorphism &a) { return a.is_identity(); });
  std::rotate(aut.elements.begin(), id, id + 1);
  aut.inner_count = g.order() / center(g).order();
  return aut;
}

std::size_t count_automorphisms_up_to(const GroupTable &g, std::size_t limit,
                                      std::size_t max_group_order) {
  require_searchable(g, max_group_order);
  return AutSearch(g, SIZE_MAX, limit).count();
}

bool is_complete(const GroupTable &g, std::size_t max_group_order) {
  if (center(g).order() != 1)
    return false;
  return count_automorphisms_up_to(g, g.order() + 1, max_group_order) == g.order();
}

Subgroup fix(const GroupTable &g, const Automorphism &a) {
  std::vector<Element> members;
  for (Element x = 0; x < g.order(); ++x)
    if (a(x) == x)
      members.push_back(x);
  return Subgroup::generated_by(g, members);
}

Element shift(const GroupTable &g, const Automorphism &a, unsigned e, Element x) {
  Element result = kIdentity;
  Element term = x;
  for (unsigned i = 0; i < e; ++i) {
    result = g.mul(result, term);
    term = a(term);
  }
  return result;
}

unsigned mao(const AutGroup &aut) {
  unsigned best = 1;
  for (const auto &a : aut.elements)
    best = std::max(best, a.order());
  return best;
}

Automorphism restrict_to(const Automorphism &a, const InducedTable &sub) {
  std::vector<Element> img(sub.embedding.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    const auto j = sub.index_of[a(sub.embedding[i])];
    if (j < 0)
      throw PreconditionViolated("automorphism does not leave the subgroup invariant");
    img[i] = static_cast<Element>(j);
  }
  return Automorphism::trusted(std::move(img));
}

Automorphism induced_on_quotient(const GroupTable &g, const Automorphism &a, const Quotient &q) {
  std::vector<Element> img(q.table.order());
  for (std::size_t c = 0; c < img.size(); ++c)
    img[c] = q.projection[a(q.coset_representative[c])];
  for (Element x = 0; x < g.order(); ++x)
    if (q.projection[a(x)] != img[q.projection[x]])
      throw PreconditionViolated("automorphism does not leave the kernel invariant");
  return Automorphism::trusted(std::move(img));
}

bool is_elementary_abelian(const GroupTable &g) {
  if (!g.is_abelian())
    return false;
  const auto e = exponent(g);
  if (e == 1)
    return true;
  for (std::uint64_t d = 2; d * d <= e; ++d)
    if (e % d == 0)
      return false;
  return true;
}

} // namespace grouplab
