#include "grouplab/group_table.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation &p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : p) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void check_bijection(const Permutation &p, unsigned degree) {
  if (p.size() != degree)
    throw NotBijective("permutation has " + std::to_string(p.size()) +
                       " points, expected " + std::to_string(degree));
  std::vector<char> seen(degree, 0);
  for (auto v : p) {
    if (v >= degree || seen[v])
      throw NotBijective("not a bijection on {1.." + std::to_string(degree) + "}");
    seen[v] = 1;
  }
}

} // namespace

void check_table_order(std::size_t n) {
  if (n > kMaxTableOrder)
    throw ClosureExceeded("a Cayley table of order " + std::to_string(n) +
                          " exceeds the table limit " + std::to_string(kMaxTableOrder));
}

std::size_t closure_cap() {
  if (const char *env = std::getenv("GROUPLAB_CAP")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

GroupTable::GroupTable(std::vector<Element> mul, std::vector<std::string> names,
                       std::vector<Element> generators,
                       std::optional<unsigned> permutation_degree,
                       std::uint64_t spot_check_seed)
    : mul_(std::move(mul)), names_(std::move(names)),
      generators_(std::move(generators)), degree_(permutation_degree) {
  n_ = names_.size();
  if (n_ == 0)
    throw PreconditionViolated("group table must have at least one element");
  if (mul_.size() != n_ * n_)
    throw PreconditionViolated("multiplication table has wrong size");

  // Latin square rows and columns, identity at 0.
  std::vector<char> seen(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n_; ++b) {
      Element v = mul_[a * n_ + b];
      if (v >= n_ || seen[v])
        throw PreconditionViolated("row " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
    if (mul_[a] != a || mul_[a * n_] != a)
      throw PreconditionViolated("element 0 is not the identity");
  }
  for (std::size_t b = 0; b < n_; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n_; ++a) {
      Element v = mul_[a * n_ + b];
      if (seen[v])
        throw PreconditionViolated("column " + std::to_string(b) + " is not a permutation");
      seen[v] = 1;
    }
  }

  inv_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (mul_[a * n_ + b] == kIdentity) {
        inv_[a] = static_cast<Element>(b);
        break;
      }
    }
    if (mul_[inv_[a] * n_ + a] != kIdentity)
      throw PreconditionViolated("element " + std::to_string(a) + " has no two-sided inverse");
  }

  for (auto gen : generators_)
    if (gen >= n_)
      throw PreconditionViolated("generator index out of range");
  if (closure(*this, generators_).size() != n_)
    throw PreconditionViolated("generators do not generate the table");

  if (n_ <= 512) {
    // (x s) y == x (s y) for every generator s implies full associativity.
    for (auto s : generators_)
      for (std::size_t x = 0; x < n_; ++x) {
        Element xs = mul_[x * n_ + s];
        for (std::size_t y = 0; y < n_; ++y)
          if (mul_[xs * n_ + y] != mul_[x * n_ + mul_[s * n_ + y]])
            throw PreconditionViolated("multiplication is not associative");
      }
  } else {
    std::mt19937_64 rng(spot_check_seed);
    std::uniform_int_distribution<std::size_t> pick(0, n_ - 1);
    for (int t = 0; t < 10'000; ++t) {
      auto x = pick(rng), y = pick(rng), z = pick(rng);
      if (mul_[mul_[x * n_ + y] * n_ + z] != mul_[x * n_ + mul_[y * n_ + z]])
        throw PreconditionViolated("multiplication is not associative");
    }
  }

  orders_.assign(n_, 1);
  for (std::size_t a = 1; a < n_; ++a) {
    unsigned k = 1;
    Element x = static_cast<Element>(a);
    while (x != kIdentity) {
      x = mul_[x * n_ + a];
      ++k;
    }
    orders_[a] = k;
  }
}

Element GroupTable::power(Element g, long long e) const {
  if (e < 0) {
    g = inv_[g];
    e = -e;
  }
  e %= orders_[g];
  Element result = kIdentity;
  Element base = g;
  while (e > 0) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool GroupTable::is_abelian() const {
  for (auto a : generators_)
    for (auto b : generators_)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

std::vector<Element> closure(const GroupTable &g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{kIdentity};
  in[kIdentity] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> small_generating_set(const GroupTable &g,
                                          std::span<const Element> members) {
  std::vector<Element> gens;
  std::vector<char> in(g.order(), 0);
  std::vector<Element> current{kIdentity};
  in[kIdentity] = 1;
  for (auto m : members) {
    if (in[m])
      continue;
    gens.push_back(m);
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (auto s : gens) {
        Element y = g.mul(current[i], s);
        if (!in[y]) {
          in[y] = 1;
          current.push_back(y);
        }
      }
    }
  }
  return gens;
}

GroupTable group_from_permutations(unsigned degree, const std::vector<Permutation> &gens,
                                   std::size_t cap) {
  if (degree == 0)
    throw NotBijective("degree must be positive");
  for (const auto &p : gens)
    check_bijection(p, degree);

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, Element, PermHash> index{{id, 0}};
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  // right[x * r + s] = index of elems[x] * gens[s]
  const std::size_t r = gens.size();
  std::vector<Element> right;

  Permutation tmp(degree);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < r; ++s) {
      // (x * s)(pt) = x(s(pt))
      for (unsigned pt = 0; pt < degree; ++pt)
        tmp[pt] = elems[i][gens[s][pt]];
      auto [it, inserted] = index.try_emplace(tmp, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap)
          throw ClosureExceeded("generated group exceeds " + std::to_string(cap) + " elements");
        elems.push_back(tmp);
        parent.push_back(static_cast<Element>(i));
        via.push_back(static_cast<std::uint32_t>(s));
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  check_table_order(n);
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Element *row = mul.data() + a * n;
    row[0] = static_cast<Element>(a);
    // Elements were discovered in BFS order, so parents precede children.
    for (std::size_t i = 1; i < n; ++i)
      row[i] = right[std::size_t(row[parent[i]]) * r + via[i]];
  }

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto &p : elems)
    names.push_back(cycle_notation(p));

  std::vector<Element> gen_idx;
  for (const auto &p : gens) {
    Element e = index.at(p);
    if (e != kIdentity && std::find(gen_idx.begin(), gen_idx.end(), e) == gen_idx.end())
      gen_idx.push_back(e);
  }
  return GroupTable(std::move(mul), std::move(names), std::move(gen_idx), degree);
}

GroupTable direct_product(const GroupTable &a, const GroupTable &b, std::size_t cap) {
  const std::size_t na = a.order(), nb = b.order();
  if (na * nb > cap)
    throw ClosureExceeded("direct product of order " + std::to_string(na * nb) +
                          " exceeds " + std::to_string(cap));
  const std::size_t n = na * nb;
  check_table_order(n);
  std::vector<Element> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      mul[x * n + y] = static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    names.push_back("(" + a.name(static_cast<Element>(x / nb)) + ", " +
                    b.name(static_cast<Element>(x % nb)) + ")");
  std::vector<Element> gens;
  for (auto g : a.generators())
    gens.push_back(static_cast<Element>(g * nb));
  for (auto h : b.generators())
    gens.push_back(h);
  std::optional<unsigned> degree;
  if (a.permutation_degree() && b.permutation_degree())
    degree = *a.permutation_degree() + *b.permutation_degree();
  return GroupTable(std::move(mul), std::move(names), std::move(gens), degree);
}

GroupTable trivial_group() {
  return GroupTable({0}, {"()"}, {}, 1u);
}

std::uint64_t exponent(const GroupTable &g) {
  std::uint64_t e = 1;
  for (std::size_t x = 0; x < g.order(); ++x)
    e = std::lcm(e, std::uint64_t(g.element_order(static_cast<Element>(x))));
  return e;
}

std::string cycle_notation(const Permutation &p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i)
      continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first)
        out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(const std::string &text, unsigned degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<unsigned> cycle;
    for (;;) {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size())
        throw ParseError("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character in cycle notation: " + text);
      unsigned v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + unsigned(text[i++] - '0');
      if (v == 0 || v > degree)
        throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cycle.push_back(v - 1);
    }
    // Cycles compose right to left: the rightmost cycle acts first.
    Permutation c(degree);
    std::iota(c.begin(), c.end(), 0u);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      unsigned from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (c[from] != from)
        throw ParseError("repeated point in cycle: " + text);
      c[from] = to;
    }
    // p := p o c
    Permutation next(degree);
    for (unsigned pt = 0; pt < degree; ++pt)
      next[pt] = p[c[pt]];
    p = std::move(next);
    skip_ws();
  }
  return p;
}

} // namespace grouplab
