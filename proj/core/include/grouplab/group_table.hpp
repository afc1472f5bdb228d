#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grouplab {

/// Dense element index into a GroupTable. The identity is always 0.
using Element = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image array.
using Permutation = std::vector<std::uint32_t>;

inline constexpr Element kIdentity = 0;

/// Closure cap for group construction. Defaults to 10^6 elements and can be
/// overridden with the GROUPLAB_CAP environment variable.
std::size_t closure_cap();

/// Largest order for which a full n x n multiplication table is materialized.
inline constexpr std::size_t kMaxTableOrder = 10'000;
/// Throws ClosureExceeded when n > kMaxTableOrder.
void check_table_order(std::size_t n);

/// A finite group given by its full multiplication table.
///
/// Tables are immutable after construction and may be shared freely between
/// threads. Construction validates the group axioms: identity at index 0,
/// Latin-square rows and columns, two-sided inverses, and that the generator
/// list generates everything. Associativity is verified completely for
/// orders up to 512 (Light's test over the generators, which is equivalent
/// to the full n^3 check once the generators are known to generate) and
/// spot-checked on 10^4 random triples above that.
class GroupTable {
public:
  GroupTable() = default;
  GroupTable(std::vector<Element> mul, std::vector<std::string> names,
             std::vector<Element> generators,
             std::optional<unsigned> permutation_degree = std::nullopt,
             std::uint64_t spot_check_seed = 0x5eed);

  std::size_t order() const { return n_; }

  Element mul(Element a, Element b) const { return mul_[std::size_t(a) * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }

  /// g^e for any signed exponent.
  Element power(Element g, long long e) const;
  /// g x g^-1
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inv_[g]); }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }

  unsigned element_order(Element g) const { return orders_[g]; }
  const std::string &name(Element g) const { return names_[g]; }
  std::span<const std::string> names() const { return names_; }
  std::span<const Element> generators() const { return generators_; }
  std::span<const Element> inverses() const { return inv_; }
  std::span<const Element> row(Element a) const {
    return {mul_.data() + std::size_t(a) * n_, n_};
  }

  /// Degree of the permutation action the table was built from, if any.
  std::optional<unsigned> permutation_degree() const { return degree_; }

  bool is_abelian() const;

private:
  std::size_t n_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<unsigned> orders_;
  std::vector<std::string> names_;
  std::vector<Element> generators_;
  std::optional<unsigned> degree_;
};

/// Cayley table of the group generated by permutations of {0..degree-1}.
/// Element names are rendered in 1-based cycle notation.
/// Throws NotBijective on malformed generators, ClosureExceeded past `cap`.
GroupTable group_from_permutations(unsigned degree,
                                   const std::vector<Permutation> &gens,
                                   std::size_t cap = closure_cap());

/// Component-wise product; element (a, b) has index a * |B| + b.
GroupTable direct_product(const GroupTable &a, const GroupTable &b,
                          std::size_t cap = closure_cap());

/// The trivial group.
GroupTable trivial_group();

/// lcm of all element orders.
std::uint64_t exponent(const GroupTable &g);

/// Smallest subset of `members` (taken greedily in order) that generates the
/// same subgroup. `members` must be closed under multiplication.
std::vector<Element> small_generating_set(const GroupTable &g,
                                          std::span<const Element> members);

/// Members of the subgroup generated by `gens`, sorted ascending.
std::vector<Element> closure(const GroupTable &g, std::span<const Element> gens);

/// 1-based cycle notation, "()" for the identity.
std::string cycle_notation(const Permutation &p);

/// Parses 1-based cycle notation such as "(1 2 3)(4 5)" or "(1,2)" into a
/// permutation of the given degree. Throws ParseError.
Permutation parse_cycles(const std::string &text, unsigned degree);

} // namespace grouplab
