#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grouplab/automorphism.hpp"
#include "grouplab/group_table.hpp"

namespace grouplab {

/// A subgroup of a GroupTable as a sorted member set plus a small generating
/// set. Holds no pointer to the parent; operations take the parent table
/// explicitly.
class Subgroup {
public:
  Subgroup() = default;

  static Subgroup generated_by(const GroupTable &g, std::span<const Element> gens);
  static Subgroup whole(const GroupTable &g);
  static Subgroup trivial(const GroupTable &g);
  /// Checks closure under multiplication and inverses; throws PreconditionViolated.
  static Subgroup from_members(const GroupTable &g, std::vector<Element> members);

  std::size_t order() const { return members_.size(); }
  std::size_t parent_order() const { return mask_.size(); }
  std::span<const Element> members() const { return members_; }
  std::span<const Element> generators() const { return gens_; }
  bool contains(Element x) const { return mask_[x] != 0; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == mask_.size(); }
  bool is_subset_of(const Subgroup &other) const;

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.members_ == b.members_;
  }
  friend bool operator<(const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members_ < b.members_;
  }

private:
  Subgroup(const GroupTable &g, std::vector<Element> members, std::vector<Element> gens);
  std::vector<Element> members_;
  std::vector<Element> gens_;
  std::vector<char> mask_;
};

/// Conjugacy classes. Class 0 is always {identity}; classes are ordered by
/// their smallest member.
struct ConjClassPartition {
  std::vector<std::vector<Element>> classes;
  std::vector<std::uint32_t> class_of;
  std::vector<Element> representatives;

  std::size_t count() const { return classes.size(); }
  std::size_t size_of(std::size_t c) const { return classes[c].size(); }
};

ConjClassPartition conjugacy_classes(const GroupTable &g);

Subgroup centralizer(const GroupTable &g, Element x);
Subgroup center(const GroupTable &g);

/// The join <a, b>.
Subgroup join(const GroupTable &g, const Subgroup &a, const Subgroup &b);
/// Smallest normal subgroup containing `elems`.
Subgroup normal_closure(const GroupTable &g, std::span<const Element> elems);
bool is_normal(const GroupTable &g, const Subgroup &h);

/// Full subgroup lattice, sorted by (order, members). Throws ClosureExceeded
/// when |G| exceeds `max_order`.
std::vector<Subgroup> subgroups(const GroupTable &g, std::size_t max_order = 256);

/// All normal subgroups, found as joins of normal closures of class
/// representatives. Sorted by (order, members).
std::vector<Subgroup> normal_subgroups(const GroupTable &g, std::size_t max_order = 4096);

/// Normal subgroups mapped onto themselves by every automorphism in `aut_gens`.
std::vector<Subgroup> characteristic_subgroups(const GroupTable &g,
                                               std::span<const Automorphism> aut_gens,
                                               std::size_t max_order = 4096);

/// Quotient G/N with the projection G -> G/N. Coset 0 is N itself.
struct Quotient {
  GroupTable table;
  std::vector<Element> projection;
  std::vector<Element> coset_representative;
};

/// Throws NotNormal if `n` is not normal in `g`.
Quotient quotient(const GroupTable &g, const Subgroup &n);

/// A subgroup materialized as a group table in its own right.
struct InducedTable {
  GroupTable table;
  std::vector<Element> embedding;         // sub index -> parent element
  std::vector<std::int64_t> index_of;     // parent element -> sub index or -1
};

InducedTable induced_table(const GroupTable &g, const Subgroup &h);

/// [H, H] computed inside G.
Subgroup commutator_subgroup(const GroupTable &g, const Subgroup &h);
/// [A, B] for subgroups normalised by each other, computed inside G.
Subgroup commutator_of(const GroupTable &g, const Subgroup &a, const Subgroup &b);

std::vector<Subgroup> derived_series(const GroupTable &g, const Subgroup &h);
/// Derived length, or nullopt when H is not solvable.
std::optional<unsigned> derived_length(const GroupTable &g, const Subgroup &h);
bool is_solvable(const GroupTable &g);
bool is_nilpotent(const GroupTable &g);

struct SeriesReport {
  std::vector<Subgroup> derived_series;
  std::optional<unsigned> dl; // nullopt: nonsolvable
  Subgroup radical;
  std::optional<unsigned> radical_dl;
  Subgroup socle;
};

SeriesReport series_report(const GroupTable &g, std::size_t max_order = 4096);

/// Image of a subgroup under an automorphism, as a member set.
bool is_invariant(const Subgroup &h, const Automorphism &a);

} // namespace grouplab
