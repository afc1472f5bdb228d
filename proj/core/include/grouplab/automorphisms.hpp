#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grouplab/automorphism.hpp"
#include "grouplab/subgroups.hpp"

namespace grouplab {

/// Aut(G) as an explicit list. elements[0] is the identity; the rest are in
/// lexicographic order of their image arrays.
struct AutGroup {
  std::vector<Automorphism> elements;
  /// |Inn(G)| = |G| / |Z(G)|
  std::size_t inner_count = 1;

  std::size_t order() const { return elements.size(); }
};

struct AutOptions {
  /// AutCapExceeded once more automorphisms than this are found.
  std::size_t cap = 100'000;
  /// Largest group order accepted.
  std::size_t max_group_order = 512;
};

/// All automorphisms, by backtracking over images of a greedily chosen
/// generating set. Candidate images must match (element order, class size),
/// and each partial assignment is extended along the Cayley graph of the
/// generated subgroup to check it is a well-defined injective homomorphism.
/// Throws AutCapExceeded.
AutGroup automorphism_group(const GroupTable &g, const AutOptions &opts = {});

/// Counts automorphisms but stops once `limit` have been found.
std::size_t count_automorphisms_up_to(const GroupTable &g, std::size_t limit,
                                      std::size_t max_group_order = 512);

/// True when Z(G) = 1 and every automorphism is inner.
bool is_complete(const GroupTable &g, std::size_t max_group_order = 512);

/// Generating set used by the backtracking search.
std::vector<Element> search_generators(const GroupTable &g);

Subgroup fix(const GroupTable &g, const Automorphism &a);

/// T_a(x) = x^-1 a(x)
inline Element t_map(const GroupTable &g, const Automorphism &a, Element x) {
  return g.mul(g.inv(x), a(x));
}

/// sh_a^(e)(x) = x a(x) a^2(x) ... a^(e-1)(x); sh^(0) is the identity element.
Element shift(const GroupTable &g, const Automorphism &a, unsigned e, Element x);

/// f_{c,a}(x) = x c a(x)
inline Element f_map(const GroupTable &g, Element c, const Automorphism &a, Element x) {
  return g.mul(g.mul(x, c), a(x));
}

/// Maximum order of an automorphism.
unsigned mao(const AutGroup &aut);

/// Restriction of `a` to the subgroup materialized as `sub`; `a` must leave
/// the subgroup invariant.
Automorphism restrict_to(const Automorphism &a, const InducedTable &sub);

/// The automorphism of G/N induced by `a`; N must be `a`-invariant.
Automorphism induced_on_quotient(const GroupTable &g, const Automorphism &a, const Quotient &q);

/// True when G is elementary abelian (including the trivial group).
bool is_elementary_abelian(const GroupTable &g);

} // namespace grouplab
