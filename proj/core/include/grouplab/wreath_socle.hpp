#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grouplab/automorphism.hpp"
#include "grouplab/group_table.hpp"
#include "grouplab/report.hpp"

namespace grouplab {

/// (t, sigma) in B wr Sym_n. Acts on B^n by x -> (t_i x_{sigma^-1(i)} t_i^-1)_i
/// when B is read as a group of automorphisms, and multiplies by
/// (t, sigma)(u, tau) = (t . sigma(u), sigma tau) with sigma(u)_i = u_{sigma^-1(i)}.
/// Permutations are 0-based image arrays.
struct WreathElement {
  std::vector<Element> tuple;
  Permutation perm;
  friend bool operator==(const WreathElement &, const WreathElement &) = default;
  friend auto operator<=>(const WreathElement &, const WreathElement &) = default;
};

class WreathProduct {
public:
  /// Throws PreconditionViolated for n = 0.
  WreathProduct(GroupTable base, unsigned n);

  const GroupTable &base() const { return base_; }
  unsigned n() const { return n_; }
  /// |B|^n n!, saturating at UINT64_MAX.
  std::uint64_t order() const;

  WreathElement identity() const;
  WreathElement mul(const WreathElement &x, const WreathElement &y) const;
  WreathElement inv(const WreathElement &x) const;
  WreathElement power(const WreathElement &x, unsigned e) const;
  /// x y x^-1
  WreathElement conjugate(const WreathElement &x, const WreathElement &y) const;
  WreathElement random(std::mt19937_64 &rng) const;
  /// Random element of B^n (trivial permutation).
  WreathElement random_base(std::mt19937_64 &rng) const;

  /// Every element, tuples in lexicographic order within each permutation,
  /// permutations in lexicographic order. Throws SizeExceeded past `cap`.
  std::vector<WreathElement> elements(std::uint64_t cap = 10'000) const;
  /// Cayley table in elements() order. Throws SizeExceeded past kMaxTableOrder.
  GroupTable table() const;

private:
  GroupTable base_;
  unsigned n_;
};

/// sigma(u)_i = u_{sigma^-1(i)}
std::vector<Element> permute_tuple(const Permutation &sigma, const std::vector<Element> &u);
Permutation compose_perm(const Permutation &a, const Permutation &b);
Permutation invert_perm(const Permutation &a);
Permutation random_perm(unsigned n, std::mt19937_64 &rng);
/// The n-cycle i -> i + 1 mod n.
Permutation cycle_perm(unsigned n);

struct OpportuneFamily {
  unsigned n = 0;
  Permutation sigma_alpha, sigma_beta;
  /// Indices moved by sigma_alpha or sigma_beta, ascending.
  std::vector<unsigned> opportune;
  /// Each member is {i, sa^-1(i), sb^-1(i), sb^-2(i)} for an opportune i,
  /// deduplicated and sorted; members are pairwise disjoint.
  std::vector<std::vector<unsigned>> family;
  /// The opportune index each family member was built from.
  std::vector<unsigned> anchors;
};

/// {i, sa^-1(i), sb^-1(i), sb^-2(i)}, sorted, duplicates removed.
std::vector<unsigned> opportune_set(const Permutation &sa, const Permutation &sb, unsigned i);

/// Greedy disjoint family: take the least remaining opportune i, then drop
/// Omega, sa[Omega], sb[Omega] and sb^2[Omega] from the pool. Runs until the
/// pool is empty, so |family| >= ceil(M / 16).
OpportuneFamily opportune_family(const Permutation &sigma_alpha, const Permutation &sigma_beta);

/// Coordinate-wise test of alpha(k) = k beta(k) beta^2(k) for k in B^n, with
/// alpha and beta acting by conjugation inside B wr Sym_n.
/// Throws PermNotTrivial if k has a nontrivial permutation part, and
/// PreconditionViolated unless alpha beta alpha^-1 = beta^3.
bool coordinate_condition(const WreathProduct &w, const WreathElement &alpha,
                          const WreathElement &beta, const WreathElement &k);
/// alpha (k beta) alpha^-1 = (k beta)^3 in the ambient group.
bool ambient_cube_condition(const WreathProduct &w, const WreathElement &alpha,
                            const WreathElement &beta, const WreathElement &k);

struct CDetermination {
  std::vector<unsigned> index_set;
  /// Largest fiber of the projection of K_beta onto the index_set coordinates.
  std::size_t c = 0;
  std::size_t k_beta = 0;
  std::size_t k = 0;
  /// c |K| / |S|^(n - |I|)
  double bound = 0;
  bool holds = false;
};

/// Members are tuples of length n. Throws SizeExceeded above |B| = 120 or n = 3.
CDetermination c_determination_ratio(const std::vector<std::vector<Element>> &k_members,
                                     const std::vector<std::vector<Element>> &k_beta_members,
                                     const std::vector<unsigned> &index_set,
                                     std::size_t s_order, unsigned n);

/// K_beta = {k in B^n : alpha(k beta) = (k beta)^3}, by exhaustive scan of B^n.
std::vector<std::vector<Element>> k_beta_members(const WreathProduct &w, const WreathElement &alpha,
                                                 const WreathElement &beta);

struct NcycleCount {
  std::size_t brute = 0;
  std::size_t recursion = 0;
  /// Inverted tuples, sorted.
  std::vector<std::vector<Element>> members;
  bool agree = false;
};

/// Tuples s in B^n with alpha(s) = s^-1 for alpha = (a_1 x ... x a_n) o (1 2 ... n),
/// i.e. a_1(s_n) = s_1^-1 and a_i(s_{i-1}) = s_i^-1 for i = 2..n. Counted by
/// scanning B^n and by propagating from s_1. Throws SizeExceeded when
/// |B|^n > 10^6.
NcycleCount ncycle_inversion_count(const GroupTable &base, const std::vector<Automorphism> &alphas);

/// #{s : a(s) = s (tau_kappa o b)(s) (tau_{kappa b(kappa)} o b^2)(s)}.
std::size_t coset_survivor_count(const GroupTable &base, Element kappa, const Automorphism &a,
                                 const Automorphism &b);

struct CosetSurvivors {
  std::vector<std::size_t> counts;
  std::size_t base_order = 0;
  /// prod counts / |B|^coordinates
  double fraction = 0;
  /// Base centerless and nonsolvable, so every count must be <= |B| - 1.
  bool bound_applies = false;
  bool holds = true;
};

struct CoordinateTriple {
  Element kappa;
  Automorphism alpha, beta;
};

CosetSurvivors coset_survivor_fraction(const GroupTable &base,
                                       const std::vector<CoordinateTriple> &coordinates);

/// Family disjointness, shape and size on random permutation pairs.
CheckReport check_opportune(unsigned n, std::size_t trials, std::uint64_t seed);
/// coordinate_condition against ambient cubing on random (beta, k) pairs
/// whose beta has the given permutation part (random when empty).
CheckReport check_coordinate_condition(const GroupTable &base, unsigned n, std::size_t trials,
                                       std::uint64_t seed, const Permutation &sigma_beta = {});
/// Two-way agreement and count <= |B| on random inner automorphism lists.
CheckReport check_ncycle(const GroupTable &base, unsigned n, std::size_t trials,
                         std::uint64_t seed);
/// Survivor counts on random inner (kappa, alpha, beta); asserts <= |B| - 1
/// when the base is centerless and nonsolvable.
CheckReport check_coset_survivors(const GroupTable &base, std::size_t trials, std::uint64_t seed);
/// Fiber inequality for every index subset on one random cubed beta with the
/// given permutation part; also reports |K_beta|/|K| beside |S|^(-0.118 ceil(M/16)).
CheckReport check_c_determination(const GroupTable &base, unsigned n, const Permutation &sigma_beta,
                                  std::uint64_t seed);

} // namespace grouplab
