#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "grouplab/automorphisms.hpp"
#include "grouplab/report.hpp"

namespace grouplab {

class GroupContext;

/// P_e(a) = {x : a(x) = x^e}
struct PowerSet {
  long long exponent = 1;
  std::vector<Element> members;
  std::size_t size() const { return members.size(); }
};

PowerSet p_set(const GroupTable &g, const Automorphism &a, long long e);
/// |P_e(a)| without materializing the set.
std::size_t l_count(const GroupTable &g, const Automorphism &a, long long e);

/// L_e(G) with an index into AutGroup::elements attaining it.
struct LValue {
  std::size_t value = 0;
  std::size_t witness = 0;
};

LValue l_value(const GroupTable &g, const AutGroup &aut, long long e);

/// {f : f^2 = x}
std::vector<Element> sqrt_set(const GroupTable &g, Element x);
/// counts[x] = |sqrt_set(x)| for every x.
std::vector<std::size_t> sqrt_counts(const GroupTable &g);
std::size_t maxsqrt(const GroupTable &g);

/// max over x of |P_{-1}(tau_x)| with an attaining x, plus whether
/// P_{-1}(tau_x) = sqrt(x^-2) x held for every x.
struct InnerInversion {
  std::size_t value = 0;
  Element witness = kIdentity;
  bool identity_holds = true;
};

InnerInversion inverted_by_inner(const GroupTable &g);

/// P_e(a | b_1, ..., b_e) = {x : a(x) = b_1(x) ... b_e(x)}
std::vector<Element> generalized_p_set(const GroupTable &g, const Automorphism &a,
                                       std::span<const Automorphism> factors);

/// A maximum over tuples of automorphisms, with the attaining tuple as indices
/// into AutGroup::elements (alpha first).
struct TupleMax {
  std::size_t value = 0;
  std::vector<std::size_t> witness;
};

/// Func(a, b) = |P_2(a | id, b)| = |{x : a(x) = x b(x)}|
std::size_t func_count(const GroupTable &g, const Automorphism &a, const Automorphism &b);

/// max over (a, b) of Func(a, b). Throws BudgetExceeded when
/// |Aut|^2 |G| > budget.
TupleMax func_value(const GroupTable &g, const AutGroup &aut, double budget = 2e9);

/// max over (a, b_1..b_e) of |P_e(a | b_1..b_e)| for 1 <= e <= 3, by full
/// enumeration. Throws BudgetExceeded when |Aut| > max_aut or
/// |Aut|^(e+1) |G| > budget.
TupleMax lhat(const GroupTable &g, const AutGroup &aut, unsigned e, double budget = 5e8,
              std::size_t max_aut = 300);

/// The same maximum, counted coset by coset over the normal subgroup N: for each
/// coset Ng holding a point x0 of the set, the points n x0 are counted through
/// the shifted equation a(n) = b_1(n) (tau_{b_1(x0)} b_2)(n) ... on N.
/// N must be invariant under every automorphism.
TupleMax lhat_cosetwise(const GroupTable &g, const AutGroup &aut, unsigned e, const Subgroup &n,
                        double budget = 5e8, std::size_t max_aut = 300);

// Checkers. Each returns one report; failures carry the first counterexample.

/// L_e(a) <= k(G) |fix(a)| for every a and e in {-1, 2, 3}.
CheckReport check_lE(GroupContext &ctx);
/// L_2(a) <= [N : fix(a|N)] L_2(a~) for every characteristic N and every a.
CheckReport check_lTwo(GroupContext &ctx);
/// L_3(a) <= [N : fix(a|N)] L_{-1}(N) L_3(a~) for every characteristic N and every a.
CheckReport check_lThree(GroupContext &ctx);
/// For e in {2, 3}, characteristic N, x in P_e(a), n in N:
/// n x in P_e(a) iff a(n) = sh_{tau_x}^(e)(n).
CheckReport check_shiftCor(GroupContext &ctx);
/// Fibers of T_a are exactly the right cosets fix(a) x.
CheckReport check_t_fibers(GroupContext &ctx);
/// Fiber of f_{c,a} through x equals P_{-1}(tau_x tau_c a) x (|G| <= max_order).
CheckReport check_shiftTwo(GroupContext &ctx, std::size_t max_order = 24);
/// maxsqrt(G) = max |P_{-1}(tau_x)| with the element-wise identity, and
/// L_{-1}(G) = maxsqrt(G) for complete G.
CheckReport check_sqrtProp(GroupContext &ctx);
/// x, y, xy in P_2(a | id, b) implies y and b(x) commute, for every (a, b).
CheckReport check_func_gadget(GroupContext &ctx, double budget = 2e8);
/// For centerless nonsolvable G: no (a, b, c) has a(x) = x b(x) c(x) on all of G.
CheckReport check_nonShift(GroupContext &ctx, double budget = 5e9);
/// lhat_e computed directly and coset-wise over each characteristic N agree.
CheckReport check_lhat_routes(GroupContext &ctx, unsigned e);
/// Aut-level facts: inner_count | |Aut|, inner_count = |G|/|Z|, mao <= |G| - 1
/// with equality exactly for elementary abelian G, complete G has only inner
/// automorphisms.
CheckReport check_aut_invariants(GroupContext &ctx);

} // namespace grouplab
