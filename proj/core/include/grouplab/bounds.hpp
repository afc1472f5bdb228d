#pragma once

#include <string>
#include <vector>

#include "grouplab/report.hpp"

namespace grouplab {

class GroupContext;
class GroupTable;

namespace constants {

/// log_20160(12): the largest log_|S| |Out(S)| over nonabelian simple S, attained by PSL(3,4).
double log_out();
/// (1/3) log_60(24), the Dixon term of t.
double dixon_term();
/// 24^(1/3)
double dixon_base();
/// 0.705 (1 + log_20160(12))
double e0();
/// 1 / (t(E0) - 1)
double e1();

inline constexpr unsigned kOutExtremalOrder = 20160;
inline constexpr unsigned kOutExtremalOut = 12;

} // namespace constants

/// (e + log_20160 12 + (1/3) log_60 24) / (1 + log_20160 12 + (1/3) log_60 24)
double po_improve(double e);

/// Slack on the pass side of every real-valued inequality.
inline constexpr double kSlack = 1e-9;

/// Outcome of value <= bound with kSlack: pass, marginal within slack, or fail.
Status compare_with_slack(double value, double bound);

/// "F(G) > (num/den)|G| implies property" for one of the classical criteria.
struct Threshold {
  std::string function; // "L-1", "L2", "L3", "k", "mao"
  std::string property; // "abelian", "nilpotent", "solvable"
  unsigned num = 0;
  unsigned den = 1;
};

const std::vector<Threshold> &thresholds();

/// Constants and thresholds as exported in report headers.
nlohmann::json constants_json();

/// [G : Rad G] <= I
bool is_almost_solvable(GroupContext &ctx, double index_bound);
/// [G : Rad G] <= I and dl(Rad G) <= L
bool is_almost_abelian(GroupContext &ctx, double index_bound, double dl_bound);

/// Bounds implied by l_-1(G) >= rho and l_2(G) >= rho respectively.
struct AlmostParams {
  double index_bound = 0;
  double dl_bound = 0;
};
AlmostParams inversion_params(double rho);
AlmostParams squaring_params(double rho);

/// Parts 1 and 2 as pass/fail (with slack) at rho = l_-1 and rho = l_2; part 3
/// as an info row with l_3, [G:Rad] and dl(Rad).
std::vector<CheckReport> check_mainTheo(GroupContext &ctx);

/// Each classical threshold as the implication "F(G) > c|G| => property", plus
/// Func(G) > (3/4)|G| => abelian and Func(G) <= (3/4)|G| for solvable dl >= 2.
std::vector<CheckReport> check_thresholds(GroupContext &ctx);

/// Claimed properties of l_e, L_-1, k, k_rel, exp, mao_rel, func_rel and
/// lhat_e_rel on every characteristic N, f(G) <= f(G/Rad) for the
/// CQ-increasing ones, and info rows where l_2(G) > l_2(N).
std::vector<CheckReport> check_gtf_properties(GroupContext &ctx);

/// k(G) <= 2^(d-1) and, for solvable G, |G| <= 24^((d-1)/3) on the permutation
/// degree d; k(G) <= |G|^0.41 for almost simple G; maxsqrt(G) <= |S|^E0 when
/// G = Aut(S) for its simple socle S.
std::vector<CheckReport> check_external_bounds(GroupContext &ctx);

/// maxsqrt(aut_s) <= |S|^E0 for a table of Aut(S) and the order of S.
CheckReport check_po_bound(const GroupTable &aut_s, std::size_t simple_order);

/// Socle-factor order and multiplicity bounds for a semisimple H with
/// l_3(H) >= rho, given a user-supplied constant C and the largest |Out(S)|
/// (max_out) over simple S up to order_bound(c, rho). Not asserted anywhere.
/// order_bound = max(C, rho^(-1/0.053))
double order_bound(double c, double rho);
/// 16 log_60(rho) / -0.053 + log_(1 - 1/B)(rho / O^(16 log_60(rho) / -0.053))
/// with B = order_bound(c, rho) and O = max_out.
double exponent_bound(double c, double rho, double max_out);

} // namespace grouplab
