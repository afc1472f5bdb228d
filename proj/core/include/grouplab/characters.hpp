#pragma once

#include <cstdint>
#include <vector>

#include "grouplab/report.hpp"
#include "grouplab/subgroups.hpp"

namespace grouplab {

class GroupContext;

/// Irreducible characters reduced modulo a prime p with p = 1 (mod exp G) and
/// p > 2|G|. Rows are irreducibles sorted by (degree, residues), so row 0 is
/// the trivial character; columns follow `classes`.
struct CharacterTableMod {
  std::uint64_t prime = 0;
  std::size_t group_order = 0;
  ConjClassPartition classes;
  /// inverse_class[c] is the class of g^-1, square_class[c] the class of g^2.
  std::vector<std::size_t> inverse_class;
  std::vector<std::size_t> square_class;
  std::vector<std::vector<std::uint64_t>> values;
  std::vector<std::uint64_t> degrees;

  std::size_t k() const { return degrees.size(); }
};

/// Smallest prime p > max(2 order, after) with p = 1 (mod exponent).
/// Throws NoSplittingPrime past 2^31.
std::uint64_t splitting_prime(std::uint64_t exponent, std::uint64_t order,
                              std::uint64_t after = 0);

/// Common eigenvectors of the class-multiplication matrices over F_p give the
/// central characters; degrees follow from sum_c w_c w_{c*} / |C_c| = |G| / chi(1)^2.
/// `prime` = 0 picks splitting_prime. Requires k(G) <= 64 and |G| <= 1024
/// (PreconditionViolated). Throws DegenerateEigenspace when some common
/// eigenspace does not split, and PreconditionViolated for an unsuitable prime.
CharacterTableMod character_table(const GroupTable &g, std::uint64_t prime = 0);
CharacterTableMod character_table(const GroupTable &g, const ConjClassPartition &classes,
                                  std::uint64_t prime = 0);

/// sum_c |C_c| chi_i(c) chi_j(c^-1) = delta_ij |G| (mod p) for all i, j.
bool rows_orthogonal(const CharacterTableMod &t);
/// sum_chi chi(c) chi(d^-1) = delta_cd |G| / |C_c| (mod p) for all c, d.
bool columns_orthogonal(const CharacterTableMod &t);

struct FSIndicators {
  std::vector<int> nu2;
};

/// nu2(chi) = |G|^-1 sum_g chi(g^2), lifted to {-1, 0, 1}; throws LiftAmbiguous.
FSIndicators fs_indicators(const CharacterTableMod &t);

/// sum_chi nu2(chi) chi(x) lifted to [0, |G|]; throws LiftOutOfRange.
std::uint64_t sqrt_via_characters(const CharacterTableMod &t, const FSIndicators &nu,
                                  Element x);

std::uint64_t degsum(const CharacterTableMod &t);

/// Tables over two primes: orthogonality, sum of squared degrees, row count.
CheckReport check_character_tables(GroupContext &ctx);
/// |sqrt(x)| = sum nu2(chi) chi(x) for every x under two primes, and
/// sum nu2(chi) chi(1) = 1 + #involutions.
CheckReport check_sqrt_identity(GroupContext &ctx);
/// degsum^2 <= k |G|, and L_-1 <= degsum for complete groups.
CheckReport check_characterCor(GroupContext &ctx);

} // namespace grouplab
