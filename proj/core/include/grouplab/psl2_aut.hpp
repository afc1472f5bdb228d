#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "grouplab/ff_lacunary.hpp"
#include "grouplab/group_table.hpp"
#include "grouplab/report.hpp"

namespace grouplab {

/// (A, Frob^frob) in PGammaL(2,q) with A = [[a, b], [c, d]] normalized:
/// d = 1, or d = 0 and b = 1.
struct GammaL2Element {
  Fq a = 1, b = 0, c = 0, d = 1;
  unsigned frob = 0;
  friend bool operator==(const GammaL2Element &, const GammaL2Element &) = default;
};

/// PGammaL(2,q) = PGL(2,q) x| Gal(F_q / F_p) with
/// (A, Frob^M) (B, Frob^N) = (A Frob^M(B), Frob^(M+N)).
class GammaL2 {
public:
  /// Throws NotPrimePower, or FieldTooLarge for q > 2^13.
  explicit GammaL2(std::uint32_t q);

  const FqField &field() const { return *field_; }
  std::uint32_t q() const { return q_; }
  unsigned K() const { return field_->degree(); }
  /// (q^3 - q) K
  std::uint64_t order() const;

  /// Scales so that d = 1, or b = 1 when d = 0. Throws PreconditionViolated
  /// for a singular matrix.
  GammaL2Element normalize(Fq a, Fq b, Fq c, Fq d, unsigned frob) const;
  GammaL2Element identity() const { return {}; }
  GammaL2Element mul(const GammaL2Element &x, const GammaL2Element &y) const;
  GammaL2Element inv(const GammaL2Element &x) const;
  /// Uniform over the group.
  GammaL2Element random(std::mt19937_64 &rng) const;
  /// x -> x + 1, x -> w x, x -> -1/x and Frob.
  std::vector<GammaL2Element> generators() const;

  /// Frob^m applied to one field element.
  Fq frob(Fq x, unsigned m) const { return frob_[m % K()][x]; }

  /// Dense code in [0, code_space()) for visited maps.
  std::uint64_t code(const GammaL2Element &x) const;
  std::uint64_t code_space() const;
  /// Every element in increasing code order.
  template <class F> void for_each(F &&visit) const;
  /// Elements whose field part is Frob^m.
  template <class F> void for_each_with_frob(unsigned m, F &&visit) const;

private:
  std::uint32_t q_;
  std::shared_ptr<const FqField> field_;
  std::vector<std::vector<Fq>> frob_;
};

template <class F> void GammaL2::for_each_with_frob(unsigned m, F &&visit) const {
  const auto &f = *field_;
  for (Fq a = 0; a < q_; ++a)
    for (Fq c = 0; c < q_; ++c)
      if (c != 0)
        visit(GammaL2Element{a, 1, c, 0, m});
  for (Fq a = 0; a < q_; ++a)
    for (Fq b = 0; b < q_; ++b)
      for (Fq c = 0; c < q_; ++c)
        if (a != f.mul(b, c))
          visit(GammaL2Element{a, b, c, 1, m});
}

template <class F> void GammaL2::for_each(F &&visit) const {
  for (unsigned m = 0; m < K(); ++m)
    for_each_with_frob(m, visit);
}

/// b^3 by the closed entry formulas (B psi(B) B, psi) when psi^2 = id,
/// otherwise by two generic multiplications.
GammaL2Element cube_formula(const GammaL2 &g, const GammaL2Element &b);
GammaL2Element cube_generic(const GammaL2 &g, const GammaL2Element &b);

/// a b a^-1 by the closed entry formulas (A sigma(B) psi(adj A), psi).
/// Valid for every psi since the Galois group is abelian.
GammaL2Element conj_formula(const GammaL2 &g, const GammaL2Element &a, const GammaL2Element &b);
GammaL2Element conj_generic(const GammaL2 &g, const GammaL2Element &a, const GammaL2Element &b);

/// Frobenius powers M with psi^2 = id: {0}, plus K/2 when K is even.
std::vector<unsigned> psi_constraint_filter(std::uint32_t q);

struct GoodCount {
  std::uint32_t q = 0;
  GammaL2Element conjugator;
  std::uint64_t count = 0;
  /// Good elements whose Frobenius part fails psi^2 = id; always 0.
  std::uint64_t outside_filter = 0;
};

/// #{b : a b a^-1 = b^3} over the whole group (not just the psi filter).
GoodCount count_good(const GammaL2 &g, const GammaL2Element &conjugator);
/// The same count restricted to the psi filter.
std::uint64_t count_good_filtered(const GammaL2 &g, const GammaL2Element &conjugator);

/// Conjugacy class representatives by orbit scan, in increasing code order.
/// Throws ScanTooLarge above max_q.
std::vector<GammaL2Element> class_representatives(const GammaL2 &g, std::uint32_t max_q = 512);

struct L3InnerMax {
  std::uint64_t value = 0;
  GammaL2Element witness;
  std::size_t classes = 0;
};

/// max over class representatives a of count_good(a). Equals L_3(PGammaL(2,q))
/// because the group is complete. Throws ScanTooLarge above max_q.
L3InnerMax l3_inner_max(std::uint32_t q, std::uint32_t max_q = 512);

/// Diagnostic partition of good elements: 1 when f = 0 or g = 0; 2 when the
/// bottom-right cube entry fg psi(e) + fh psi(g) + gh psi(f) + h^2 psi(h) vanishes;
/// 3 otherwise.
int good_type(const GammaL2 &g, const GammaL2Element &b);

/// The group as a Cayley table, elements in code order. Throws ClosureExceeded
/// when the order exceeds kMaxTableOrder.
GroupTable gammaL2_table(const GammaL2 &g);

/// Formula agreement on `trials` seeded random elements and pairs, order
/// formula, and 10^4 random associativity triples.
CheckReport check_gammaL2_formulas(std::uint32_t q, std::size_t trials, std::uint64_t seed);

} // namespace grouplab
