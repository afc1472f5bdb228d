#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace grouplab {

/// Field element of F_q, encoded as the integer sum c_i p^i of its coordinates
/// in the polynomial basis 1, w, ..., w^{K-1}. 0 and 1 encode themselves.
using Fq = std::uint32_t;

/// F_{p^K} = F_p[w] / (modulus(w)).
///
/// The modulus is the monic irreducible of degree K whose lower coefficients
/// (c_0, ..., c_{K-1}) have the smallest code sum c_i p^i. Irreducibility is
/// verified with Rabin's test. Multiplication goes through log/antilog tables
/// built from the smallest primitive element, so q is limited to 2^20.
class FqField {
public:
  /// Throws NotPrimePower when p is not prime, FieldTooLarge when p^K > 2^20.
  FqField(std::uint32_t p, unsigned K);
  /// Throws NotPrimePower when q is not a prime power.
  static std::shared_ptr<const FqField> of_order(std::uint64_t q);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return K_; }
  std::uint32_t order() const { return q_; }
  /// Coefficients low to high, including the leading 1.
  const std::vector<std::uint32_t> &modulus() const { return modulus_; }
  /// Smallest-code generator of the multiplicative group.
  Fq primitive() const { return exp_[1]; }

  Fq add(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const {
    if (a == 0 || b == 0)
      return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws PreconditionViolated on 0.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;
  /// a^(p^iterations)
  Fq frob(Fq a, unsigned iterations) const;
  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Fq a) const { return log_[a]; }
  /// primitive()^k for 0 <= k < q - 1.
  Fq exp(std::uint32_t k) const { return exp_[k]; }
  /// Embedding of an integer through F_p.
  Fq from_int(long long v) const;

  std::string to_string(Fq a) const;

private:
  std::uint32_t p_;
  unsigned K_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Fq> exp_; // length 2(q-1) so log sums index directly
  std::vector<std::uint32_t> log_;
  std::vector<Fq> add_; // q*q table when q <= 1024, otherwise empty
};

/// Sparse polynomial over F_q with strictly increasing exponents and no zero
/// coefficients.
class FqPoly {
public:
  struct Term {
    std::uint64_t exponent;
    Fq coefficient;
    friend bool operator==(const Term &, const Term &) = default;
  };

  explicit FqPoly(std::shared_ptr<const FqField> field, std::vector<Term> terms = {});

  const FqField &field() const { return *field_; }
  std::shared_ptr<const FqField> field_ptr() const { return field_; }
  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// 0 for the zero polynomial.
  std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.back().exponent; }
  std::uint64_t min_degree() const { return terms_.empty() ? 0 : terms_.front().exponent; }
  Fq eval(Fq x) const;

  FqPoly operator+(const FqPoly &other) const;
  friend bool operator==(const FqPoly &a, const FqPoly &b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  std::shared_ptr<const FqField> field_;
  std::vector<Term> terms_;
};

/// Applies X -> X^p, c -> c^p to every term `iterations` times, so the result
/// evaluates to f(x)^(p^iterations). Throws SizeExceeded on exponent overflow.
FqPoly frobenius_poly(const FqPoly &f, unsigned iterations);

/// Low-degree polynomial with the same roots in F_q as a lacunary f.
///
/// f is split as P1 + P2 with P2 the terms of exponent >= p^L. Requires
/// (3/4)K <= L < K, 0 < eps < 1/4, deg P1 <= q^(1/2+eps) and
/// deg P2 <= p^L + q^(1/2+eps) - 1 < q. The result is
/// Frob^(K-L)(P1) + Frob^(K-L)(P2) with q-1 subtracted from each exponent of
/// the second part, of degree at most q^(3/4+eps).
/// Throws PreconditionViolated on a failed bound, ZeroResult if Q vanishes.
FqPoly lacunary_reduce(const FqPoly &f, unsigned L, double eps);

/// Every x in F_q with f(x) = 0, ascending. Throws FieldTooLarge past 2^20.
std::vector<Fq> roots(const FqPoly &f);

/// q^(3/4+eps)
double lacunary_degree_bound(std::uint32_t q, double eps);

/// A random nonconstant f satisfying the lacunary_reduce preconditions, with up to
/// `max_terms` terms in each part.
FqPoly random_lacunary(std::shared_ptr<const FqField> field, unsigned L, double eps,
                       std::mt19937_64 &rng, unsigned max_terms = 6);

} // namespace grouplab
