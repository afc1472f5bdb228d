#include "grouplab/ff_lacunary.hpp"

#include <algorithm>
#include <cmath>

#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

// Dense polynomials over F_p, coefficients low to high, no trailing zeros.
using Dense = std::vector<std::uint32_t>;

void trim(Dense &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// a mod f for monic f.
Dense reduce(Dense a, const Dense &f, std::uint32_t p) {
  trim(a);
  const std::size_t k = f.size() - 1;
  while (a.size() > k) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - k;
    for (std::size_t i = 0; i <= k; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    trim(a);
  }
  return a;
}

// Remainder for a general (not necessarily monic) divisor.
Dense remainder(Dense a, Dense b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint64_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    trim(a);
  }
  return a;
}

Dense mulmod(const Dense &a, const Dense &b, const Dense &f, std::uint32_t p) {
  if (a.empty() || b.empty())
    return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return reduce(std::move(r), f, p);
}

Dense powmod(Dense a, std::uint64_t e, const Dense &f, std::uint32_t p) {
  Dense r{1};
  while (e) {
    if (e & 1)
      r = mulmod(r, a, f, p);
    a = mulmod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

Dense gcd(Dense a, Dense b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = remainder(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// X^(p^j) mod f
Dense frobenius_of_x(unsigned j, const Dense &f, std::uint32_t p) {
  Dense x = reduce(Dense{0, 1}, f, p);
  for (unsigned i = 0; i < j; ++i)
    x = powmod(x, p, f, p);
  return x;
}

Dense subtract_x(Dense a, std::uint32_t p) {
  if (a.size() < 2)
    a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

bool is_irreducible(const Dense &f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (!subtract_x(frobenius_of_x(k, f, p), p).empty())
    return false;
  for (unsigned r = 2; r <= k; ++r) {
    if (k % r != 0)
      continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= r; ++d)
      if (r % d == 0)
        prime = false;
    if (!prime)
      continue;
    Dense g = gcd(f, subtract_x(frobenius_of_x(k / r, f, p), p), p);
    if (g.size() != 1)
      return false;
  }
  return true;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Dense decode(Fq a, std::uint32_t p, unsigned k) {
  Dense d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  trim(d);
  return d;
}

Fq encode(const Dense &d, std::uint32_t p) {
  Fq a = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    a = a * p + d[i];
  return a;
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > UINT64_MAX)
    throw SizeExceeded("exponent overflow");
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i)
    r = mul_checked(r, b);
  return r;
}

} // namespace

FqField::FqField(std::uint32_t p, unsigned K) : p_(p), K_(K) {
  if (!is_prime(p) || K == 0)
    throw NotPrimePower(std::to_string(p) + "^" + std::to_string(K));
  std::uint64_t q = 1;
  for (unsigned i = 0; i < K; ++i) {
    q *= p;
    if (q > (1u << 20))
      throw FieldTooLarge("q = " + std::to_string(p) + "^" + std::to_string(K) +
                          " exceeds 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (K == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t code = 0; code < q_; ++code) {
      Dense f = decode(code, p, K);
      f.resize(K + 1, 0);
      f[K] = 1;
      if (f[0] != 0 && is_irreducible(f, p)) {
        modulus_ = std::move(f);
        break;
      }
    }
  }

  auto slow_mul = [&](Fq a, Fq b) {
    return encode(mulmod(decode(a, p, K), decode(b, p, K), modulus_, p), p);
  };
  auto slow_pow = [&](Fq a, std::uint64_t e) {
    Fq r = 1;
    while (e) {
      if (e & 1)
        r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::uint32_t n = q_ - 1;
  std::vector<std::uint32_t> prime_factors;
  for (std::uint32_t m = n, d = 2; m > 1; ++d) {
    if (d * d > m)
      d = m;
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  }
  Fq gen = 1;
  for (Fq cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (auto r : prime_factors)
      if (slow_pow(cand, n / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = cand;
      break;
    }
  }

  exp_.assign(2 * std::size_t(n), 0);
  log_.assign(q_, 0);
  Fq x = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    exp_[k] = x;
    exp_[k + n] = x;
    log_[x] = k;
    x = slow_mul(x, gen);
  }

  if (q_ <= 1024) {
    add_.resize(std::size_t(q_) * q_);
    for (Fq a = 0; a < q_; ++a)
      for (Fq b = 0; b < q_; ++b) {
        Fq r = 0, scale = 1, u = a, v = b;
        for (unsigned i = 0; i < K_; ++i) {
          r += ((u % p_ + v % p_) % p_) * scale;
          u /= p_;
          v /= p_;
          scale *= p_;
        }
        add_[std::size_t(a) * q_ + b] = r;
      }
  }
}

std::shared_ptr<const FqField> FqField::of_order(std::uint64_t q) {
  if (q < 2)
    throw NotPrimePower(std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0)
    ++p;
  unsigned k = 0;
  std::uint64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1)
    throw NotPrimePower(std::to_string(q));
  return std::make_shared<const FqField>(static_cast<std::uint32_t>(p), k);
}

Fq FqField::add(Fq a, Fq b) const {
  if (!add_.empty())
    return add_[std::size_t(a) * q_ + b];
  if (p_ == 2)
    return a ^ b;
  Fq r = 0, scale = 1;
  for (unsigned i = 0; i < K_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Fq FqField::neg(Fq a) const {
  if (p_ == 2)
    return a;
  Fq r = 0, scale = 1;
  for (unsigned i = 0; i < K_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Fq FqField::inv(Fq a) const {
  if (a == 0)
    throw PreconditionViolated("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Fq FqField::pow(Fq a, std::uint64_t e) const {
  if (a == 0)
    return e == 0 ? 1 : 0;
  const std::uint64_t n = q_ - 1;
  return exp_[std::uint64_t(log_[a]) * (e % n) % n];
}

Fq FqField::frob(Fq a, unsigned iterations) const {
  if (a == 0)
    return 0;
  const std::uint64_t n = q_ - 1;
  std::uint64_t k = log_[a];
  for (unsigned i = 0; i < iterations % K_; ++i)
    k = k * p_ % n;
  return exp_[k];
}

Fq FqField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0)
    r += p_;
  return static_cast<Fq>(r);
}

std::string FqField::to_string(Fq a) const {
  if (K_ == 1 || a < p_)
    return std::to_string(a);
  std::string out;
  Dense d = decode(a, p_, K_);
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0)
      continue;
    if (!out.empty())
      out += '+';
    if (i == 0 || d[i] != 1)
      out += std::to_string(d[i]);
    if (i >= 1)
      out += 'w';
    if (i >= 2)
      out += '^' + std::to_string(i);
  }
  return out;
}

FqPoly::FqPoly(std::shared_ptr<const FqField> field, std::vector<Term> terms)
    : field_(std::move(field)) {
  std::sort(terms.begin(), terms.end(),
            [](const Term &a, const Term &b) { return a.exponent < b.exponent; });
  for (const auto &t : terms) {
    if (t.coefficient >= field_->order())
      throw PreconditionViolated("coefficient outside the field");
    if (!terms_.empty() && terms_.back().exponent == t.exponent)
      terms_.back().coefficient = field_->add(terms_.back().coefficient, t.coefficient);
    else
      terms_.push_back(t);
    if (terms_.back().coefficient == 0)
      terms_.pop_back();
  }
}

Fq FqPoly::eval(Fq x) const {
  const FqField &f = *field_;
  Fq sum = 0;
  if (x == 0) {
    if (!terms_.empty() && terms_.front().exponent == 0)
      sum = terms_.front().coefficient;
    return sum;
  }
  const std::uint64_t n = f.order() - 1;
  const std::uint64_t lx = f.log(x);
  for (const auto &t : terms_)
    sum = f.add(sum, f.mul(t.coefficient, f.exp(static_cast<std::uint32_t>(lx * (t.exponent % n) % n))));
  return sum;
}

FqPoly FqPoly::operator+(const FqPoly &other) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return FqPoly(field_, std::move(all));
}

std::string FqPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (std::size_t i = terms_.size(); i-- > 0;) {
    const auto &t = terms_[i];
    if (!out.empty())
      out += " + ";
    std::string c = field_->to_string(t.coefficient);
    if (t.exponent == 0) {
      out += c;
      continue;
    }
    if (t.coefficient != 1)
      out += (c.find('+') != std::string::npos ? "(" + c + ")" : c) + "*";
    out += "X";
    if (t.exponent > 1)
      out += "^" + std::to_string(t.exponent);
  }
  return out;
}

FqPoly frobenius_poly(const FqPoly &f, unsigned iterations) {
  const FqField &field = f.field();
  const std::uint64_t scale = ipow(field.characteristic(), iterations);
  std::vector<FqPoly::Term> out;
  out.reserve(f.terms().size());
  for (const auto &t : f.terms())
    out.push_back({mul_checked(t.exponent, scale), field.frob(t.coefficient, iterations)});
  return FqPoly(f.field_ptr(), std::move(out));
}

double lacunary_degree_bound(std::uint32_t q, double eps) {
  return std::pow(double(q), 0.75 + eps);
}

namespace {

struct LacunaryWindow {
  std::uint64_t split;    // p^L
  std::uint64_t low_max;  // largest admissible deg P1
  std::uint64_t high_max; // largest admissible deg P2
};

LacunaryWindow lacunary_window(const FqField &field, unsigned L, double eps) {
  const unsigned K = field.degree();
  const std::uint64_t q = field.order();
  if (4 * L < 3 * K || L >= K)
    throw PreconditionViolated("need (3/4)K <= L < K, got K = " + std::to_string(K) +
                               ", L = " + std::to_string(L));
  if (!(eps > 0.0 && eps < 0.25))
    throw PreconditionViolated("need 0 < eps < 1/4");
  LacunaryWindow w;
  w.split = ipow(field.characteristic(), L);
  const double root = std::pow(double(q), 0.5 + eps);
  w.low_max = static_cast<std::uint64_t>(std::floor(root + 1e-9));
  if (double(w.split) + root - 1.0 >= double(q))
    throw PreconditionViolated("p^L + q^(1/2+eps) - 1 must be below q");
  w.high_max = w.split + w.low_max - 1;
  return w;
}

} // namespace

FqPoly lacunary_reduce(const FqPoly &f, unsigned L, double eps) {
  const FqField &field = f.field();
  const auto w = lacunary_window(field, L, eps);
  const unsigned shift = field.degree() - L;
  const std::uint64_t q = field.order();

  std::vector<FqPoly::Term> low, high;
  for (const auto &t : f.terms())
    (t.exponent >= w.split ? high : low).push_back(t);
  if (!low.empty() && low.back().exponent > w.low_max)
    throw PreconditionViolated("deg P1 = " + std::to_string(low.back().exponent) +
                               " exceeds q^(1/2+eps)");
  if (!high.empty() && high.back().exponent > w.high_max)
    throw PreconditionViolated("deg P2 = " + std::to_string(high.back().exponent) +
                               " exceeds p^L + q^(1/2+eps) - 1");

  FqPoly p1 = frobenius_poly(FqPoly(f.field_ptr(), std::move(low)), shift);
  FqPoly p2 = frobenius_poly(FqPoly(f.field_ptr(), std::move(high)), shift);
  std::vector<FqPoly::Term> reduced;
  for (const auto &t : p2.terms()) {
    // Exponents of Frob^(K-L)(P2) lie in [q, 2q), so x^E = x^(E-(q-1)) with E-(q-1) >= 1.
    reduced.push_back({t.exponent - (q - 1), t.coefficient});
  }
  FqPoly result = p1 + FqPoly(f.field_ptr(), std::move(reduced));
  if (result.is_zero())
    throw ZeroResult("reduced polynomial vanishes, so f had q roots");
  return result;
}

std::vector<Fq> roots(const FqPoly &f) {
  const FqField &field = f.field();
  if (field.order() > (1u << 20))
    throw FieldTooLarge("root scan limited to q <= 2^20");
  std::vector<Fq> out;
  for (Fq x = 0; x < field.order(); ++x)
    if (f.eval(x) == 0)
      out.push_back(x);
  return out;
}

FqPoly random_lacunary(std::shared_ptr<const FqField> field, unsigned L, double eps,
                       std::mt19937_64 &rng, unsigned max_terms) {
  const auto w = lacunary_window(*field, L, eps);
  std::uniform_int_distribution<Fq> coef(1, field->order() - 1);
  std::uniform_int_distribution<unsigned> count(1, std::max(1u, max_terms));
  std::uniform_int_distribution<std::uint64_t> low_exp(0, w.low_max);
  std::uniform_int_distribution<std::uint64_t> high_exp(w.split, w.high_max);
  for (;;) {
    std::vector<FqPoly::Term> terms;
    for (unsigned i = count(rng); i > 0; --i)
      terms.push_back({low_exp(rng), coef(rng)});
    for (unsigned i = count(rng) - 1; i > 0; --i)
      terms.push_back({high_exp(rng), coef(rng)});
    FqPoly f(field, std::move(terms));
    if (f.degree() > 0)
      return f;
  }
}

} // namespace grouplab
