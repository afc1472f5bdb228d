#include "grouplab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "grouplab/errors.hpp"
#include "grouplab/group_context.hpp"
#include "grouplab/power_maps.hpp"

namespace grouplab {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1)
      r = r * b % p;
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2)
    return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Row-reduces in place; returns pivot columns. Rows past the rank are dropped.
std::vector<std::size_t> rref(Mat &m, u64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0)
      ++piv;
    if (piv == m.size())
      continue;
    std::swap(m[r], m[piv]);
    const u64 s = inv_mod(m[r][c], p);
    for (auto &v : m[r])
      v = v * s % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      const u64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Basis of {u : A u = 0} for square A.
Mat kernel(Mat a, u64 p) {
  const std::size_t n = a.size();
  auto pivots = rref(a, p);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots)
    is_pivot[c] = 1;
  Mat out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f])
      continue;
    Vec u(n, 0);
    u[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      u[pivots[r]] = (p - a[r][f]) % p;
    out.push_back(std::move(u));
  }
  return out;
}

// Characteristic polynomial, low coefficient first, via Hessenberg reduction.
Vec char_poly(Mat h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto &row : h)
        std::swap(row[piv], row[m]);
    }
    const u64 inv = inv_mod(h[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0)
        continue;
      const u64 u = h[i][m - 1] * inv % p;
      for (std::size_t j = 0; j < n; ++j)
        h[i][j] = (h[i][j] + (p - u) * h[m][j]) % p;
      for (std::size_t j = 0; j < n; ++j)
        h[j][m] = (h[j][m] + u * h[j][i]) % p;
    }
  }
  std::vector<Vec> polys{Vec{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    const Vec &prev = polys[m - 1];
    Vec cur(m + 1, 0);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + (p - h[m - 1][m - 1]) * prev[d]) % p;
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = t * h[i][i - 1] % p;
      const u64 f = h[i - 1][m - 1] * t % p;
      if (f != 0)
        for (std::size_t d = 0; d < polys[i - 1].size(); ++d)
          cur[d] = (cur[d] + (p - f) * polys[i - 1][d]) % p;
    }
    polys.push_back(std::move(cur));
  }
  return polys[n];
}

u64 eval_poly(const Vec &f, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = f.size(); i-- > 0;)
    r = (r * x + f[i]) % p;
  return r;
}

// A subspace of F_p^k as RREF basis rows with their pivot columns.
struct Space {
  Mat basis;
  std::vector<std::size_t> pivots;
};

Space make_space(Mat rows, u64 p) {
  Space s;
  s.pivots = rref(rows, p);
  s.basis = std::move(rows);
  return s;
}

// Splits an M-invariant space into eigenspaces of M (columns act as M v).
std::vector<Space> split(const Space &v, const Mat &m, u64 p) {
  const std::size_t d = v.basis.size(), k = m.size();
  // R[r][c] = (M b_c)[pivot_r]
  Mat r(d, Vec(d, 0));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t row = 0; row < d; ++row) {
      const std::size_t j = v.pivots[row];
      u64 s = 0;
      for (std::size_t l = 0; l < k; ++l)
        s = (s + m[j][l] * v.basis[c][l]) % p;
      r[row][c] = s;
    }
  bool scalar = true;
  for (std::size_t i = 0; i < d && scalar; ++i)
    for (std::size_t j = 0; j < d && scalar; ++j)
      scalar = r[i][j] == (i == j ? r[0][0] : 0);
  if (scalar)
    return {v};

  const Vec f = char_poly(r, p);
  std::vector<Space> pieces;
  std::size_t covered = 0;
  for (u64 lambda = 0; lambda < p && covered < d; ++lambda) {
    if (eval_poly(f, lambda, p) != 0)
      continue;
    Mat shifted = r;
    for (std::size_t i = 0; i < d; ++i)
      shifted[i][i] = (shifted[i][i] + p - lambda) % p;
    Mat ker = kernel(shifted, p);
    Mat rows;
    for (const auto &u : ker) {
      Vec w(k, 0);
      for (std::size_t c = 0; c < d; ++c)
        if (u[c])
          for (std::size_t l = 0; l < k; ++l)
            w[l] = (w[l] + u[c] * v.basis[c][l]) % p;
      rows.push_back(std::move(w));
    }
    covered += rows.size();
    pieces.push_back(make_space(std::move(rows), p));
  }
  if (covered != d)
    throw DegenerateEigenspace("class matrix not diagonalizable over F_" + std::to_string(p));
  return pieces;
}

} // namespace

std::uint64_t splitting_prime(std::uint64_t exponent, std::uint64_t order, std::uint64_t after) {
  const u64 floor = std::max(2 * order, after);
  for (u64 p = (floor / exponent + 1) * exponent + 1; p < (u64{1} << 31); p += exponent)
    if (p > floor && is_prime(p))
      return p;
  throw NoSplittingPrime("no prime = 1 mod " + std::to_string(exponent) + " below 2^31");
}

CharacterTableMod character_table(const GroupTable &g, std::uint64_t prime) {
  return character_table(g, conjugacy_classes(g), prime);
}

CharacterTableMod character_table(const GroupTable &g, const ConjClassPartition &classes,
                                  std::uint64_t prime) {
  const std::size_t n = g.order(), k = classes.count();
  if (k > 64 || n > 1024)
    throw PreconditionViolated("character tables need k(G) <= 64 and |G| <= 1024");
  const u64 ex = exponent(g);
  const u64 p = prime ? prime : splitting_prime(ex, n);
  if (!is_prime(p) || (p - 1) % ex != 0 || p <= 2 * n)
    throw PreconditionViolated("prime " + std::to_string(p) + " unsuitable for this group");

  CharacterTableMod t;
  t.prime = p;
  t.group_order = n;
  t.classes = classes;
  for (std::size_t c = 0; c < k; ++c) {
    const Element rep = classes.representatives[c];
    t.inverse_class.push_back(classes.class_of[g.inv(rep)]);
    t.square_class.push_back(classes.class_of[g.mul(rep, rep)]);
  }

  // mats[i][j][l] = #{x in C_i : x^-1 z_l in C_j}, so C_i C_j = sum_l mats[i][j][l] C_l.
  std::vector<Mat> mats(k, Mat(k, Vec(k, 0)));
  for (std::size_t l = 0; l < k; ++l) {
    const Element z = classes.representatives[l];
    for (std::size_t i = 0; i < k; ++i)
      for (auto x : classes.classes[i])
        ++mats[i][classes.class_of[g.mul(g.inv(x), z)]][l];
  }

  Mat ident(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    ident[i][i] = 1;
  std::vector<Space> spaces{make_space(ident, p)};
  auto refine = [&](const Mat &m) {
    std::vector<Space> next;
    for (const auto &s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto &piece : split(s, m, p))
        next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  };
  auto unsplit = [&] {
    return std::any_of(spaces.begin(), spaces.end(),
                       [](const Space &s) { return s.basis.size() > 1; });
  };
  for (std::size_t i = 1; i < k && unsplit(); ++i)
    refine(mats[i]);
  std::mt19937_64 rng(p);
  for (int attempt = 0; attempt < 4 && unsplit(); ++attempt) {
    Mat combo(k, Vec(k, 0));
    for (std::size_t i = 1; i < k; ++i) {
      const u64 c = rng() % p;
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l)
          combo[j][l] = (combo[j][l] + c * mats[i][j][l]) % p;
    }
    refine(combo);
  }
  if (unsplit() || spaces.size() != k)
    throw DegenerateEigenspace("common eigenspaces did not split over F_" + std::to_string(p));

  std::vector<std::pair<u64, Vec>> rows;
  for (const auto &s : spaces) {
    Vec w = s.basis[0];
    if (w[0] == 0)
      throw DegenerateEigenspace("central character vanishes on the identity class");
    const u64 s0 = inv_mod(w[0], p);
    for (auto &v : w)
      v = v * s0 % p;
    // |G| / chi(1)^2 = sum_c w_c w_{c*} / |C_c|
    u64 sum = 0;
    for (std::size_t c = 0; c < k; ++c)
      sum = (sum + w[c] * w[t.inverse_class[c]] % p * inv_mod(classes.size_of(c), p)) % p;
    if (sum == 0)
      throw DegenerateEigenspace("zero norm for a central character");
    const u64 d2 = n % p * inv_mod(sum, p) % p;
    const u64 d = static_cast<u64>(std::llround(std::sqrt(double(d2))));
    if (d == 0 || d * d != d2 || n % d != 0)
      throw DegenerateEigenspace("degree residue " + std::to_string(d2) + " is not a square");
    Vec chi(k);
    for (std::size_t c = 0; c < k; ++c)
      chi[c] = w[c] * (d % p) % p * inv_mod(classes.size_of(c), p) % p;
    rows.emplace_back(d, std::move(chi));
  }
  std::sort(rows.begin(), rows.end());
  for (auto &[d, chi] : rows) {
    t.degrees.push_back(d);
    t.values.push_back(std::move(chi));
  }
  return t;
}

bool rows_orthogonal(const CharacterTableMod &t) {
  const u64 p = t.prime;
  for (std::size_t i = 0; i < t.k(); ++i)
    for (std::size_t j = 0; j < t.k(); ++j) {
      u64 s = 0;
      for (std::size_t c = 0; c < t.k(); ++c)
        s = (s + t.classes.size_of(c) * t.values[i][c] % p * t.values[j][t.inverse_class[c]]) % p;
      if (s != (i == j ? t.group_order % p : 0))
        return false;
    }
  return true;
}

bool columns_orthogonal(const CharacterTableMod &t) {
  const u64 p = t.prime;
  for (std::size_t c = 0; c < t.k(); ++c)
    for (std::size_t d = 0; d < t.k(); ++d) {
      u64 s = 0;
      for (std::size_t i = 0; i < t.k(); ++i)
        s = (s + t.values[i][c] * t.values[i][t.inverse_class[d]]) % p;
      const u64 expected =
          c == d ? t.group_order / t.classes.size_of(c) % p : 0;
      if (s != expected)
        return false;
    }
  return true;
}

FSIndicators fs_indicators(const CharacterTableMod &t) {
  const u64 p = t.prime;
  const u64 inv_n = inv_mod(t.group_order, p);
  FSIndicators out;
  for (std::size_t i = 0; i < t.k(); ++i) {
    u64 s = 0;
    for (std::size_t c = 0; c < t.k(); ++c)
      s = (s + t.classes.size_of(c) * t.values[i][t.square_class[c]]) % p;
    s = s * inv_n % p;
    if (s == 0)
      out.nu2.push_back(0);
    else if (s == 1)
      out.nu2.push_back(1);
    else if (s == p - 1)
      out.nu2.push_back(-1);
    else
      throw LiftAmbiguous("indicator residue " + std::to_string(s) + " mod " +
                          std::to_string(p));
  }
  return out;
}

std::uint64_t sqrt_via_characters(const CharacterTableMod &t, const FSIndicators &nu,
                                  Element x) {
  const u64 p = t.prime;
  const std::size_t c = t.classes.class_of[x];
  u64 s = 0;
  for (std::size_t i = 0; i < t.k(); ++i) {
    if (nu.nu2[i] == 1)
      s = (s + t.values[i][c]) % p;
    else if (nu.nu2[i] == -1)
      s = (s + p - t.values[i][c]) % p;
  }
  if (s > t.group_order)
    throw LiftOutOfRange("residue " + std::to_string(s) + " exceeds |G|");
  return s;
}

std::uint64_t degsum(const CharacterTableMod &t) {
  u64 s = 0;
  for (auto d : t.degrees)
    s += d;
  return s;
}

namespace {

std::vector<CharacterTableMod> two_tables(GroupContext &ctx) {
  const auto &g = ctx.table();
  const u64 ex = ctx.exponent();
  const u64 p1 = splitting_prime(ex, g.order());
  const u64 p2 = splitting_prime(ex, g.order(), p1);
  return {character_table(g, ctx.classes(), p1), character_table(g, ctx.classes(), p2)};
}

} // namespace

CheckReport check_character_tables(GroupContext &ctx) {
  CheckTally t("characters.tables");
  for (const auto &tab : two_tables(ctx)) {
    u64 squares = 0;
    for (auto d : tab.degrees)
      squares += d * d;
    t.expect(tab.k() == ctx.k(), {{"prime", tab.prime}, {"rows", tab.k()}, {"k", ctx.k()}});
    t.expect(squares == ctx.order(), {{"prime", tab.prime}, {"sum_degree_squares", squares}});
    t.expect(rows_orthogonal(tab), {{"prime", tab.prime}, {"reason", "row orthogonality"}});
    t.expect(columns_orthogonal(tab),
             {{"prime", tab.prime}, {"reason", "column orthogonality"}});
    t.data()["degrees"] = tab.degrees;
    t.data()["primes"].push_back(tab.prime);
  }
  return t.finish();
}

CheckReport check_sqrt_identity(GroupContext &ctx) {
  const auto &g = ctx.table();
  CheckTally t("characters.sqrtIdentity");
  const auto counts = sqrt_counts(g);
  for (const auto &tab : two_tables(ctx)) {
    const auto nu = fs_indicators(tab);
    for (Element x = 0; x < g.order(); ++x) {
      const u64 via = sqrt_via_characters(tab, nu, x);
      t.expect(via == counts[x], {{"prime", tab.prime},
                                  {"x", g.name(x)},
                                  {"characters", via},
                                  {"direct", counts[x]}});
    }
    long long at_one = 0;
    for (std::size_t i = 0; i < tab.k(); ++i)
      at_one += nu.nu2[i] * static_cast<long long>(tab.degrees[i]);
    std::size_t involutions = 0;
    for (Element x = 1; x < g.order(); ++x)
      involutions += g.element_order(x) == 2;
    t.expect(at_one == static_cast<long long>(1 + involutions),
             {{"prime", tab.prime}, {"indicator_degree_sum", at_one}, {"involutions", involutions}});
    t.data()["nu2"] = nu.nu2;
  }
  return t.finish();
}

CheckReport check_characterCor(GroupContext &ctx) {
  CheckTally t("characters.characterCor");
  const auto tabs = two_tables(ctx);
  const u64 ds = degsum(tabs[0]);
  t.expect(ds == degsum(tabs[1]), {{"degsum_p1", ds}, {"degsum_p2", degsum(tabs[1])}});
  const u64 bound_sq = u64(ctx.k()) * ctx.order();
  t.expect(ds * ds <= bound_sq, {{"degsum", ds}, {"k_times_order", bound_sq}});
  t.data()["degsum"] = ds;
  t.data()["sqrt_k_order"] = std::sqrt(double(bound_sq));
  if (ctx.complete()) {
    const std::size_t lm1 = ctx.l(-1).value;
    t.expect(lm1 <= ds, {{"L-1", lm1}, {"degsum", ds}});
    t.data()["L-1"] = lm1;
  }
  return t.finish();
}

} // namespace grouplab
