#pragma once

// Brute-force references used only by the tests. Nothing here calls into
// the library's membership tables, enumeration or elimination code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Int = std::int64_t;

// Visits every nonnegative vector v with sum v_i * g_i <= limit.
template <typename Visit>
void for_each_combination(const std::vector<Int>& g, Int limit, Visit&& visit) {
  std::vector<Int> v(g.size(), 0);
  for (;;) {
    Int total = 0;
    for (std::size_t i = 0; i < g.size(); ++i) total += v[i] * g[i];
    if (total <= limit) visit(v, total);
    std::size_t k = 0;
    for (; k < g.size(); ++k) {
      ++v[k];
      Int t = 0;
      for (std::size_t i = 0; i < g.size(); ++i) t += v[i] * g[i];
      if (t <= limit) break;
      v[k] = 0;
    }
    if (k == g.size()) return;
  }
}

inline std::vector<bool> members(const std::vector<Int>& g, Int limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
  for_each_combination(g, limit, [&](const std::vector<Int>&, Int t) {
    in[static_cast<std::size_t>(t)] = true;
  });
  return in;
}

inline std::vector<std::vector<Int>> factorizations(const std::vector<Int>& g, Int m) {
  std::vector<std::vector<Int>> out;
  for_each_combination(g, m, [&](const std::vector<Int>& v, Int t) {
    if (t == m) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Largest gap, using the (a_min - 1)(a_max - 1) - 1 upper bound.
inline Int frobenius(std::vector<Int> g) {
  std::sort(g.begin(), g.end());
  const Int limit = (g.front()) * (g.back()) + g.back();
  const auto in = members(g, limit);
  Int last = -1;
  for (Int m = 0; m <= limit; ++m) {
    if (!in[static_cast<std::size_t>(m)]) last = m;
  }
  return last;
}

// Rank modulo a prime by plain Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<Int>> a, Int p = 1'000'000'007) {
  auto mod = [p](Int x) { return ((x % p) + p) % p; };
  auto power = [&](Int b, Int e) {
    Int r = 1;
    b = mod(b);
    while (e) {
      if (e & 1) r = static_cast<Int>(static_cast<__int128>(r) * b % p);
      b = static_cast<Int>(static_cast<__int128>(b) * b % p);
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a)
    for (auto& x : row) x = mod(x);
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const Int inv = power(a[rank][c], p - 2);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Int f = static_cast<Int>(static_cast<__int128>(a[r][c]) * inv % p);
      for (std::size_t k = c; k < cols; ++k) {
        a[r][k] = mod(a[r][k] - static_cast<Int>(static_cast<__int128>(f) * a[rank][k] % p));
      }
    }
    ++rank;
  }
  return rank;
}

// Random tuples of `n` distinct values in [lo, hi] with gcd 1.
inline std::vector<std::vector<Int>> coprime_tuples(std::size_t count, std::size_t n,
                                                     Int lo, Int hi, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Int> dist(lo, hi);
  std::vector<std::vector<Int>> out;
  while (out.size() < count) {
    std::vector<Int> t;
    while (t.size() < n) {
      const Int x = dist(rng);
      if (std::find(t.begin(), t.end(), x) == t.end()) t.push_back(x);
    }
    Int g = 0;
    for (Int x : t) g = std::gcd(g, x);
    if (g == 1) out.push_back(t);
  }
  return out;
}

}  // namespace oracle
