#include "shiftbetti/betti.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "shiftbetti/binomial.hpp"
#include "shiftbetti/error.hpp"

namespace shiftbetti {

bool DivisorComplex::downward_closed() const {
  const std::uint32_t full = 1u << vertices;
  for (std::uint32_t f = 0; f < full; ++f) {
    if (!faces.test(f)) continue;
    for (std::uint32_t v = 0; v < vertices; ++v) {
      if ((f >> v & 1u) && !faces.test(f & ~(1u << v))) return false;
    }
  }
  return true;
}

bool DivisorComplex::is_cone() const {
  const std::uint32_t full = 1u << vertices;
  if (!faces.test(0)) return false;
  for (std::uint32_t v = 0; v < vertices; ++v) {
    const std::uint32_t bit = 1u << v;
    bool apex = true;
    for (std::uint32_t f = 0; f < full && apex; ++f) {
      if (!(f & bit) && faces.test(f) && !faces.test(f | bit)) apex = false;
    }
    if (apex) return true;
  }
  return false;
}

namespace {

std::vector<Int> subset_sums(const std::vector<Int>& gens) {
  const std::size_t full = std::size_t{1} << gens.size();
  std::vector<Int> sums(full, 0);
  for (std::size_t f = 1; f < full; ++f) {
    const auto low = static_cast<std::size_t>(std::countr_zero(f));
    sums[f] = sums[f & (f - 1)] + gens[low];
  }
  return sums;
}

DivisorComplex complex_from_sums(const Semigroup& s, const std::vector<Int>& sums,
                                 Int m) {
  DivisorComplex c;
  c.degree = m;
  c.vertices = s.rank();
  for (std::size_t f = 0; f < sums.size(); ++f) {
    if (s.contains(m - sums[f])) c.faces.set(f);
  }
  return c;
}

template <typename T>
bool checked_step(const T& lhs_a, const T& lhs_b, const T& rhs_a, const T& rhs_b,
                  const T& divisor, T& out) {
  if constexpr (std::is_same_v<T, Int>) {
    Int p = 0, q = 0, diff = 0;
    if (__builtin_mul_overflow(lhs_a, lhs_b, &p) ||
        __builtin_mul_overflow(rhs_a, rhs_b, &q) ||
        __builtin_sub_overflow(p, q, &diff)) {
      return false;
    }
    out = diff / divisor;
  } else {
    out = (lhs_a * lhs_b - rhs_a * rhs_b) / divisor;
  }
  return true;
}

// Bareiss fraction-free elimination; returns nullopt on 64-bit overflow.
template <typename T>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<T>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = col + 1; k < cols; ++k) {
        T next;
        if (!checked_step<T>(a[rank][col], a[r][k], a[r][col], a[rank][k], prev, next)) {
          return std::nullopt;
        }
        a[r][k] = next;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Boundary matrix from faces of size k to faces of size k-1, with the
// standard alternating signs by vertex position.
std::vector<std::vector<Int>> boundary(const DivisorComplex& c,
                                       const std::vector<std::uint32_t>& upper,
                                       const std::vector<std::uint32_t>& lower) {
  std::vector<std::vector<Int>> m(lower.size(), std::vector<Int>(upper.size(), 0));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const std::uint32_t f = upper[col];
    int position = 0;
    for (std::uint32_t v = 0; v < c.vertices; ++v) {
      if (!(f >> v & 1u)) continue;
      const std::uint32_t face = f & ~(1u << v);
      const auto it = std::lower_bound(lower.begin(), lower.end(), face);
      m[static_cast<std::size_t>(it - lower.begin())][col] = (position % 2 == 0) ? 1 : -1;
      ++position;
    }
  }
  return m;
}

}  // namespace

std::size_t exact_rank(std::vector<std::vector<Int>> matrix) {
  if (auto r = bareiss_rank<Int>(matrix)) return *r;
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> big;
  big.reserve(matrix.size());
  for (const auto& row : matrix) big.emplace_back(row.begin(), row.end());
  return *bareiss_rank<cpp_int>(std::move(big));
}

DivisorComplex divisor_complex(const Semigroup& s, Int m) {
  if (s.rank() > kMaxGenerators) {
    throw Error(ErrorKind::InvalidInput, "divisor complexes support at most 8 vertices");
  }
  return complex_from_sums(s, subset_sums(s.generators()), m);
}

std::vector<Int> reduced_homology_ranks(const DivisorComplex& c) {
  const std::size_t n = c.vertices;
  if (!c.downward_closed()) {
    throw Error(ErrorKind::InvalidInput, "complex is not downward closed");
  }
  // by_size[k]: faces with k vertices (dimension k-1), ascending masks.
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t f = 0; f < (1u << n); ++f) {
    if (c.faces.test(f)) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  }
  // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces.
  std::vector<Int> ranks(n + 2, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    if (by_size[k].empty() || by_size[k - 1].empty()) continue;
    ranks[k] = static_cast<Int>(exact_rank(boundary(c, by_size[k], by_size[k - 1])));
  }
  std::vector<Int> homology(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    const Int h = static_cast<Int>(by_size[k].size()) - ranks[k] - ranks[k + 1];
    if (h < 0) throw std::logic_error("reduced_homology_ranks: rank-nullity violated");
    homology[k] = h;
  }
  return homology;
}

std::vector<Int> GradedBettiTable::twists(std::size_t column) const {
  std::vector<Int> out;
  for (const auto& [m, row] : rows) {
    for (Int i = 0; i < row[column]; ++i) out.push_back(m);
  }
  return out;
}

Int GradedBettiTable::alternating_sum() const {
  Int sum = 0;
  for (std::size_t i = 0; i < totals.size(); ++i) {
    sum += (i % 2 == 0) ? totals[i] : -totals[i];
  }
  return sum;
}

GradedBettiTable graded_betti(const Semigroup& s, std::optional<Int> bound) {
  if (s.rank() > kMaxGenerators) {
    throw Error(ErrorKind::InvalidInput, "at most 8 generators are supported");
  }
  GradedBettiTable table;
  table.columns = s.rank() + 1;
  table.totals.assign(table.columns, 0);
  table.bound = bound.value_or(betti_degree_bound(s));
  const auto sums = subset_sums(s.generators());
  for (Int m = 0; m <= table.bound; ++m) {
    if (!s.contains(m)) continue;
    const DivisorComplex c = complex_from_sums(s, sums, m);
    // Cones are acyclic; skipping them leaves every row unchanged.
    if (c.is_cone()) continue;
    auto h = reduced_homology_ranks(c);
    if (std::all_of(h.begin(), h.end(), [](Int x) { return x == 0; })) continue;
    for (std::size_t i = 0; i < h.size(); ++i) table.totals[i] += h[i];
    table.rows.emplace(m, std::move(h));
  }
  return table;
}

}  // namespace shiftbetti
