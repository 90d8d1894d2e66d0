#include "shiftbetti/binomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "shiftbetti/error.hpp"

namespace shiftbetti {

LatticeVector Binomial::vector() const {
  LatticeVector v(plus.size());
  for (std::size_t i = 0; i < plus.size(); ++i) v[i] = plus[i] - minus[i];
  return v;
}

namespace {

std::string monomial_string(std::span<const Int> e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << 'x' << (i + 1);
    if (e[i] != 1) os << '^' << e[i];
  }
  if (first) os << '1';
  return os.str();
}

// Disjoint-set forest over fiber indices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smaller index stays the root
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct FiberComponents {
  std::vector<Factorization> fiber;
  // Lexicographically least factorization of every component, in fiber
  // order; roots.front() is index 0.
  std::vector<std::size_t> roots;
};

FiberComponents fiber_components(const Semigroup& s, Int m) {
  FiberComponents out;
  out.fiber = s.factorizations(m);
  const std::size_t k = out.fiber.size();
  if (k == 0) return out;
  UnionFind uf(k);
  const std::size_t n = s.rank();
  for (std::size_t var = 0; var < n; ++var) {
    std::optional<std::size_t> anchor;
    for (std::size_t f = 0; f < k; ++f) {
      if (out.fiber[f].exponents[var] == 0) continue;
      if (anchor) {
        uf.unite(*anchor, f);
      } else {
        anchor = f;
      }
    }
  }
  for (std::size_t f = 0; f < k; ++f) {
    if (uf.find(f) == f) out.roots.push_back(f);
  }
  return out;
}

// Necessary condition for a disconnected factorization graph: two
// factorizations in different components through x_i and x_j force
// m - a_i, m - a_j in S but m - a_i - a_j outside S.
bool may_be_disconnected(const Semigroup& s, Int m) {
  const auto& g = s.generators();
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.contains(m - g[i])) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s.contains(m - g[j]) && !s.contains(m - g[i] - g[j])) return true;
    }
  }
  return false;
}

}  // namespace

std::string Binomial::to_string() const {
  return monomial_string(plus) + " - " + monomial_string(minus);
}

bool kernel_member(const Semigroup& s, std::span<const Int> v,
                   const std::optional<ShiftParams>& shift) {
  const auto& g = s.generators();
  if (v.size() != g.size()) {
    throw Error(ErrorKind::InvalidInput, "lattice vector length mismatch");
  }
  __int128 direct = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    direct += static_cast<__int128>(v[i]) * g[i];
  }
  if (!shift) return direct == 0;

  if (g.size() != 4) {
    throw Error(ErrorKind::InvalidInput, "shift structure needs four generators");
  }
  const auto [a, b, c, j] = *shift;
  const std::vector<Int> tuple{j, a + j, a + b + j, a + b + c + j};
  const Int d = gcd_of(tuple);
  for (std::size_t i = 0; i < 4; ++i) {
    if (tuple[i] / d != g[i]) {
      throw Error(ErrorKind::InvalidInput,
                  "shift structure does not describe this semigroup");
    }
  }
  __int128 sum = 0;
  for (Int x : v) sum += x;
  const __int128 rearranged = static_cast<__int128>(j) * sum +
                              static_cast<__int128>(a) * v[1] +
                              static_cast<__int128>(a + b) * v[2] +
                              static_cast<__int128>(a + b + c) * v[3];
  if (rearranged != direct * d) {
    throw std::logic_error("kernel_member: dot product and shifted form disagree");
  }
  return direct == 0;
}

Binomial binomial_from_vector(std::span<const Int> v) {
  if (std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; })) {
    throw Error(ErrorKind::DegenerateInput, "zero vector has no binomial");
  }
  Binomial b{std::vector<Int>(v.size(), 0), std::vector<Int>(v.size(), 0)};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0) b.plus[i] = v[i];
    if (v[i] < 0) b.minus[i] = -v[i];
  }
  return b;
}

Binomial CriticalWitness::binomial() const {
  Binomial b{std::vector<Int>(complement.exponents.size(), 0),
             complement.exponents};
  b.plus[index] = exponent;
  return b;
}

CriticalWitness critical_exponent(const Semigroup& s, std::size_t index) {
  const auto& gens = s.generators();
  const std::size_t n = gens.size();
  if (n < 2 || index >= n) {
    throw Error(ErrorKind::InvalidInput, "critical index out of range");
  }
  std::vector<Int> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != index) others.push_back(gens[i]);
  }
  const Semigroup sub = Semigroup::unreduced(others);
  const Int ai = gens[index];
  const Int g = gcd_of(others);
  const Int step = g / std::gcd(g, ai);

  __int128 cap = 4;
  for (Int o : others) {
    cap *= o;
    if (cap > (static_cast<__int128>(1) << 100)) break;
  }
  cap /= ai;
  cap = std::max<__int128>(cap, step);

  for (Int alpha = step; alpha <= cap; alpha += step) {
    Int target = 0;
    if (__builtin_mul_overflow(alpha, ai, &target)) break;
    if (!sub.contains(target)) continue;
    auto facts = sub.factorizations(target);
    auto best = std::min_element(
        facts.begin(), facts.end(), [](const Factorization& x, const Factorization& y) {
          return std::lexicographical_compare(x.exponents.rbegin(), x.exponents.rend(),
                                              y.exponents.rbegin(), y.exponents.rend());
        });
    CriticalWitness w;
    w.index = index;
    w.exponent = alpha;
    w.complement.degree = target;
    w.complement.exponents.assign(n, 0);
    for (std::size_t i = 0, k = 0; i < n; ++i) {
      if (i == index) continue;
      w.complement.exponents[i] = best->exponents[k++];
    }
    return w;
  }
  throw Error(ErrorKind::InternalBound, "critical exponent search exceeded its cap");
}

std::vector<Binomial> full_critical_set(const Semigroup& s) {
  std::vector<Binomial> out;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    out.push_back(critical_exponent(s, i).binomial());
  }
  return out;
}

Int betti_degree_bound(const Semigroup& s) {
  Int bound = s.frobenius();
  for (Int g : s.generators()) bound += g;
  return bound;
}

std::size_t factorization_components(const Semigroup& s, Int m) {
  return fiber_components(s, m).roots.size();
}

MinimalGenerators minimal_generators(const Semigroup& s, std::optional<Int> bound) {
  MinimalGenerators out;
  out.bound = bound.value_or(betti_degree_bound(s));
  for (Int m = 0; m <= out.bound; ++m) {
    if (!s.contains(m) || !may_be_disconnected(s, m)) continue;
    const FiberComponents fc = fiber_components(s, m);
    if (fc.roots.size() < 2) continue;
    const auto& base = fc.fiber[fc.roots.front()].exponents;
    for (std::size_t r = 1; r < fc.roots.size(); ++r) {
      out.binomials.push_back({fc.fiber[fc.roots[r]].exponents, base});
      out.degrees.push_back(m);
    }
  }
  out.mu = out.binomials.size();
  return out;
}

CompletenessReport check_completeness(const Semigroup& s,
                                      std::span<const Binomial> set,
                                      std::optional<Int> bound) {
  CompletenessReport report;
  const std::size_t n = s.rank();
  for (const Binomial& b : set) {
    if (b.plus.size() != n || b.minus.size() != n ||
        !kernel_member(s, b.vector())) {
      report.all_in_kernel = false;
      report.complete = false;
      return report;
    }
  }
  const Int limit = bound.value_or(betti_degree_bound(s));
  const auto lex_less = [](const Factorization& x, const std::vector<Int>& y) {
    return x.exponents < y;
  };
  std::vector<Int> moved(n);
  for (Int m = 0; m <= limit; ++m) {
    if (!s.contains(m)) continue;
    const auto fiber = s.factorizations(m);
    if (fiber.size() < 2) continue;
    UnionFind uf(fiber.size());
    std::size_t components = fiber.size();
    for (std::size_t f = 0; f < fiber.size(); ++f) {
      const auto& u = fiber[f].exponents;
      for (const Binomial& b : set) {
        for (int orientation = 0; orientation < 2; ++orientation) {
          const auto& from = orientation == 0 ? b.plus : b.minus;
          const auto& to = orientation == 0 ? b.minus : b.plus;
          bool divides = true;
          for (std::size_t i = 0; i < n && divides; ++i) divides = u[i] >= from[i];
          if (!divides) continue;
          for (std::size_t i = 0; i < n; ++i) moved[i] = u[i] - from[i] + to[i];
          auto it = std::lower_bound(fiber.begin(), fiber.end(), moved, lex_less);
          if (it == fiber.end() || it->exponents != moved) {
            throw std::logic_error("check_completeness: move left the fiber");
          }
          if (uf.unite(f, static_cast<std::size_t>(it - fiber.begin()))) --components;
        }
      }
    }
    if (components != 1) {
      report.complete = false;
      report.failing_degree = m;
      return report;
    }
  }
  return report;
}

bool ideal_equivalent(const Semigroup& s, std::span<const Binomial> lhs,
                      std::span<const Binomial> rhs) {
  return check_completeness(s, lhs).complete && check_completeness(s, rhs).complete;
}

}  // namespace shiftbetti
