#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftbetti/semigroup.hpp"

namespace shiftbetti {

using LatticeVector = std::vector<Int>;

/// x^plus - x^minus with disjoint supports.
struct Binomial {
  std::vector<Int> plus;
  std::vector<Int> minus;

  LatticeVector vector() const;
  /// Human-readable form, 1-based variables: "x1^4 - x4^3".
  std::string to_string() const;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// (a, b, c, j) with the tuple (j, a+j, a+b+j, a+b+c+j).
struct ShiftParams {
  Int a = 0;
  Int b = 0;
  Int c = 0;
  Int j = 0;
};

/// True iff <v, generators> == 0. When `shift` is given the shifted-family
/// rearrangement j*sum(v) + a*v2 + (a+b)*v3 + (a+b+c)*v4 is evaluated too and
/// must agree; `shift` must describe S up to the content factor.
bool kernel_member(const Semigroup& s, std::span<const Int> v,
                   const std::optional<ShiftParams>& shift = std::nullopt);

Binomial binomial_from_vector(std::span<const Int> v);

/// x_i^exponent - x^complement, with `complement` a factorization of
/// exponent * a_i over the remaining generators (zero at index i).
struct CriticalWitness {
  std::size_t index = 0;
  Int exponent = 0;
  Factorization complement;

  Binomial binomial() const;
};

/// Minimal exponent for generator `index` (0-based). Among the complements
/// the one chosen is least in lexicographic order read from the last
/// variable, which reproduces x2^5 - x1^3 x3^2 on <30,32,35,40>.
CriticalWitness critical_exponent(const Semigroup& s, std::size_t index);

std::vector<Binomial> full_critical_set(const Semigroup& s);

struct MinimalGenerators {
  std::vector<Binomial> binomials;
  std::vector<Int> degrees;  // parallel to binomials
  std::size_t mu = 0;
  Int bound = 0;
};

/// frobenius + sum of generators: every divisor complex above it is a full
/// simplex.
Int betti_degree_bound(const Semigroup& s);

/// Number of connected components of the factorization graph in degree m
/// (vertices: factorizations, edges: shared support). 0 when m is not in S.
std::size_t factorization_components(const Semigroup& s, Int m);

/// Minimal binomial generating set of the defining ideal, from the
/// factorization graph of every degree up to `bound` (defaults to
/// betti_degree_bound). Degrees ascend; within a degree the component of the
/// lexicographically least factorization is joined to every other one.
MinimalGenerators minimal_generators(const Semigroup& s,
                                     std::optional<Int> bound = std::nullopt);

struct CompletenessReport {
  bool complete = true;
  bool all_in_kernel = true;
  std::optional<Int> failing_degree;
};

/// Checks that `set` generates the defining ideal up to `bound`: every
/// binomial is in the kernel, and in every degree m <= bound the
/// factorizations are connected by moves x^u -> x^(u - plus + minus) (both
/// orientations). Equivalently every kernel binomial of degree <= bound
/// reduces to zero against the set.
CompletenessReport check_completeness(const Semigroup& s,
                                      std::span<const Binomial> set,
                                      std::optional<Int> bound = std::nullopt);

/// Both sets lie in the kernel and both pass the completeness check, so
/// they generate the same ideal.
bool ideal_equivalent(const Semigroup& s, std::span<const Binomial> lhs,
                      std::span<const Binomial> rhs);

}  // namespace shiftbetti
