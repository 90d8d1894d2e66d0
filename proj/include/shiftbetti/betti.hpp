#pragma once

#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "shiftbetti/semigroup.hpp"

namespace shiftbetti {

/// Simplicial complex on vertices {0..n-1}, n <= 8, faces stored as a
/// bitset indexed by vertex mask.
struct DivisorComplex {
  Int degree = 0;
  std::size_t vertices = 0;
  std::bitset<256> faces;

  bool has_face(std::uint32_t mask) const { return faces.test(mask); }
  std::size_t face_count() const { return faces.count(); }
  bool downward_closed() const;
  /// Some vertex v with F ∪ {v} a face for every face F.
  bool is_cone() const;
};

/// Faces {F : m - sum_{i in F} a_i in S}.
DivisorComplex divisor_complex(const Semigroup& s, Int m);

/// Reduced homology ranks over Q, entry k holding dimension k-1
/// (k = 0..n). Ranks come from fraction-free elimination on the integer
/// boundary matrices.
std::vector<Int> reduced_homology_ranks(const DivisorComplex& c);

/// Rank over Q of a dense integer matrix, by Bareiss elimination; retried
/// with arbitrary-precision integers when 64-bit arithmetic would overflow.
std::size_t exact_rank(std::vector<std::vector<Int>> matrix);

struct GradedBettiTable {
  std::size_t columns = 0;                  // n + 1
  std::map<Int, std::vector<Int>> rows;     // only nonzero rows
  std::vector<Int> totals;                  // b_0 .. b_n
  Int bound = 0;                            // largest degree examined

  /// Degrees with a nonzero entry in column i (the twists).
  std::vector<Int> twists(std::size_t column) const;
  Int alternating_sum() const;
};

GradedBettiTable graded_betti(const Semigroup& s,
                              std::optional<Int> bound = std::nullopt);

}  // namespace shiftbetti
