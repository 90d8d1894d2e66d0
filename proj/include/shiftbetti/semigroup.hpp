#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace shiftbetti {

using Int = std::int64_t;

/// Hard ceiling on membership-table length. Semigroups whose table would
/// need more entries are rejected with ErrorKind::InternalBound.
inline constexpr Int kMaxTableEntries = Int{1} << 31;

inline constexpr std::size_t kMaxGenerators = 8;

/// Membership bits for a semigroup with coprime generators, extended
/// geometrically until a run of `min generator` consecutive members shows
/// that every larger integer is a member.
class MembershipTable {
 public:
  explicit MembershipTable(std::span<const Int> coprime_generators);

  bool contains(Int m) const {
    if (m < 0) return false;
    if (m >= static_cast<Int>(bits_.size())) return true;
    return bits_[static_cast<std::size_t>(m)] != 0;
  }

  /// Largest gap, or -1 when every nonnegative integer is a member.
  Int frobenius() const { return frobenius_; }

  /// Length of the stored prefix; everything at or above it is a member.
  Int bound() const { return static_cast<Int>(bits_.size()); }

 private:
  std::vector<std::uint8_t> bits_;
  Int frobenius_ = -1;
};

struct Factorization {
  std::vector<Int> exponents;
  Int degree = 0;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// The semigroup generated by a finite tuple of positive integers.
///
/// Instances are immutable once built: the membership table is completed
/// in the constructor, so a Semigroup may be shared freely between threads.
class Semigroup {
 public:
  /// Sorts, removes exact duplicates and divides out the gcd.
  static Semigroup normalize(std::span<const Int> raw);
  static Semigroup normalize(std::initializer_list<Int> raw) {
    return normalize(std::span<const Int>(raw.begin(), raw.size()));
  }

  /// Sorts and removes duplicates but keeps the gcd. Membership still works
  /// (through the scaled reduced table); frobenius() and apery() refuse.
  static Semigroup unreduced(std::span<const Int> raw);

  const std::vector<Int>& generators() const { return generators_; }
  /// The tuple as given to normalize(), sorted.
  const std::vector<Int>& raw_generators() const { return raw_; }
  std::size_t rank() const { return generators_.size(); }
  /// gcd of the raw tuple (the factor normalize() divided out).
  Int content() const { return content_; }
  /// True when gcd(generators()) == 1.
  bool reduced() const { return scale_ == 1; }
  std::size_t duplicates_removed() const { return duplicates_removed_; }

  bool contains(Int m) const;
  Int frobenius() const;
  std::vector<Int> apery(Int pivot) const;

  /// All nonnegative vectors v with sum v_i * a_i == m, in ascending
  /// lexicographic order (first coordinate most significant).
  std::vector<Factorization> factorizations(Int m) const;

  /// Degree of an exponent vector under this grading.
  Int degree_of(std::span<const Int> exponents) const;

  std::string to_string() const;

 private:
  Semigroup(std::vector<Int> raw, std::vector<Int> generators, Int content,
            Int scale, std::size_t duplicates_removed, bool with_suffixes = true);

  void enumerate(std::size_t level, Int remainder, std::vector<Int>& current,
                 std::vector<Factorization>& out, Int degree) const;

  std::vector<Int> raw_;
  std::vector<Int> generators_;
  Int content_ = 1;
  // gcd of generators_ (1 after normalize); membership goes through table_
  // built on generators_ / scale_.
  Int scale_ = 1;
  std::size_t duplicates_removed_ = 0;
  std::shared_ptr<const MembershipTable> table_;
  // suffixes_[k] is the semigroup on generators_[k..], used to prune
  // factorization enumeration. Built eagerly for k >= 1.
  std::vector<std::shared_ptr<const Semigroup>> suffixes_;
};

Int gcd_of(std::span<const Int> values);

}  // namespace shiftbetti
