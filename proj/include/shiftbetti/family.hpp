#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftbetti/betti.hpp"
#include "shiftbetti/binomial.hpp"
#include "shiftbetti/semigroup.hpp"

namespace shiftbetti {

/// The shifted family (s+j, a+s+j, a+b+s+j, a+b+c+s+j), j >= 1.
/// offset 0 is the (j, a+j, a+b+j, a+b+c+j) indexing; offset 1 is the
/// indexing of the published tables, led by (1, 1+a, 1+a+b, 1+a+b+c).
class FamilySpec {
 public:
  FamilySpec(Int a, Int b, Int c, Int offset = 1);

  Int a() const { return a_; }
  Int b() const { return b_; }
  Int c() const { return c_; }
  Int offset() const { return offset_; }
  Int period() const { return a_ + b_ + c_; }

  /// p with c = p(a+b), when it exists.
  std::optional<Int> p_for_c() const { return p_for_c_; }
  /// p with a = p(b+c), when it exists.
  std::optional<Int> p_for_a() const { return p_for_a_; }

  /// First raw generator of a_j (j + offset).
  Int leading(Int j) const { return j + offset_; }
  std::vector<Int> raw_tuple(Int j) const;

 private:
  Int a_, b_, c_, offset_;
  std::optional<Int> p_for_c_;
  std::optional<Int> p_for_a_;
};

Semigroup shift_sequence(const FamilySpec& family, Int j);

/// Complete intersection: mu equals the height n - 1. mu comes from the
/// factorization graphs and is cross-checked against b_1 of the Betti
/// table; a mismatch throws std::logic_error.
bool is_complete_intersection(const Semigroup& s);

/// Arithmetic CI test for <q, q+a, q+a+b>: x = gcd(q, a+b) != 1 and
/// x(q+a) = alpha*q + beta*(q+a+b) for some alpha, beta >= 0.
/// Requires q >= max(ab + b^2, ab + a^2).
bool ci_check_3gen(Int q, Int a, Int b);

struct ScanRow {
  Int j = 0;
  std::vector<Int> raw;         // the shifted tuple before normalization
  std::vector<Int> generators;  // normalized
  Int content = 1;
  std::vector<Int> totals;      // b_0 .. b_4
  std::size_t mu = 0;
  bool ci = false;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

struct Period {
  Int start = 0;   // j_0
  Int length = 0;  // T
  Int window = 0;  // rows verified: j_max - j_0 + 1 >= 3T
};

struct FamilyScanReport {
  FamilySpec family;
  std::vector<ScanRow> rows;
  std::optional<Int> bound_override;
};

ScanRow scan_row(const FamilySpec& family, Int j,
                 std::optional<Int> bound_override = std::nullopt);

/// One row per j, computed on `jobs` worker threads; the result does not
/// depend on `jobs`.
FamilyScanReport scan(const FamilySpec& family, Int j_min, Int j_max,
                      unsigned jobs = 1,
                      std::optional<Int> bound_override = std::nullopt);

/// Least T, then least j_0, such that totals(j) == totals(j+T) for
/// j_0 <= j <= j_max - T and the verified window is at least 3T.
/// Throws InsufficientData when the report has fewer than 3(a+b+c) rows.
std::optional<Period> detect_period(const FamilyScanReport& report);

struct VerifyCase {
  std::string label;  // "i", "ii", "iii", "B"
  Int n = 0;
  Int t = 0;
  Int j = 0;          // family index
  Int leading = 0;    // first raw generator (the theorems' j)
  std::vector<Int> generators;
  std::size_t expected_mu = 0;  // 0 when only CI status is compared
  std::size_t mu = 0;
  bool expected_ci = false;
  bool ci = false;
  std::optional<bool> ideal_matches;  // case (i) with c = p(a+b) only
  bool agrees = true;
  std::string detail;
};

struct VerificationReport {
  std::string theorem;
  std::vector<VerifyCase> cases;
  std::size_t agreements = 0;
  std::vector<VerifyCase> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

/// CI <=> (a+b+c) | leading(j) over [j_min, j_max]. Needs c = p(a+b) or
/// a = p(b+c) (HypothesisNotMet otherwise) and leading(j_min) >= (a+b+c)^3
/// (OutOfRange otherwise).
VerificationReport verify_theorem_b(const FamilySpec& family, Int j_min, Int j_max,
                                    unsigned jobs = 1);

/// mu at the leading generators (a+b+c)n (expect 3) and, with include_t,
/// (a+b+c)n + (a+b)t or (a+b+c)n + (b+c)t for 1 <= t <= p (expect 4).
/// For c = p(a+b) case (i) also compares the computed generators with
/// {x1^(n+1) - x4^n, x3^(p+1) - x1^p x4, x2^(a'+b') - x1^b' x3^a'}.
VerificationReport verify_theorem_a(const FamilySpec& family, Int n_max,
                                    bool include_t);

/// Binomials {x1^(n+1) - x4^n, x3^(p+1) - x1^p x4, x2^(a'+b') - x1^b' x3^a'}
/// with a' = a/gcd(a,b), b' = b/gcd(a,b).
std::vector<Binomial> theorem_a_ideal(Int a, Int b, Int p, Int n);

/// Compares ci_check_3gen(q,a,b) with mu(<q,q+a,q+a+b>) == 2 for coprime
/// a, b, a+b <= ab_max, q <= q_max, q above the test's threshold.
VerificationReport verify_hs3(Int q_max, Int ab_max);

}  // namespace shiftbetti
