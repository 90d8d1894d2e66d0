#include "shiftbetti/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "shiftbetti/error.hpp"

namespace shiftbetti {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::MustNormalize: return "must-normalize";
    case ErrorKind::InvalidPivot: return "invalid-pivot";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::InternalBound: return "internal-bound";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::HypothesisNotMet: return "hypothesis-not-met";
    case ErrorKind::InsufficientData: return "insufficient-data";
  }
  return "unknown";
}

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

MembershipTable::MembershipTable(std::span<const Int> coprime_generators) {
  std::vector<Int> gens(coprime_generators.begin(), coprime_generators.end());
  std::sort(gens.begin(), gens.end());
  const Int smallest = gens.front();

  std::size_t target = static_cast<std::size_t>(std::max<Int>(2 * gens.back(), 16));
  bits_.assign(target, 0);
  bits_[0] = 1;

  Int run = 1;
  Int last_gap = -1;
  std::size_t m = 1;
  for (;;) {
    if (m == bits_.size()) {
      if (static_cast<Int>(bits_.size()) >= kMaxTableEntries) {
        throw Error(ErrorKind::InternalBound,
                    "membership table exceeds the supported size");
      }
      bits_.resize(std::min<std::size_t>(2 * bits_.size(),
                                         static_cast<std::size_t>(kMaxTableEntries)),
                   0);
    }
    bool member = false;
    for (Int g : gens) {
      if (static_cast<Int>(m) < g) break;
      if (bits_[m - static_cast<std::size_t>(g)]) {
        member = true;
        break;
      }
    }
    bits_[m] = member ? 1 : 0;
    if (member) {
      ++run;
      if (run >= smallest) break;
    } else {
      run = 0;
      last_gap = static_cast<Int>(m);
    }
    ++m;
  }
  // When 1 is a generator the loop above still stops after one step.
  bits_.resize(m + 1);
  frobenius_ = last_gap;
}

Semigroup::Semigroup(std::vector<Int> raw, std::vector<Int> generators,
                     Int content, Int scale, std::size_t duplicates_removed,
                     bool with_suffixes)
    : raw_(std::move(raw)),
      generators_(std::move(generators)),
      content_(content),
      scale_(scale),
      duplicates_removed_(duplicates_removed) {
  std::vector<Int> scaled(generators_);
  for (Int& g : scaled) g /= scale_;
  table_ = std::make_shared<const MembershipTable>(scaled);

  const std::size_t n = generators_.size();
  suffixes_.resize(n);
  if (!with_suffixes) return;
  // Suffixes of length >= 3 are used as membership oracles while
  // enumerating; the last two coordinates are solved directly.
  for (std::size_t k = 1; k + 2 < n; ++k) {
    std::vector<Int> tail(generators_.begin() + static_cast<std::ptrdiff_t>(k),
                          generators_.end());
    const Int d = gcd_of(tail);
    suffixes_[k] = std::shared_ptr<const Semigroup>(
        new Semigroup(tail, tail, d, d, 0, false));
  }
}

namespace {

std::vector<Int> validated_sorted(std::span<const Int> raw) {
  if (raw.size() < 2) {
    throw Error(ErrorKind::InvalidInput, "at least two generators are required");
  }
  for (Int v : raw) {
    if (v <= 0) {
      throw Error(ErrorKind::InvalidInput, "generators must be positive");
    }
  }
  std::vector<Int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

Semigroup Semigroup::normalize(std::span<const Int> raw) {
  std::vector<Int> sorted = validated_sorted(raw);
  std::vector<Int> unique = sorted;
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  const std::size_t removed = sorted.size() - unique.size();
  if (unique.size() > kMaxGenerators) {
    throw Error(ErrorKind::InvalidInput, "at most 8 generators are supported");
  }
  const Int d = gcd_of(unique);
  for (Int& g : unique) g /= d;
  return Semigroup(std::move(sorted), std::move(unique), d, 1, removed);
}

Semigroup Semigroup::unreduced(std::span<const Int> raw) {
  if (raw.empty()) {
    throw Error(ErrorKind::InvalidInput, "at least one generator is required");
  }
  for (Int v : raw) {
    if (v <= 0) throw Error(ErrorKind::InvalidInput, "generators must be positive");
  }
  std::vector<Int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Int> unique = sorted;
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  const std::size_t removed = sorted.size() - unique.size();
  const Int d = gcd_of(unique);
  return Semigroup(std::move(sorted), std::move(unique), d, d, removed);
}

bool Semigroup::contains(Int m) const {
  if (m < 0) return false;
  if (m % scale_ != 0) return false;
  return table_->contains(m / scale_);
}

Int Semigroup::frobenius() const {
  if (!reduced()) {
    throw Error(ErrorKind::MustNormalize,
                "frobenius number needs coprime generators; normalize first");
  }
  return table_->frobenius();
}

std::vector<Int> Semigroup::apery(Int pivot) const {
  if (!reduced()) {
    throw Error(ErrorKind::MustNormalize, "apery set needs coprime generators");
  }
  if (pivot <= 0 || !contains(pivot)) {
    throw Error(ErrorKind::InvalidPivot, "apery pivot must be a positive member");
  }
  std::vector<Int> minima(static_cast<std::size_t>(pivot), -1);
  std::size_t found = 0;
  for (Int m = 0; found < minima.size(); ++m) {
    if (!contains(m)) continue;
    Int& slot = minima[static_cast<std::size_t>(m % pivot)];
    if (slot < 0) {
      slot = m;
      ++found;
    }
  }
  std::sort(minima.begin(), minima.end());
  return minima;
}

Int Semigroup::degree_of(std::span<const Int> exponents) const {
  if (exponents.size() != generators_.size()) {
    throw Error(ErrorKind::InvalidInput, "exponent vector length mismatch");
  }
  Int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    Int term = 0;
    if (__builtin_mul_overflow(exponents[i], generators_[i], &term) ||
        __builtin_add_overflow(total, term, &total)) {
      throw Error(ErrorKind::InternalBound, "degree overflows 64 bits");
    }
  }
  return total;
}

namespace {

// Solves a*x + b*y == r over nonnegative integers; calls emit(x, y) for x
// ascending.
template <typename Emit>
void solve_two(Int a, Int b, Int r, Emit&& emit) {
  const Int g = std::gcd(a, b);
  if (r % g != 0) return;
  const Int a1 = a / g, b1 = b / g, r1 = r / g;
  // x ≡ r1 * a1^{-1} (mod b1)
  Int x0 = 0;
  if (b1 > 1) {
    Int old_r = a1 % b1, cur_r = b1, old_s = 1, cur_s = 0;
    while (cur_r != 0) {
      const Int q = old_r / cur_r;
      std::tie(old_r, cur_r) = std::pair(cur_r, old_r - q * cur_r);
      std::tie(old_s, cur_s) = std::pair(cur_s, old_s - q * cur_s);
    }
    const Int inv = ((old_s % b1) + b1) % b1;
    x0 = static_cast<Int>((static_cast<__int128>(r1 % b1) * inv) % b1);
  }
  for (Int x = x0; x * a <= r; x += b1) {
    emit(x, (r - x * a) / b);
  }
}

}  // namespace

void Semigroup::enumerate(std::size_t level, Int remainder,
                          std::vector<Int>& current,
                          std::vector<Factorization>& out, Int degree) const {
  const std::size_t n = generators_.size();
  if (level + 1 == n) {
    if (remainder % generators_[level] == 0) {
      current[level] = remainder / generators_[level];
      out.push_back({current, degree});
      current[level] = 0;
    }
    return;
  }
  if (level + 2 == n) {
    solve_two(generators_[level], generators_[level + 1], remainder,
              [&](Int x, Int y) {
                current[level] = x;
                current[level + 1] = y;
                out.push_back({current, degree});
              });
    current[level] = 0;
    current[level + 1] = 0;
    return;
  }
  const Int a = generators_[level];
  const Semigroup* tail = suffixes_[level + 1].get();
  for (Int x = 0; x * a <= remainder; ++x) {
    const Int rest = remainder - x * a;
    if (tail != nullptr && !tail->contains(rest)) continue;
    current[level] = x;
    enumerate(level + 1, rest, current, out, degree);
  }
  current[level] = 0;
}

std::vector<Factorization> Semigroup::factorizations(Int m) const {
  std::vector<Factorization> out;
  if (!contains(m)) return out;
  std::vector<Int> current(generators_.size(), 0);
  enumerate(0, m, current, out, m);
  return out;
}

std::string Semigroup::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ",";
    os << generators_[i];
  }
  os << ">";
  return os.str();
}

}  // namespace shiftbetti
