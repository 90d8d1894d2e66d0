#include "shiftbetti/family.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "shiftbetti/error.hpp"

namespace shiftbetti {

FamilySpec::FamilySpec(Int a, Int b, Int c, Int offset)
    : a_(a), b_(b), c_(c), offset_(offset) {
  if (a < 1 || b < 1 || c < 1) {
    throw Error(ErrorKind::InvalidInput, "a, b, c must be positive");
  }
  if (offset != 0 && offset != 1) {
    throw Error(ErrorKind::InvalidInput, "offset must be 0 or 1");
  }
  if (c % (a + b) == 0) p_for_c_ = c / (a + b);
  if (a % (b + c) == 0) p_for_a_ = a / (b + c);
}

std::vector<Int> FamilySpec::raw_tuple(Int j) const {
  const Int first = leading(j);
  return {first, first + a_, first + a_ + b_, first + a_ + b_ + c_};
}

Semigroup shift_sequence(const FamilySpec& family, Int j) {
  if (j < 1) throw Error(ErrorKind::InvalidInput, "j must be at least 1");
  return Semigroup::normalize(family.raw_tuple(j));
}

namespace {

struct Invariants {
  std::size_t mu = 0;
  GradedBettiTable table;
};

Invariants invariants_of(const Semigroup& s, std::optional<Int> bound) {
  Invariants out;
  out.table = graded_betti(s, bound);
  out.mu = minimal_generators(s, bound).mu;
  if (static_cast<Int>(out.mu) != out.table.totals.at(1)) {
    std::ostringstream os;
    os << "mu from factorization graphs (" << out.mu << ") differs from b_1 ("
       << out.table.totals[1] << ") for " << s.to_string();
    throw std::logic_error(os.str());
  }
  return out;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any task is rethrown on the caller's thread.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

bool is_complete_intersection(const Semigroup& s) {
  return invariants_of(s, std::nullopt).mu + 1 == s.rank();
}

bool ci_check_3gen(Int q, Int a, Int b) {
  if (q < 1 || a < 1 || b < 1) {
    throw Error(ErrorKind::InvalidInput, "q, a, b must be positive");
  }
  if (q < std::max(a * b + b * b, a * b + a * a)) {
    throw Error(ErrorKind::OutOfRange, "q is below max(ab + b^2, ab + a^2)");
  }
  const Int x = std::gcd(q, a + b);
  if (x == 1) return false;
  const Int lhs = x * (q + a);
  for (Int beta = 0; beta * (q + a + b) <= lhs; ++beta) {
    if ((lhs - beta * (q + a + b)) % q == 0) return true;
  }
  return false;
}

ScanRow scan_row(const FamilySpec& family, Int j, std::optional<Int> bound_override) {
  const Semigroup s = shift_sequence(family, j);
  const Invariants inv = invariants_of(s, bound_override);
  ScanRow row;
  row.j = j;
  row.raw = family.raw_tuple(j);
  row.generators = s.generators();
  row.content = s.content();
  row.totals = inv.table.totals;
  row.mu = inv.mu;
  row.ci = inv.mu + 1 == s.rank();
  return row;
}

FamilyScanReport scan(const FamilySpec& family, Int j_min, Int j_max, unsigned jobs,
                      std::optional<Int> bound_override) {
  if (j_min < 1 || j_min > j_max) {
    throw Error(ErrorKind::InvalidInput, "scan needs 1 <= j_min <= j_max");
  }
  FamilyScanReport report{family, {}, bound_override};
  const auto count = static_cast<std::size_t>(j_max - j_min + 1);
  report.rows.resize(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    report.rows[i] = scan_row(family, j_min + static_cast<Int>(i), bound_override);
  });
  return report;
}

std::optional<Period> detect_period(const FamilyScanReport& report) {
  const auto& rows = report.rows;
  const std::size_t len = rows.size();
  if (len < static_cast<std::size_t>(3 * report.family.period())) {
    throw Error(ErrorKind::InsufficientData,
                "period detection needs at least 3(a+b+c) consecutive rows");
  }
  for (std::size_t t = 1; 3 * t <= len; ++t) {
    std::size_t start = len - t;
    while (start > 0 && rows[start - 1].totals == rows[start - 1 + t].totals) --start;
    const std::size_t window = len - start;
    if (window >= 3 * t) {
      return Period{rows[start].j, static_cast<Int>(t), static_cast<Int>(window)};
    }
  }
  return std::nullopt;
}

namespace {

void require_structure(const FamilySpec& f) {
  if (!f.p_for_c() && !f.p_for_a()) {
    std::ostringstream os;
    os << "(a,b,c) = (" << f.a() << "," << f.b() << "," << f.c()
       << ") satisfies neither c = p(a+b) nor a = p(b+c); the theorem does not apply";
    throw Error(ErrorKind::HypothesisNotMet, os.str());
  }
}

void tally(VerificationReport& report, VerifyCase vc) {
  if (vc.agrees) {
    ++report.agreements;
  } else {
    report.counterexamples.push_back(vc);
  }
  report.cases.push_back(std::move(vc));
}

}  // namespace

VerificationReport verify_theorem_b(const FamilySpec& family, Int j_min, Int j_max,
                                    unsigned jobs) {
  require_structure(family);
  const Int period = family.period();
  const Int threshold = period * period * period;
  if (family.leading(j_min) < threshold) {
    std::ostringstream os;
    os << "leading generator " << family.leading(j_min) << " is below (a+b+c)^3 = "
       << threshold;
    throw Error(ErrorKind::OutOfRange, os.str());
  }
  const FamilyScanReport rows = scan(family, j_min, j_max, jobs);
  VerificationReport report;
  report.theorem = "theorem-b";
  for (const ScanRow& row : rows.rows) {
    VerifyCase vc;
    vc.label = "B";
    vc.j = row.j;
    vc.leading = family.leading(row.j);
    vc.generators = row.generators;
    vc.mu = row.mu;
    vc.ci = row.ci;
    vc.expected_ci = vc.leading % period == 0;
    vc.agrees = vc.ci == vc.expected_ci;
    if (!vc.agrees) {
      std::ostringstream os;
      os << "j=" << vc.j << " leading=" << vc.leading << " mu=" << vc.mu
         << (vc.ci ? " is" : " is not") << " a complete intersection but "
         << period << (vc.expected_ci ? " divides " : " does not divide ")
         << vc.leading;
      vc.detail = os.str();
    }
    tally(report, std::move(vc));
  }
  return report;
}

std::vector<Binomial> theorem_a_ideal(Int a, Int b, Int p, Int n) {
  const Int d = std::gcd(a, b);
  const Int ar = a / d, br = b / d;
  return {
      {{n + 1, 0, 0, 0}, {0, 0, 0, n}},
      {{0, 0, p + 1, 0}, {p, 0, 0, 1}},
      {{0, ar + br, 0, 0}, {br, 0, ar, 0}},
  };
}

VerificationReport verify_theorem_a(const FamilySpec& family, Int n_max,
                                    bool include_t) {
  require_structure(family);
  if (n_max < 1) throw Error(ErrorKind::InvalidInput, "n_max must be at least 1");
  const Int period = family.period();
  const bool c_case = family.p_for_c().has_value();
  const Int p = c_case ? *family.p_for_c() : *family.p_for_a();
  const Int t_step = c_case ? family.a() + family.b() : family.b() + family.c();

  VerificationReport report;
  report.theorem = "theorem-a";
  auto check = [&](std::string label, Int n, Int t, Int leading, std::size_t expected) {
    VerifyCase vc;
    vc.label = std::move(label);
    vc.n = n;
    vc.t = t;
    vc.leading = leading;
    vc.j = leading - family.offset();
    const Semigroup s = shift_sequence(family, vc.j);
    const MinimalGenerators gens = minimal_generators(s);
    const GradedBettiTable table = graded_betti(s);
    if (static_cast<Int>(gens.mu) != table.totals.at(1)) {
      throw std::logic_error("verify_theorem_a: mu differs from b_1");
    }
    vc.generators = s.generators();
    vc.mu = gens.mu;
    vc.ci = gens.mu == 3;
    vc.expected_mu = expected;
    vc.expected_ci = expected == 3;
    vc.agrees = vc.mu == expected;
    if (vc.label == "i" && c_case) {
      const auto ideal = theorem_a_ideal(family.a(), family.b(), p, n);
      vc.ideal_matches = ideal_equivalent(s, gens.binomials, ideal);
      vc.agrees = vc.agrees && *vc.ideal_matches;
    }
    if (!vc.agrees) {
      std::ostringstream os;
      os << "case (" << vc.label << ") n=" << n << " t=" << t << " leading=" << leading
         << ": mu=" << vc.mu << ", expected " << expected;
      if (vc.ideal_matches && !*vc.ideal_matches) os << "; generators differ from I";
      vc.detail = os.str();
    }
    tally(report, std::move(vc));
  };

  for (Int n = 1; n <= n_max; ++n) {
    check("i", n, 0, period * n, 3);
    if (!include_t) continue;
    for (Int t = 1; t <= p; ++t) {
      check(c_case ? "ii" : "iii", n, t, period * n + t_step * t, 4);
    }
  }
  return report;
}

VerificationReport verify_hs3(Int q_max, Int ab_max) {
  VerificationReport report;
  report.theorem = "hs3";
  for (Int sum = 2; sum <= ab_max; ++sum) {
    for (Int a = 1; a < sum; ++a) {
      const Int b = sum - a;
      if (std::gcd(a, b) != 1) continue;
      for (Int q = std::max(a * b + b * b, a * b + a * a); q <= q_max; ++q) {
        const bool predicted = ci_check_3gen(q, a, b);
        const Semigroup s = Semigroup::normalize({q, q + a, q + a + b});
        const std::size_t mu = minimal_generators(s).mu;
        VerifyCase vc;
        vc.label = "hs3";
        vc.leading = q;
        vc.generators = {q, q + a, q + a + b};
        vc.mu = mu;
        vc.ci = mu == 2;
        vc.expected_ci = predicted;
        vc.agrees = vc.ci == predicted;
        if (!vc.agrees) {
          std::ostringstream os;
          os << "(q,a,b)=(" << q << "," << a << "," << b << "): arithmetic test says "
             << (predicted ? "CI" : "not CI") << ", mu=" << mu;
          vc.detail = os.str();
        }
        tally(report, std::move(vc));
      }
    }
  }
  return report;
}

}  // namespace shiftbetti
