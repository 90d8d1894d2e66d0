#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "shiftbetti/error.hpp"
#include "shiftbetti/semigroup.hpp"

using namespace shiftbetti;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected shiftbetti::Error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("normalize sorts and divides out the content") {
  auto s = Semigroup::normalize({30, 32, 35, 40});
  CHECK(s.generators() == std::vector<Int>{30, 32, 35, 40});
  CHECK(s.content() == 1);
  CHECK(s.reduced());

  auto t = Semigroup::normalize({4, 6, 10});
  CHECK(t.generators() == std::vector<Int>{2, 3, 5});
  CHECK(t.content() == 2);

  auto u = Semigroup::normalize({35, 30, 40, 32});
  CHECK(u.generators() == std::vector<Int>{30, 32, 35, 40});
  CHECK(u.raw_generators() == std::vector<Int>{30, 32, 35, 40});
}

TEST_CASE("normalize removes exact duplicates and records them") {
  auto s = Semigroup::normalize({6, 4, 6, 10});
  CHECK(s.generators() == std::vector<Int>{2, 3, 5});
  CHECK(s.duplicates_removed() == 1);
}

TEST_CASE("normalize rejects bad input") {
  CHECK(kind_of([] { Semigroup::normalize(std::vector<Int>{}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { Semigroup::normalize({3, 0, 5}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { Semigroup::normalize({3, -5}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { Semigroup::normalize({7}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { Semigroup::normalize({2, 3, 5, 7, 11, 13, 17, 19, 23}); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("contains") {
  CHECK_FALSE(Semigroup::normalize({2, 3}).contains(1));
  auto s = Semigroup::normalize({30, 32, 35, 40});
  CHECK(s.contains(70));
  CHECK_FALSE(s.contains(38));
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(-1));
}

TEST_CASE("contains agrees with exhaustive combination search") {
  for (const auto& g : oracle::coprime_tuples(25, 4, 3, 40, 11)) {
    const auto s = Semigroup::normalize(g);
    const Int limit = 600;
    const auto in = oracle::members(g, limit);
    for (Int m = 0; m <= limit; ++m) {
      REQUIRE_MESSAGE(s.contains(m) == in[static_cast<std::size_t>(m)], s.to_string(), " m=", m);
    }
  }
}

TEST_CASE("contains is invariant under permutation and joint scaling") {
  std::mt19937 rng(5);
  for (auto g : oracle::coprime_tuples(20, 4, 2, 30, 12)) {
    const auto base = Semigroup::normalize(g);
    std::shuffle(g.begin(), g.end(), rng);
    const auto shuffled = Semigroup::normalize(g);
    std::vector<Int> scaled(g);
    for (Int& x : scaled) x *= 7;
    const auto rescaled = Semigroup::normalize(scaled);
    CHECK(rescaled.content() == 7);
    for (Int m = 0; m < 400; ++m) {
      REQUIRE(base.contains(m) == shuffled.contains(m));
      REQUIRE(base.contains(m) == rescaled.contains(m));
    }
  }
}

TEST_CASE("unreduced semigroups keep the gcd") {
  auto s = Semigroup::unreduced(std::vector<Int>{30, 35, 40});
  CHECK_FALSE(s.reduced());
  CHECK(s.content() == 5);
  CHECK(s.contains(160));
  CHECK_FALSE(s.contains(161));
  CHECK_FALSE(s.contains(45));
  CHECK(kind_of([&] { s.frobenius(); }) == ErrorKind::MustNormalize);
  CHECK(s.factorizations(160).size() == 3);
}

TEST_CASE("frobenius") {
  CHECK(Semigroup::normalize({2, 3}).frobenius() == 1);
  CHECK(Semigroup::normalize({3, 5}).frobenius() == 7);
  // brute-force oracle value for <30,32,35,40>
  CHECK(oracle::frobenius({30, 32, 35, 40}) == 213);
  CHECK(Semigroup::normalize({30, 32, 35, 40}).frobenius() == 213);
  CHECK(Semigroup::normalize({1, 5}).frobenius() == -1);
}

TEST_CASE("frobenius matches brute force and everything above it is a member") {
  for (const auto& g : oracle::coprime_tuples(30, 3, 2, 25, 13)) {
    const auto s = Semigroup::normalize(g);
    const Int f = s.frobenius();
    REQUIRE(f == oracle::frobenius(g));
    if (f >= 0) CHECK_FALSE(s.contains(f));
    for (Int k = 1; k <= 3 * s.generators().back(); ++k) REQUIRE(s.contains(f + k));
  }
}

TEST_CASE("apery") {
  auto s23 = Semigroup::normalize({2, 3});
  CHECK(s23.apery(2) == std::vector<Int>{0, 3});
  CHECK(s23.apery(3) == std::vector<Int>{0, 2, 4});
  CHECK(Semigroup::normalize({3, 5}).apery(3) == std::vector<Int>{0, 5, 10});
  auto s = Semigroup::normalize({30, 32, 35, 40});
  CHECK(kind_of([&] { s.apery(38); }) == ErrorKind::InvalidPivot);
  CHECK(kind_of([&] { s.apery(0); }) == ErrorKind::InvalidPivot);
}

TEST_CASE("apery sets have one element per residue, each minimal") {
  for (const auto& g : oracle::coprime_tuples(20, 4, 3, 35, 14)) {
    const auto s = Semigroup::normalize(g);
    for (Int x : {s.generators().front(), s.generators().back(),
                  s.generators()[0] + s.generators()[1]}) {
      const auto ap = s.apery(x);
      REQUIRE(static_cast<Int>(ap.size()) == x);
      CHECK(ap.front() == 0);
      std::vector<bool> seen(static_cast<std::size_t>(x), false);
      for (Int w : ap) {
        CHECK(s.contains(w));
        CHECK_FALSE(s.contains(w - x));
        seen[static_cast<std::size_t>(w % x)] = true;
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
  }
}

TEST_CASE("factorizations") {
  auto s = Semigroup::normalize({30, 32, 35, 40});
  auto f70 = s.factorizations(70);
  REQUIRE(f70.size() == 2);
  CHECK(f70[0].exponents == std::vector<Int>{0, 0, 2, 0});
  CHECK(f70[1].exponents == std::vector<Int>{1, 0, 0, 1});
  auto f0 = s.factorizations(0);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0].exponents == std::vector<Int>{0, 0, 0, 0});
  auto f60 = s.factorizations(60);
  REQUIRE(f60.size() == 1);
  CHECK(f60[0].exponents == std::vector<Int>{2, 0, 0, 0});
  CHECK(s.factorizations(38).empty());
}

TEST_CASE("factorizations agree with brute force, in lexicographic order") {
  for (const auto& g : oracle::coprime_tuples(12, 4, 3, 20, 15)) {
    const auto s = Semigroup::normalize(g);
    for (Int m = 0; m <= 150; ++m) {
      const auto got = s.factorizations(m);
      const auto want = oracle::factorizations(s.generators(), m);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        REQUIRE(got[i].exponents == want[i]);
        REQUIRE(got[i].degree == m);
        REQUIRE(s.degree_of(got[i].exponents) == m);
      }
      REQUIRE(s.contains(m) == !got.empty());
    }
  }
}

TEST_CASE("factorizations of five and eight generators") {
  for (std::size_t n : {5u, 8u}) {
    for (const auto& g : oracle::coprime_tuples(3, n, 4, 18, 16)) {
      const auto s = Semigroup::normalize(g);
      for (Int m : {0, 37, 64, 90}) {
        const auto got = s.factorizations(m);
        const auto want = oracle::factorizations(s.generators(), m);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].exponents == want[i]);
      }
    }
  }
}
