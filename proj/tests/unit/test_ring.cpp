#include <doctest.h>

#include <random>

#include "flatcyc/bigint.hpp"
#include "flatcyc/error.hpp"
#include "flatcyc/ring.hpp"
#include "oracles.hpp"

using namespace flatcyc;

TEST_CASE("legendre agrees with Euler's criterion") {
  for (auto p : oracle::odd_primes_up_to(200))
    for (long a = -10; a <= 30; ++a) CHECK(legendre(a, p) == oracle::euler_symbol(oracle::md(a, p), p));
}

TEST_CASE("primality and sieve") {
  const auto ps = primes_up_to(1000);
  std::size_t count = 0;
  for (long n = 0; n <= 1000; ++n) {
    CHECK(is_prime(BigInt(n)) == oracle::is_prime(n));
    if (oracle::is_prime(n)) ++count;
  }
  CHECK(ps.size() == count);
  CHECK(is_prime(BigInt("18446744073709551557")));
  CHECK_FALSE(is_prime(BigInt("18446744073709551559")));
}

TEST_CASE("valuation, exact_log, factorial") {
  CHECK(valuation(BigInt(7 * 7 * 7 * 2), 7) == 3);
  CHECK(exact_log(pow(BigInt(31), 6), 31) == 6);
  CHECK(exact_log(BigInt(30), 31) == -1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("PrimePower rejects composites and bad exponents") {
  CHECK_THROWS_AS(PrimePower::make(9, 1), Error);
  CHECK_THROWS_AS(PrimePower::make(3, 0), Error);
  CHECK(PrimePower::make(5, 3).value() == 125);
}

TEST_CASE("Z/p^j arithmetic matches machine integers") {
  std::mt19937_64 rng(7);
  for (oracle::i64 p : {3, 5, 7, 11}) {
    for (int j = 1; j <= 3; ++j) {
      const auto R = ResidueRing::integers_mod(PrimePower::make(p, j));
      const oracle::i64 N = to_long(R.modulus());
      std::uniform_int_distribution<oracle::i64> dist(-3 * N, 3 * N);
      for (int t = 0; t < 50; ++t) {
        const auto a = dist(rng), b = dist(rng);
        const auto x = R.from_int(a), y = R.from_int(b);
        CHECK(R.scalar(R.add(x, y)) == oracle::md(a + b, N));
        CHECK(R.scalar(R.mul(x, y)) == oracle::md(a * b, N));
        CHECK(R.scalar(R.sub(x, y)) == oracle::md(a - b, N));
        if (oracle::md(a, p) != 0) {
          CHECK(R.is_unit(x));
          CHECK(R.scalar(R.mul(x, R.invert(x))) == 1);
        } else {
          CHECK_FALSE(R.is_unit(x));
        }
      }
    }
  }
}

TEST_CASE("inverse of a non-unit throws NotAUnit") {
  const auto R = ResidueRing::integers_mod(PrimePower::make(3, 2));
  try {
    R.invert(R.from_int(6));
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAUnit);
  }
}

TEST_CASE("unit counts") {
  CHECK(unit_count(ResidueRing::integers_mod(PrimePower::make(3, 2))) == 6);
  CHECK(unit_count(ResidueRing::integers_mod(PrimePower::make(31, 2))) == 930);
  const auto GR = QuadraticPrime::make(2, 3).local_ring(2);
  CHECK(GR.residue_degree() == 2);
  CHECK(GR.cardinality() == 81);
  CHECK(unit_count(GR) == 72);
}

TEST_CASE("index bijection is a bijection") {
  const auto GR = QuadraticPrime::make(2, 5).local_ring(1);
  for (long i = 0; i < 25; ++i) CHECK(GR.index_of(GR.element_at(i)) == i);
}

TEST_CASE("Galois ring inverses") {
  const auto GR = QuadraticPrime::make(2, 3).local_ring(3);
  const BigInt size = GR.cardinality();
  long units = 0;
  for (BigInt i = 0; i < size; ++i) {
    const auto a = GR.element_at(i);
    if (!GR.is_unit(a)) continue;
    ++units;
    CHECK(GR.mul(a, GR.invert(a)) == GR.one());
  }
  CHECK(units == to_long(unit_count(GR)));
}

TEST_CASE("splitting in Q(sqrt 2)") {
  for (auto p : oracle::odd_primes_up_to(100)) {
    const auto t = split_type(2, p);
    const bool split = p % 8 == 1 || p % 8 == 7;
    CHECK(t == (split ? SplitType::Split : SplitType::Inert));
  }
  CHECK(split_type(3, 3) == SplitType::Ramified);
  CHECK_THROWS_AS(QuadraticPrime::make(3, 3), Error);
}

TEST_CASE("split prime embeds sqrt m as a square root of m") {
  const auto P = QuadraticPrime::make(2, 7);
  const auto R = P.local_ring(3);
  const auto r = P.embed(R, {0, 1});
  CHECK(R.mul(r, r) == R.from_int(2));
}
