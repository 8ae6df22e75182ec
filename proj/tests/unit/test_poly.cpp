#include <doctest.h>

#include <random>

#include "flatcyc/error.hpp"
#include "flatcyc/poly.hpp"
#include "oracles.hpp"

using namespace flatcyc;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

const std::vector<BigInt> kXi{3, 6, 9, 12, 15, 18};

IntPoly random_monic(std::mt19937_64& rng, int degree, long spread) {
  std::uniform_int_distribution<long> dist(-spread, spread);
  std::vector<BigInt> c;
  for (int i = 0; i < degree; ++i) c.push_back(dist(rng));
  c.push_back(1);
  return IntPoly(c);
}

std::vector<oracle::i64> small_coeffs(const IntPoly& f) {
  std::vector<oracle::i64> out;
  for (const auto& c : f.coefficients()) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("real root counts") {
  CHECK(real_root_count(IntPoly::from_roots({1, 2, 3})) == 3);
  CHECK(real_root_count(IntPoly{1, 0, 1}) == 0);
  CHECK(real_root_count(IntPoly::from_roots({1, 1, -2})) == 2);
  CHECK(real_root_count(IntPoly{1, -18, 43, -18, 1}) == 4);
  CHECK(real_root_count(xi_family(kXi)) == 7);
  CHECK(code_of([] { real_root_count(IntPoly{}); }) == Errc::ZeroPolynomial);
}

TEST_CASE("real root count of random products of linear factors") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> root(-20, 20);
  for (int t = 0; t < 100; ++t) {
    std::vector<BigInt> roots;
    std::set<long> distinct;
    for (int i = 0; i < 1 + t % 6; ++i) {
      const long r = root(rng);
      roots.push_back(r);
      distinct.insert(r);
    }
    // times x^2 + 1 so that some roots are complex
    const IntPoly f = IntPoly::from_roots(roots) * IntPoly{1, 0, 1};
    CHECK(real_root_count(f) == static_cast<int>(distinct.size()));
  }
}

TEST_CASE("Polya certificate") {
  CHECK(polya_certificate(xi_family(kXi), xi_family_witness(kXi)) == PolyaVerdict::Irreducible);
  CHECK(polya_certificate(IntPoly::from_roots({1, 2}), PolyaWitness{{5, 6}}) == PolyaVerdict::Inconclusive);
  CHECK(code_of([] { polya_certificate(xi_family(kXi), PolyaWitness{{0, 3}}); }) == Errc::WitnessCountMismatch);
  CHECK(code_of([] { polya_certificate(IntPoly{1, 0, 1}, PolyaWitness{{0, 0}}); }) == Errc::DuplicateWitness);
}

TEST_CASE("xi family") {
  const IntPoly xi = xi_family(kXi);
  IntPoly want = IntPoly::x();
  for (const auto& a : kXi) want = want * IntPoly(std::vector<BigInt>{-a, 1});
  want = want + IntPoly{1};
  CHECK(xi == want);
  for (const auto& a : kXi) CHECK(xi(a) == 1);
  CHECK(xi(BigInt(0)) == 1);
  CHECK(code_of([] { xi_family({1, 2, 3, 4, 5, 6}); }) == Errc::GapTooSmall);
  CHECK(code_of([] { xi_family({3, 6, 9}); }) == Errc::TooFewPoints);
  CHECK(code_of([] { xi_family({2, 6, 9, 12, 15, 18}); }) == Errc::GapTooSmall);
}

TEST_CASE("companion matrices") {
  CHECK(companion_matrix(IntPoly{1, 5, 1}) == make_int_matrix({{0, -1}, {1, -5}}));
  CHECK(companion_matrix(IntPoly{-1, 1}) == make_int_matrix({{1}}));
  CHECK(char_poly(companion_matrix(IntPoly{-2, 0, 0, 1})) == IntPoly({-2, 0, 0, 1}));
  CHECK(code_of([] { companion_matrix(IntPoly{1, 2}); }) == Errc::NotMonic);
  // det = (-1)^d f(0): degree 7 with xi(0) = 1 gives -1.
  const IntMatrix C = companion_matrix(xi_family(kXi));
  CHECK(C.rows() == 7);
  CHECK(determinant(IntegerRing{}, C) == -1);
  CHECK(char_poly(C) == xi_family(kXi));
}

TEST_CASE("char poly of small matrices") {
  CHECK(char_poly(identity(IntegerRing{}, 2)) == IntPoly({1, -2, 1}));
  CHECK(code_of([] { char_poly(IntMatrix(2, 3, BigInt(0))); }) == Errc::NotSquare);
}

TEST_CASE("char poly agrees with Faddeev-LeVerrier on random matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 7;
    IntMatrix A(n, n, BigInt(0));
    std::vector<std::vector<mpq_class>> Aq(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long v = dist(rng);
        A(i, j) = v;
        Aq[i][j] = v;
      }
    const auto ref = oracle::leverrier(Aq);
    const IntPoly f = char_poly(A);
    REQUIRE(f.degree() == static_cast<int>(n));
    for (std::size_t i = 0; i <= n; ++i) CHECK(mpq_class(f.coeff(static_cast<int>(i))) == ref[i]);
  }
}

TEST_CASE("char_poly(companion(f)) = f for random monic f of degree <= 8") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const IntPoly f = random_monic(rng, 1 + t % 8, 50);
    CHECK(char_poly(companion_matrix(f)) == f);
    const BigInt sign = f.degree() % 2 == 0 ? 1 : -1;
    CHECK(determinant(IntegerRing{}, companion_matrix(f)) == sign * f.coeff(0));
  }
}

TEST_CASE("roots mod p agree with exhaustive evaluation") {
  std::mt19937_64 rng(17);
  const std::vector<oracle::i64> primes{3, 5, 7, 11, 13, 31, 97, 101, 257};
  for (int t = 0; t < 400; ++t) {
    const oracle::i64 p = primes[t % primes.size()];
    // mix of split products and random polynomials
    IntPoly f = random_monic(rng, 1 + t % 6, 40);
    if (t % 3 == 0) f = IntPoly::from_roots({t % 7, (t * 3) % 11, -(t % 5)}) * f;
    const auto R = ResidueRing::integers_mod(PrimePower::make(p, 1));
    const auto got = roots_mod(f, R);
    const auto want = oracle::roots_by_scan(small_coeffs(f), p);
    REQUIRE(got.roots.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(R.scalar(got.roots[i]) == want[i]);
    CHECK(distinct_root_count(f, R) == static_cast<int>(want.size()));
    CHECK(got.splits_completely == (got.square_free && static_cast<int>(want.size()) == f.degree()));
  }
}

TEST_CASE("roots over F_{p^2}") {
  for (long p : {3L, 5L, 11L}) {
    const auto F = QuadraticPrime::make(2, p).local_ring(1);
    REQUIRE(F.residue_degree() == 2);
    for (const IntPoly& f : {IntPoly{1, -4, 1}, IntPoly{-3, 0, 1}, IntPoly{1, 1, 1}, IntPoly{2, 0, 0, 1}}) {
      std::vector<RingElement> scan;
      for (BigInt i = 0; i < F.cardinality(); ++i)
        if (F.is_zero(evaluate(F, f, F.element_at(i)))) scan.push_back(F.element_at(i));
      CHECK(roots_mod(f, F).roots == scan);
    }
  }
}

TEST_CASE("roots_mod needs a field and a unit leading coefficient") {
  CHECK(code_of([] { roots_mod(IntPoly{1, 1}, ResidueRing::integers_mod(PrimePower::make(3, 2))); }) ==
        Errc::InvalidArgument);
  CHECK(code_of([] { roots_mod(IntPoly{1, 3}, ResidueRing::integers_mod(PrimePower::make(3, 1))); }) ==
        Errc::LeadingCoeffVanishes);
}

TEST_CASE("Hensel lifting examples") {
  CHECK(hensel_lift_root(IntPoly{-2, 0, 1}, PrimePower::make(7, 2), 3) == 10);
  CHECK(code_of([] { hensel_lift_root(IntPoly{1, -2, 1}, PrimePower::make(3, 2), 1); }) == Errc::NotSimpleRoot);
  CHECK(code_of([] { hensel_lift_root(IntPoly{-2, 0, 1}, PrimePower::make(7, 2), 2); }) == Errc::InvalidArgument);
}

TEST_CASE("Hensel lifts over a Galois ring") {
  // x^2 - 4x + 1 has discriminant 12, a nonsquare mod 5: roots live in F_25
  const auto R = QuadraticPrime::make(2, 5).local_ring(4);
  const IntPoly f{1, -4, 1};
  REQUIRE(roots_mod(f, R.residue_field()).roots.size() == 2);
  for (const auto& r : roots_mod(f, R.residue_field()).roots) {
    const auto lifted = hensel_lift_root(f, R, r);
    CHECK(R.is_zero(evaluate(R, f, lifted)));
    CHECK(R.reduce(lifted, 1) == r);
  }
}

TEST_CASE("resultant and discriminant") {
  CHECK(resultant(IntPoly{-1, 1}, IntPoly{-2, 1}) == -1);
  CHECK(discriminant(IntPoly{-2, 0, 1}) == 8);
  CHECK(discriminant(IntPoly{1, -4, 1}) == 12);
  CHECK(discriminant(IntPoly{1, -18, 43, -18, 1}) == 18662400);
  CHECK(discriminant(IntPoly::from_roots({1, 1, 2})) == 0);
}
