#include <doctest.h>

#include "flatcyc/poly.hpp"
#include "flatcyc/tori.hpp"
#include "oracles.hpp"

using namespace flatcyc;

namespace {

ResidueRing Zmod(long p, int j) { return ResidueRing::integers_mod(PrimePower::make(p, j)); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

void check_eigen(const IntMatrix& A, const ResidueRing& R, const EigenData& e) {
  const RingMatrix Ar = lift_matrix(R, A);
  CHECK(multiply(R, e.P, e.P_inv) == identity(R, A.rows()));
  const RingMatrix D = multiply(R, e.P_inv, multiply(R, Ar, e.P));
  CHECK(is_diagonal(R, D));
  for (std::size_t i = 0; i < A.rows(); ++i) {
    CHECK(D(i, i) == e.eigenvalues[i]);
    CHECK(R.is_zero(evaluate(R, char_poly(A), e.eigenvalues[i])));
  }
}

}  // namespace

TEST_CASE("diagonalizing a split quadratic companion over Z/9") {
  const IntMatrix A = companion_matrix(IntPoly{-1, -3, 1});
  const auto R = Zmod(3, 2);
  const auto e = diagonalize_mod(A, R);
  check_eigen(A, R, e);
  // product of the eigenvalues is det A = -1
  CHECK(R.mul(e.eigenvalues[0], e.eigenvalues[1]) == R.from_int(-1));
}

TEST_CASE("diagonalization failures") {
  CHECK(code_of([] { diagonalize_mod(companion_matrix(IntPoly{1, -5, 1}), Zmod(3, 2)); }) ==
        Errc::RepeatedRootModP);
  CHECK(code_of([] { diagonalize_mod(identity(IntegerRing{}, 2), Zmod(3, 2)); }) == Errc::RepeatedRootModP);
  CHECK(code_of([] { diagonalize_mod(companion_matrix(IntPoly{1, 0, 1}), Zmod(3, 2)); }) == Errc::NotSplit);
  CHECK(code_of([] { so_diagonalize(build_B(), build_Qn(2), Zmod(3, 1)); }) == Errc::EigenvaluePlusMinusOne);
  CHECK(code_of([] { so_diagonalize(build_B(), build_Qn(2), Zmod(2, 1)); }) == Errc::EvenPrime);
  const QuadForm D = QuadForm::make(make_int_matrix({{1, 0}, {0, 1}}));
  CHECK(code_of([&] { so_diagonalize(identity(IntegerRing{}, 2), D, Zmod(7, 1)); }) == Errc::NotHyperbolic);
  CHECK(code_of([] { so_diagonalize(companion_matrix(IntPoly{-1, -3, 1}), build_Qn(1), Zmod(7, 1)); }) ==
        Errc::NotAnIsometry);
}

TEST_CASE("diagonalizing over a Galois ring") {
  const IntMatrix A = companion_matrix(IntPoly{1, -4, 1});
  const auto R = QuadraticPrime::make(2, 5).local_ring(2);
  check_eigen(A, R, diagonalize_mod(A, R));
}

TEST_CASE("isometric eigenbases of B") {
  for (long p : {31L, 41L, 71L, 79L, 89L})
    for (int j = 1; j <= 2; ++j) {
      const auto R = Zmod(p, j);
      const auto iso = so_diagonalize(build_B(), build_Qn(2), R);
      check_eigen(build_B(), R, iso.eigen);
      CHECK(preserves_form(R, iso.eigen.P, build_Qn(2)));
      CHECK(determinant(R, iso.eigen.P) == R.one());
      const auto& ev = iso.eigen.eigenvalues;
      CHECK(R.mul(ev[0], ev[2]) == R.one());
      CHECK(R.mul(ev[1], ev[3]) == R.one());
    }
  for (long p : {31L, 71L, 79L}) {
    const auto R = Zmod(p, 1);
    const auto iso = so_diagonalize(build_A_block(2), build_Qn(4), R);
    CHECK(preserves_form(R, iso.eigen.P, build_Qn(4)));
    check_eigen(build_A_block(2), R, iso.eigen);
  }
}

TEST_CASE("GL and SL centralizers against exhaustive counts") {
  const IntMatrix A = companion_matrix(IntPoly{-1, -3, 1});
  const auto R9 = Zmod(3, 2);
  CHECK(centralizer_order_gl(A, R9) == 36);
  CHECK(centralizer_bruteforce(A, R9, GroupKind::GL) == 36);
  CHECK(centralizer_order_sl(A, R9) == 6);
  CHECK(centralizer_bruteforce(A, R9, GroupKind::SL) == 6);
  const IntMatrix C3 = companion_matrix(IntPoly::from_roots({1, 2, 3}));
  const auto R5 = Zmod(5, 1);
  CHECK(centralizer_order_gl(C3, R5) == 64);
  CHECK(centralizer_bruteforce(C3, R5, GroupKind::GL, std::nullopt, {1e9, 1, CentralizerMethod::FullSearch}) == 64);
  CHECK(centralizer_bruteforce(C3, R5, GroupKind::GL, std::nullopt, {1e9, 1, CentralizerMethod::Commutant}) == 64);
  for (long p : {5L, 7L, 11L}) {
    const IntMatrix M = companion_matrix(IntPoly::from_roots({1, 3}));
    const auto R = Zmod(p, 1);
    CHECK(centralizer_bruteforce(M, R, GroupKind::SL) * unit_count(R) ==
          centralizer_bruteforce(M, R, GroupKind::GL));
    CHECK(centralizer_order_sl(M, R) == centralizer_bruteforce(M, R, GroupKind::SL));
  }
}

TEST_CASE("SO centralizers") {
  // diag(2, 1/2) in SO(Q_1): its centralizer is the whole split torus
  for (long p : {7L, 11L}) {
    const auto R = Zmod(p, 1);
    const BigInt half = (p + 1) / 2;
    IntMatrix T(2, 2, BigInt(0));
    T(0, 0) = 2;
    T(1, 1) = half;
    CHECK(centralizer_order_so(T, build_Qn(1), R) == p - 1);
    CHECK(centralizer_bruteforce(T, R, GroupKind::SO, build_Qn(1)) == p - 1);
    CHECK(centralizer_order_gl(T, R) == (p - 1) * (p - 1));
  }
  CHECK(centralizer_order_so(build_B(), build_Qn(2), Zmod(31, 1)) == 900);
  CHECK(centralizer_order_so(build_B(), build_Qn(2), Zmod(31, 2)) == 864900);
}
