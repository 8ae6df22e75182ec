#include <doctest.h>

#include <random>

#include "flatcyc/enumerate.hpp"
#include "flatcyc/groups.hpp"
#include "flatcyc/poly.hpp"
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

}  // namespace

TEST_CASE("quadratic forms") {
  CHECK(code_of([] { QuadForm::make(make_int_matrix({{1, 2}, {0, 1}})); }) == Errc::InvalidArgument);
  CHECK(code_of([] { QuadForm::make(make_int_matrix({{1, 1}, {1, 1}})); }) == Errc::DegenerateForm);
  CHECK(build_Qn(2).matrix() ==
        make_int_matrix({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(build_Qtilde(1).matrix() == make_int_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK(build_Qn(3).det() == -1);
}

TEST_CASE("the matrix B") {
  const IntMatrix B = build_B();
  CHECK(B == make_int_matrix({{1, 1, -2, 2}, {1, 2, -4, 2}, {-2, -4, 10, -5}, {2, 2, -5, 5}}));
  CHECK(B == transpose(B));
  CHECK(preserves_form(B, build_Qn(2)));
  CHECK(determinant(IntegerRing{}, B) == 1);
  CHECK(char_poly(B) == IntPoly({1, -18, 43, -18, 1}));
}

TEST_CASE("block matrices preserve the interleaved hyperbolic form") {
  for (int m = 1; m <= 3; ++m) {
    const IntMatrix A = build_A_block(m);
    CHECK(A.rows() == static_cast<std::size_t>(4 * m));
    CHECK(preserves_form(A, build_Qn(2 * m)));
    CHECK(determinant(IntegerRing{}, A) == 1);
  }
  const IntMatrix B = build_B();
  const IntMatrix B2 = multiply(IntegerRing{}, B, B);
  CHECK(char_poly(build_A_block(2)) == char_poly(B) * char_poly(B2));
  // without the permutation the block sum preserves Q_2 + Q_2, not Q_4
  CHECK_FALSE(preserves_form(block_diagonal({B, B2}), build_Qn(4)));
}

TEST_CASE("SL and GL orders match the product formula") {
  for (long p : {3L, 5L, 7L, 11L, 13L})
    for (int j = 1; j <= 3; ++j)
      for (int d = 2; d <= 4; ++d) {
        CHECK(sl_order(Zmod(p, j), d) == oracle::sl_order(p, j, d));
        CHECK(gl_order(Zmod(p, j), d) == oracle::gl_order(p, j, d));
      }
  CHECK(sl_order(Zmod(3, 1), 2) == 24);
  CHECK(sl_order(Zmod(3, 2), 2) == 648);
  CHECK(code_of([] { gl_order(Zmod(3, 1), 1); }) == Errc::InvalidArgument);
}

TEST_CASE("SL_2 order over a Galois ring") {
  // |SL_2(GR(9,2))| = 81^3 |SL_2(F_9)| / 9^3 with |SL_2(F_9)| = 720
  const auto R = QuadraticPrime::make(2, 3).local_ring(2);
  CHECK(sl_order(R, 2) == 524880);
  CHECK(sl_order(R, 2) == BigInt(720) * oracle::ipow(9, 3));
}

TEST_CASE("Lie kernel counts") {
  CHECK(so_lie_kernel_count(build_Qn(1), 3) == 3);
  CHECK(so_lie_kernel_count(build_Qn(2), 3) == 729);
  CHECK(so_lie_kernel_count(build_Qtilde(1), 5) == 125);
  for (long p : {3L, 5L, 7L, 11L})
    for (int n = 1; n <= 4; ++n) {
      const BigInt expected = oracle::ipow(p, n * (2 * n - 1));
      CHECK(so_lie_kernel_count(build_Qn(n), p) == expected);
      CHECK(so_lie_kernel_count_blocks(n, p) == expected);
    }
  CHECK(so_lie_kernel_printed(2, 3) == 87);
  CHECK(code_of([] { so_lie_kernel_count(build_Qn(1), 2); }) == Errc::EvenPrime);
}

TEST_CASE("Lie kernel count matches exhaustive search on small cases") {
  CHECK(so_lie_kernel_bruteforce(build_Qn(1), 5) == so_lie_kernel_count(build_Qn(1), 5));
  CHECK(so_lie_kernel_bruteforce(build_Qtilde(1), 3) == so_lie_kernel_count(build_Qtilde(1), 3));
  const QuadForm diag = QuadForm::make(make_int_matrix({{1, 0}, {0, 2}}));
  CHECK(so_lie_kernel_bruteforce(diag, 7) == so_lie_kernel_count(diag, 7));
}

TEST_CASE("classical orthogonal orders") {
  CHECK(*orthogonal_order_formula(build_Qn(1), 3) == 4);
  CHECK(*orthogonal_order_formula(build_Qn(1), 5) == 8);
  CHECK(*orthogonal_order_formula(build_Qn(2), 3) == 1152);
  for (long q : {3L, 5L, 7L})
    for (int n = 1; n <= 3; ++n) CHECK(*orthogonal_order_formula(build_Qn(n), q) == oracle::split_orthogonal_order(q, n));
  // |O_3(q)| = 2 q (q^2 - 1)
  CHECK(*orthogonal_order_formula(build_Qtilde(1), 5) == 2 * 5 * 24);
  CHECK_FALSE(orthogonal_order_formula(QuadForm::make(make_int_matrix({{1, 0}, {0, 1}})), 3).has_value());
}

TEST_CASE("orthogonal orders against direct 2x2 counts") {
  const oracle::i64 hyp[2][2] = {{0, 1}, {1, 0}};
  for (long p : {3L, 5L, 7L, 11L}) {
    const auto r = orthogonal_order_mod_p(build_Qn(1), p);
    CHECK(r.order == oracle::count_o2(hyp, p));
    CHECK(r.agree());
  }
  CHECK(orthogonal_order_tower(build_Qn(1), PrimePower::make(3, 2)) == oracle::count_o2(hyp, 9));
  CHECK(orthogonal_order_tower(build_Qn(1), PrimePower::make(3, 2)) == 12);
  CHECK(orthogonal_order_tower(build_Qn(1), PrimePower::make(3, 3)) == oracle::count_o2(hyp, 27));
  CHECK(orthogonal_order_tower(build_Qn(1), PrimePower::make(5, 2)) == oracle::count_o2(hyp, 25));
  const oracle::i64 anis[2][2] = {{1, 0}, {0, 2}};
  const QuadForm D = QuadForm::make(make_int_matrix({{1, 0}, {0, 2}}));
  for (long p : {3L, 5L, 7L}) {
    CHECK(orthogonal_order_mod_p(D, p).order == oracle::count_o2(anis, p));
    CHECK(orthogonal_order_tower(D, PrimePower::make(p, 2)) == oracle::count_o2(anis, p * p));
  }
}

TEST_CASE("O(Q_2; F_3) by enumeration agrees with the formula") {
  const auto r = orthogonal_order_mod_p(build_Qn(2), 3);
  REQUIRE(r.enumerated.has_value());
  CHECK(*r.enumerated == 1152);
  CHECK(r.agree());
}

TEST_CASE("SO and Omega orders") {
  CHECK(special_orthogonal_order(build_Qn(1), PrimePower::make(7, 1)) == 6);
  CHECK(special_orthogonal_order(build_Qn(2), PrimePower::make(3, 1)) == 576);
  CHECK(omega_order(build_Qn(1), PrimePower::make(3, 1)) == 1);
  CHECK(omega_order(build_Qn(2), PrimePower::make(3, 1)) == 288);
  CHECK(omega_order(build_Qn(2), PrimePower::make(3, 2)) == 209952);
  CHECK(spinor_kernel_index(build_Qn(2), 31) == 2);
}

TEST_CASE("reflections are involutive isometries of determinant -1") {
  std::mt19937_64 rng(23);
  for (long p : {3L, 5L, 7L}) {
    const auto F = Zmod(p, 1);
    for (const QuadForm& Q : {build_Qn(2), build_Qtilde(1)}) {
      for (int t = 0; t < 10; ++t) {
        const auto x = random_anisotropic(F, Q, rng);
        const RingMatrix r = reflection(F, Q, x);
        CHECK(preserves_form(F, r, Q));
        CHECK(multiply(F, r, r) == identity(F, Q.dim()));
        CHECK(determinant(F, r) == F.from_int(-1));
      }
    }
  }
  const auto F = Zmod(5, 1);
  const std::vector<RingElement> iso{F.one(), F.zero(), F.zero(), F.zero()};
  CHECK(code_of([&] { reflection(F, build_Qn(2), iso); }) == Errc::IsotropicVector);
}

TEST_CASE("reflection factorizations reproduce the element") {
  std::mt19937_64 rng(29);
  const auto F = Zmod(7, 1);
  const QuadForm Q = build_Qn(2);
  const RingMatrix B = lift_matrix(F, build_B());
  const auto xs = reflection_factorization(F, Q, B);
  CHECK(xs.size() <= 4);
  CHECK(xs.size() % 2 == 0);
  CHECK(reflection_product(F, Q, xs) == B);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::vector<RingElement>> gens;
    for (int k = 0; k < 1 + t % 6; ++k) gens.push_back(random_anisotropic(F, Q, rng));
    const RingMatrix g = reflection_product(F, Q, gens);
    const auto f = reflection_factorization(F, Q, g);
    CHECK(f.size() <= Q.dim());
    CHECK(f.size() % 2 == gens.size() % 2);
    CHECK(reflection_product(F, Q, f) == g);
  }
  CHECK(code_of([&] {
          RingMatrix bad = identity(F, 4);
          bad(0, 1) = F.one();
          reflection_factorization(F, Q, bad);
        }) == Errc::NotAnIsometry);
}

TEST_CASE("spinor norm is a homomorphism and matches the reflection lengths") {
  std::mt19937_64 rng(31);
  const auto F = Zmod(31, 1);
  const QuadForm Q = build_Qn(2);
  CHECK(spinor_norm(F, Q, lift_matrix(F, build_B())) == SpinorClass::Square);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<RingElement>> a, b;
    SpinorClass expected = SpinorClass::Square;
    for (int k = 0; k < 2; ++k) {
      a.push_back(random_anisotropic(F, Q, rng));
      b.push_back(random_anisotropic(F, Q, rng));
    }
    for (const auto& x : a) expected = expected * square_class(F, bilinear(F, Q, x, x));
    const RingMatrix ga = reflection_product(F, Q, a), gb = reflection_product(F, Q, b);
    CHECK(spinor_norm(F, Q, ga) == expected);
    CHECK(spinor_norm(F, Q, multiply(F, ga, gb)) == spinor_norm(F, Q, ga) * spinor_norm(F, Q, gb));
  }
  const RingMatrix r = reflection(F, Q, random_anisotropic(F, Q, rng));
  CHECK(code_of([&] { spinor_norm(F, Q, r); }) == Errc::NotSpecialOrthogonal);
}
