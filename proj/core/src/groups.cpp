#include "flatcyc/groups.hpp"

#include <limits>

#include "flatcyc/enumerate.hpp"

namespace flatcyc {

namespace {

void require_odd_prime(const BigInt& p) {
  require(is_prime(p), Errc::NonPrime, to_string(p) + " is not prime");
  require(p != 2, Errc::EvenPrime, "orthogonal groups need an odd prime");
}

void require_nondegenerate(const QuadForm& Q, const BigInt& p) {
  require(Q.nondegenerate_mod(p), Errc::DegenerateForm, "form degenerates modulo " + to_string(p));
}

std::size_t rank_mod_p(const ResidueRing& F, const IntMatrix& A) { return rank(F, lift_matrix(F, A)); }

}  // namespace

QuadForm QuadForm::make(IntMatrix Q) {
  require(Q.is_square(), Errc::NotSquare, "quadratic form matrix must be square");
  require(Q == transpose(Q), Errc::InvalidArgument, "quadratic form matrix must be symmetric");
  BigInt det = determinant(IntegerRing{}, Q);
  require(det != 0, Errc::DegenerateForm, "quadratic form is degenerate");
  return QuadForm(std::move(Q), std::move(det));
}

QuadForm build_Qn(int n) {
  require(n >= 1, Errc::InvalidArgument, "Q_n needs n >= 1");
  const std::size_t d = 2 * static_cast<std::size_t>(n);
  IntMatrix Q(d, d, BigInt(0));
  for (int i = 0; i < n; ++i) {
    Q(i, n + i) = 1;
    Q(n + i, i) = 1;
  }
  return QuadForm::make(std::move(Q));
}

QuadForm build_Qtilde(int n) {
  const IntMatrix Qn = build_Qn(n).matrix();
  return QuadForm::make(block_diagonal({Qn, make_int_matrix({{1}})}));
}

IntMatrix build_B() {
  return make_int_matrix({{1, 1, -2, 2}, {1, 2, -4, 2}, {-2, -4, 10, -5}, {2, 2, -5, 5}});
}

std::vector<std::size_t> hyperbolic_interleave(int m) {
  require(m >= 1, Errc::InvalidArgument, "block count must be >= 1");
  const std::size_t half = 2 * static_cast<std::size_t>(m);
  std::vector<std::size_t> perm(2 * half);
  for (std::size_t b = 0; b < static_cast<std::size_t>(m); ++b) {
    for (std::size_t k = 0; k < 2; ++k) {
      perm[2 * b + k] = 4 * b + k;
      perm[half + 2 * b + k] = 4 * b + 2 + k;
    }
  }
  return perm;
}

IntMatrix build_A_block(int m) {
  require(m >= 1, Errc::InvalidArgument, "block count must be >= 1");
  const IntMatrix B = build_B();
  std::vector<IntMatrix> blocks;
  IntMatrix power = B;
  for (int k = 1; k <= m; ++k) {
    blocks.push_back(power);
    power = multiply(IntegerRing{}, power, B);
  }
  return permute(block_diagonal(blocks), hyperbolic_interleave(m));
}

IntMatrix to_int_matrix(const ResidueRing& R, const RingMatrix& A) {
  IntMatrix out(A.rows(), A.cols(), BigInt(0));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = R.scalar(A(i, j));
  return out;
}

bool preserves_form(const IntMatrix& g, const QuadForm& Q) { return preserves_form(IntegerRing{}, g, Q); }

BigInt gl_order_field(const BigInt& q, int d) {
  require(d >= 1, Errc::InvalidArgument, "dimension must be >= 1");
  const BigInt qd = flatcyc::pow(q, static_cast<unsigned long>(d));
  BigInt out = 1;
  for (int i = 0; i < d; ++i) out *= qd - flatcyc::pow(q, static_cast<unsigned long>(i));
  return out;
}

BigInt gl_order(const ResidueRing& ring, int d) {
  require(d >= 2, Errc::InvalidArgument, "dimension must be >= 2");
  const auto dd = static_cast<unsigned long>(d) * static_cast<unsigned long>(d);
  const BigInt q = ring.residue_field_size();
  return flatcyc::pow(ring.cardinality(), dd) * gl_order_field(q, d) / flatcyc::pow(q, dd);
}

BigInt sl_order(const ResidueRing& ring, int d) { return gl_order(ring, d) / unit_count(ring); }

std::size_t so_lie_kernel_dimension(const QuadForm& Q, const BigInt& p) {
  require_odd_prime(p);
  require_nondegenerate(Q, p);
  const std::size_t d = Q.dim();
  const IntMatrix& q = Q.matrix();
  // Unknown μ_{rc} sits at column r*d + c; equation (i, j) is (μ^t Q + Q μ)_{ij}.
  IntMatrix L(d * d, d * d, BigInt(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t row = i * d + j;
      for (std::size_t k = 0; k < d; ++k) {
        L(row, k * d + i) += q(k, j);
        L(row, k * d + j) += q(i, k);
      }
    }
  }
  const ResidueRing F = ResidueRing::integers_mod(PrimePower::make(p, 1));
  return d * d - rank_mod_p(F, L);
}

BigInt so_lie_kernel_count(const QuadForm& Q, const BigInt& p) {
  return flatcyc::pow(p, so_lie_kernel_dimension(Q, p));
}

BigInt so_lie_kernel_count_blocks(int n, const BigInt& p) {
  require_odd_prime(p);
  require(n >= 1, Errc::InvalidArgument, "n must be >= 1");
  const std::size_t m = static_cast<std::size_t>(n);
  const ResidueRing F = ResidueRing::integers_mod(PrimePower::make(p, 1));
  // x + x^t = 0 on one n×n block.
  IntMatrix skew(m * m, m * m, BigInt(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      skew(i * m + j, i * m + j) += 1;
      skew(i * m + j, j * m + i) += 1;
    }
  const std::size_t skew_dim = m * m - rank_mod_p(F, skew);
  // e + a^t = 0 couples two blocks: unknowns a (first n^2), e (last n^2).
  IntMatrix couple(m * m, 2 * m * m, BigInt(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      couple(i * m + j, m * m + i * m + j) += 1;
      couple(i * m + j, j * m + i) += 1;
    }
  const std::size_t couple_dim = 2 * m * m - rank_mod_p(F, couple);
  return flatcyc::pow(p, 2 * skew_dim + couple_dim);
}

BigInt so_lie_kernel_printed(int n, const BigInt& p) {
  require(n >= 1, Errc::InvalidArgument, "n must be >= 1");
  const auto nn = static_cast<unsigned long>(n);
  return flatcyc::pow(p, nn * nn) + 2 * flatcyc::pow(p, nn * (nn - 1) / 2);
}

std::optional<BigInt> orthogonal_order_formula(const QuadForm& Q, const BigInt& q) {
  const std::size_t d = Q.dim();
  const auto n = static_cast<unsigned long>(d / 2);
  if (n == 0) return std::nullopt;
  if (d % 2 == 0) {
    if (!(Q == build_Qn(static_cast<int>(n)))) return std::nullopt;
    BigInt out = 2 * flatcyc::pow(q, n * (n - 1)) * (flatcyc::pow(q, n) - 1);
    for (unsigned long i = 1; i < n; ++i) out *= flatcyc::pow(q, 2 * i) - 1;
    return out;
  }
  if (!(Q == build_Qtilde(static_cast<int>(n)))) return std::nullopt;
  BigInt out = 2 * flatcyc::pow(q, n * n);
  for (unsigned long i = 1; i <= n; ++i) out *= flatcyc::pow(q, 2 * i) - 1;
  return out;
}

OrthogonalOrder orthogonal_order_mod_p(const QuadForm& Q, const BigInt& p, double budget, unsigned workers) {
  require_odd_prime(p);
  require_nondegenerate(Q, p);
  OrthogonalOrder out;
  out.formula = orthogonal_order_formula(Q, p);
  const int d = static_cast<int>(Q.dim());
  if (matrix_space_size(p, d) <= budget) {
    const TableRing T = TableRing::build(ResidueRing::integers_mod(PrimePower::make(p, 1)));
    out.enumerated = enumerate_orthogonal(T, Q, std::numeric_limits<double>::infinity(), workers).o;
    out.order = *out.enumerated;
    return out;
  }
  require(out.formula.has_value(), Errc::TooLargeToEnumerate,
          "no closed formula for this form and p^(d^2) exceeds the enumeration budget");
  out.order = *out.formula;
  return out;
}

BigInt orthogonal_order_tower(const QuadForm& Q, const PrimePower& base, double budget) {
  const BigInt base_order = orthogonal_order_mod_p(Q, base.p(), budget).order;
  const BigInt kernel = so_lie_kernel_count(Q, base.p());
  return base_order * flatcyc::pow(kernel, static_cast<unsigned long>(base.j() - 1));
}

BigInt special_orthogonal_order(const QuadForm& Q, const PrimePower& base, double budget) {
  return orthogonal_order_tower(Q, base, budget) / 2;
}

int spinor_kernel_index(const QuadForm& Q, const BigInt& p) {
  require_odd_prime(p);
  require_nondegenerate(Q, p);
  const ResidueRing F = ResidueRing::integers_mod(PrimePower::make(p, 1));
  const std::size_t d = Q.dim();
  bool square = false, nonsquare = false;
  // Vectors with at most two nonzero coordinates in {1, ..., p-1} suffice:
  // a nondegenerate plane represents every nonzero class.
  for (std::size_t i = 0; i < d && !(square && nonsquare); ++i) {
    for (std::size_t k = i; k < d && !(square && nonsquare); ++k) {
      for (BigInt a = 1; a < p && !(square && nonsquare); ++a) {
        for (BigInt b = (k == i ? BigInt(0) : BigInt(1)); b < p && !(square && nonsquare); ++b) {
          std::vector<RingElement> x(d, F.zero());
          x[i] = F.from_int(a);
          if (k != i) x[k] = F.from_int(b);
          const auto n = bilinear(F, Q, x, x);
          if (F.is_zero(n)) continue;
          (square_class(F, n) == SpinorClass::Square ? square : nonsquare) = true;
          if (k == i) break;
        }
      }
    }
  }
  return (square && nonsquare) ? 2 : 1;
}

BigInt omega_order(const QuadForm& Q, const PrimePower& base, double budget) {
  return special_orthogonal_order(Q, base, budget) / spinor_kernel_index(Q, base.p());
}

RingMatrix reflection(const ResidueRing& R, const QuadForm& Q, const std::vector<RingElement>& x) {
  require(R.p() != 2, Errc::EvenPrime, "reflections need an odd prime");
  require(x.size() == Q.dim(), Errc::SizeMismatch, "vector and form sizes differ");
  const auto norm = bilinear(R, Q, x, x);
  require(R.is_unit(norm), Errc::IsotropicVector, "<x, x> is not a unit");
  const auto qx = apply(R, lift_matrix(R, Q.matrix()), x);
  const auto factor = R.mul(R.from_int(2), R.invert(norm));
  const std::size_t d = x.size();
  RingMatrix out = identity(R, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = R.sub(out(i, j), R.mul(factor, R.mul(x[i], qx[j])));
  return out;
}

RingMatrix reflection_product(const ResidueRing& R, const QuadForm& Q,
                              const std::vector<std::vector<RingElement>>& xs) {
  RingMatrix out = identity(R, Q.dim());
  for (const auto& x : xs) out = multiply(R, out, reflection(R, Q, x));
  return out;
}

namespace {

std::vector<RingElement> random_vector_in(const ResidueRing& F, const std::vector<std::vector<RingElement>>& basis,
                                          std::size_t d, std::mt19937_64& rng) {
  const std::uint64_t p = to_u64(F.p());
  std::vector<RingElement> v(d, F.zero());
  for (const auto& b : basis) {
    const auto c = F.from_int(BigInt(std::to_string(rng() % p)));
    for (std::size_t i = 0; i < d; ++i) v[i] = F.add(v[i], F.mul(c, b[i]));
  }
  return v;
}

std::vector<RingElement> vec_sub(const ResidueRing& F, const std::vector<RingElement>& a,
                                 const std::vector<RingElement>& b) {
  std::vector<RingElement> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.sub(a[i], b[i]);
  return out;
}

std::vector<RingElement> vec_add(const ResidueRing& F, const std::vector<RingElement>& a,
                                 const std::vector<RingElement>& b) {
  std::vector<RingElement> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.add(a[i], b[i]);
  return out;
}

// One sweep: returns the reflection vectors, or nullopt if sampling failed.
std::optional<std::vector<std::vector<RingElement>>> factor_once(const ResidueRing& F, const QuadForm& Q,
                                                                 const RingMatrix& g, std::mt19937_64& rng) {
  const std::size_t d = Q.dim();
  const auto q = lift_matrix(F, Q.matrix());
  RingMatrix tau = g;
  std::vector<std::vector<RingElement>> factors;
  std::vector<std::vector<RingElement>> chosen;
  for (std::size_t step = 0; step < d; ++step) {
    std::vector<std::vector<RingElement>> complement;
    if (chosen.empty()) {
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<RingElement> e(d, F.zero());
        e[i] = F.one();
        complement.push_back(std::move(e));
      }
    } else {
      RingMatrix constraints(chosen.size(), d, F.zero());
      for (std::size_t r = 0; r < chosen.size(); ++r) {
        const auto qu = apply(F, q, chosen[r]);
        for (std::size_t i = 0; i < d; ++i) constraints(r, i) = qu[i];
      }
      complement = kernel_basis(F, constraints);
    }
    // Prefer u fixed by tau, then u with tau(u) - u anisotropic.
    std::optional<std::vector<RingElement>> best;
    int best_cost = 3;
    for (int sample = 0; sample < 48 && best_cost > 0; ++sample) {
      auto u = random_vector_in(F, complement, d, rng);
      if (F.is_zero(bilinear(F, Q, u, u))) continue;
      const auto tu = apply(F, tau, u);
      int cost = 2;
      if (tu == u) {
        cost = 0;
      } else {
        const auto diff = vec_sub(F, tu, u);
        if (!F.is_zero(bilinear(F, Q, diff, diff))) cost = 1;
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = std::move(u);
      }
    }
    if (!best) return std::nullopt;
    const auto& u = *best;
    const auto tu = apply(F, tau, u);
    if (best_cost == 1) {
      const auto x = vec_sub(F, tu, u);
      tau = multiply(F, reflection(F, Q, x), tau);
      factors.push_back(x);
    } else if (best_cost == 2) {
      const auto x = vec_add(F, tu, u);
      tau = multiply(F, reflection(F, Q, u), multiply(F, reflection(F, Q, x), tau));
      factors.push_back(x);
      factors.push_back(u);
    }
    chosen.push_back(u);
  }
  if (!equal(F, tau, identity(F, d))) return std::nullopt;
  return factors;
}

}  // namespace

std::vector<std::vector<RingElement>> reflection_factorization(const ResidueRing& F, const QuadForm& Q,
                                                               const RingMatrix& g, std::uint64_t seed,
                                                               int attempts) {
  require(F.is_prime_field(), Errc::InvalidArgument, "reflection factorization works over F_p");
  require(F.p() != 2, Errc::EvenPrime, "reflections need an odd prime");
  require(preserves_form(F, g, Q), Errc::NotAnIsometry, "matrix does not preserve the form");
  std::optional<std::vector<std::vector<RingElement>>> best;
  for (int a = 0; a < attempts; ++a) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(a));
    auto f = factor_once(F, Q, g, rng);
    if (f && (!best || f->size() < best->size())) best = std::move(f);
    if (best && best->size() <= Q.dim()) break;
  }
  require(best.has_value(), Errc::InvalidArgument, "failed to sample an orthogonal basis");
  return *best;
}

SpinorClass operator*(SpinorClass a, SpinorClass b) {
  return a == b ? SpinorClass::Square : SpinorClass::Nonsquare;
}

std::string to_string(SpinorClass s) { return s == SpinorClass::Square ? "square" : "nonsquare"; }

SpinorClass square_class(const ResidueRing& F, const RingElement& a) {
  require(F.is_field(), Errc::InvalidArgument, "square classes are taken in the residue field");
  require(F.is_unit(a), Errc::NotAUnit, "square class of zero");
  const BigInt q = F.cardinality();
  const auto e = to_u64(BigInt((q - 1) / 2));
  return F.pow(a, e) == F.one() ? SpinorClass::Square : SpinorClass::Nonsquare;
}

SpinorClass spinor_norm(const ResidueRing& F, const QuadForm& Q, const RingMatrix& g, std::uint64_t seed) {
  require(F.is_unit(determinant(F, g)) && determinant(F, g) == F.one(), Errc::NotSpecialOrthogonal,
          "spinor norm is defined on SO");
  SpinorClass out = SpinorClass::Square;
  for (const auto& x : reflection_factorization(F, Q, g, seed)) out = out * square_class(F, bilinear(F, Q, x, x));
  return out;
}

std::vector<RingElement> random_anisotropic(const ResidueRing& F, const QuadForm& Q, std::mt19937_64& rng) {
  const std::size_t d = Q.dim();
  std::vector<std::vector<RingElement>> basis;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<RingElement> e(d, F.zero());
    e[i] = F.one();
    basis.push_back(std::move(e));
  }
  while (true) {
    auto v = random_vector_in(F, basis, d, rng);
    if (F.is_unit(bilinear(F, Q, v, v))) return v;
  }
}

}  // namespace flatcyc
