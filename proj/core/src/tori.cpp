#include "flatcyc/tori.hpp"

#include <cmath>
#include <thread>

#include "flatcyc/poly.hpp"

namespace flatcyc {

std::vector<RingElement> unit_kernel_vector(const ResidueRing& R, const RingMatrix& M0) {
  RingMatrix M = M0;
  const std::size_t rows = M.rows(), cols = M.cols();
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && !R.is_unit(M(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(M(r, j), M(pivot, j));
    const auto inv = R.invert(M(r, col));
    for (std::size_t j = 0; j < cols; ++j) M(r, j) = R.mul(M(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || R.is_zero(M(i, col))) continue;
      const auto factor = M(i, col);
      for (std::size_t j = 0; j < cols; ++j) M(i, j) = R.sub(M(i, j), R.mul(factor, M(r, j)));
    }
    pivot_of_row.push_back(col);
    is_pivot[col] = true;
    ++r;
  }
  require(pivot_of_row.size() + 1 == cols, Errc::NoUnitEigenvector,
          "eigenspace modulo the maximal ideal is not a line");
  std::size_t free = 0;
  while (is_pivot[free]) ++free;
  std::vector<RingElement> v(cols, R.zero());
  v[free] = R.one();
  for (std::size_t k = 0; k < pivot_of_row.size(); ++k) v[pivot_of_row[k]] = R.neg(M(k, free));
  for (const auto& e : apply(R, M0, v)) require(R.is_zero(e), Errc::NoUnitEigenvector, "no exact kernel vector");
  return v;
}

EigenData diagonalize_mod(const IntMatrix& A, const ResidueRing& ring) {
  require(A.is_square(), Errc::NotSquare, "diagonalize needs a square matrix");
  const IntPoly chi = char_poly(A);
  const ResidueRing field = ring.residue_field();
  const auto roots = roots_mod(chi, field);
  require(roots.square_free, Errc::RepeatedRootModP, "characteristic polynomial has a repeated root modulo p");
  require(roots.splits_completely, Errc::NotSplit, "characteristic polynomial does not split modulo p");
  const std::size_t d = A.rows();
  const RingMatrix a = lift_matrix(ring, A);
  EigenData out;
  out.P = RingMatrix(d, d, ring.zero());
  for (std::size_t i = 0; i < d; ++i) {
    const auto lambda = hensel_lift_root(chi, ring, roots.roots[i]);
    RingMatrix M = a;
    for (std::size_t k = 0; k < d; ++k) M(k, k) = ring.sub(M(k, k), lambda);
    const auto v = unit_kernel_vector(ring, M);
    for (std::size_t k = 0; k < d; ++k) out.P(k, i) = v[k];
    out.eigenvalues.push_back(lambda);
  }
  out.P_inv = inverse_local(ring, out.P);
  const auto D = multiply(ring, out.P_inv, multiply(ring, a, out.P));
  require(is_diagonal(ring, D), Errc::NoUnitEigenvector, "conjugated matrix is not diagonal");
  for (std::size_t i = 0; i < d; ++i)
    require(D(i, i) == out.eigenvalues[i], Errc::NoUnitEigenvector, "diagonal disagrees with eigenvalues");
  return out;
}

IsometricEigenData so_diagonalize(const IntMatrix& A, const QuadForm& Q, const ResidueRing& ring) {
  require(ring.p() != 2, Errc::EvenPrime, "isometric diagonalization needs an odd prime");
  require(Q.dim() % 2 == 0 && Q.dim() == A.rows(), Errc::NotHyperbolic, "expected the form Q_n of size 2n");
  const std::size_t n = Q.dim() / 2;
  require(Q == build_Qn(static_cast<int>(n)), Errc::NotHyperbolic, "form is not Q_n");
  const RingMatrix a = lift_matrix(ring, A);
  require(preserves_form(ring, a, Q) && determinant(ring, a) == ring.one(), Errc::NotAnIsometry,
          "matrix is not in SO(Q) over the ring");
  const IntPoly chi = char_poly(A);
  for (long s : {1L, -1L}) {
    const BigInt v = chi(BigInt(s));
    require(v == 0 || mod(v, ring.p()) != 0, Errc::EigenvaluePlusMinusOne,
            "p divides chi(" + std::to_string(s) + ") = " + to_string(v));
  }
  EigenData e = diagonalize_mod(A, ring);
  const ResidueRing field = ring.residue_field();
  for (const auto& lambda : e.eigenvalues) {
    const auto l1 = ring.reduce(lambda, 1);
    require(!(field.equal(l1, field.one()) || field.equal(l1, field.neg(field.one()))),
            Errc::EigenvaluePlusMinusOne, "eigenvalue congruent to +-1 modulo p");
  }
  const std::size_t d = 2 * n;
  std::vector<bool> used(d, false);
  std::vector<std::size_t> vs, us;
  for (std::size_t i = 0; i < d; ++i) {
    if (used[i]) continue;
    const auto inv = ring.invert(e.eigenvalues[i]);
    std::size_t partner = d;
    for (std::size_t k = i + 1; k < d && partner == d; ++k)
      if (!used[k] && e.eigenvalues[k] == inv) partner = k;
    require(partner < d, Errc::NonUnitPairing, "eigenvalue without an inverse partner");
    used[i] = used[partner] = true;
    vs.push_back(i);
    us.push_back(partner);
  }
  auto column = [&](std::size_t c) { return e.P.column(c); };
  IsometricEigenData out;
  out.n = n;
  out.eigen.P = RingMatrix(d, d, ring.zero());
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = column(vs[k]);
    auto u = column(us[k]);
    require(ring.is_zero(bilinear(ring, Q, v, v)) && ring.is_zero(bilinear(ring, Q, u, u)), Errc::NonUnitPairing,
            "eigenvector is not isotropic");
    const auto pairing = bilinear(ring, Q, v, u);
    require(ring.is_unit(pairing), Errc::NonUnitPairing, "eigenvector pairing is not a unit");
    const auto s = ring.invert(pairing);
    for (auto& x : u) x = ring.mul(x, s);
    for (std::size_t r = 0; r < d; ++r) {
      out.eigen.P(r, k) = v[r];
      out.eigen.P(r, n + k) = u[r];
    }
  }
  out.eigen.eigenvalues.resize(d);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigen.eigenvalues[k] = e.eigenvalues[vs[k]];
    out.eigen.eigenvalues[n + k] = e.eigenvalues[us[k]];
  }
  // P^t Q P = Q forces det P = ±1; swapping v_1 and u_1 keeps the pairing and
  // flips the sign.
  if (determinant(ring, out.eigen.P) != ring.one()) {
    for (std::size_t r = 0; r < d; ++r) std::swap(out.eigen.P(r, 0), out.eigen.P(r, n));
    std::swap(out.eigen.eigenvalues[0], out.eigen.eigenvalues[n]);
  }
  require(determinant(ring, out.eigen.P) == ring.one(), Errc::NonUnitPairing, "change of basis is not in SO");
  require(preserves_form(ring, out.eigen.P, Q), Errc::NonUnitPairing, "change of basis is not an isometry");
  out.eigen.P_inv = inverse_local(ring, out.eigen.P);
  const auto D = multiply(ring, out.eigen.P_inv, multiply(ring, a, out.eigen.P));
  require(is_diagonal(ring, D), Errc::NoUnitEigenvector, "conjugated matrix is not diagonal");
  for (std::size_t i = 0; i < d; ++i)
    require(D(i, i) == out.eigen.eigenvalues[i], Errc::NoUnitEigenvector, "diagonal disagrees with eigenvalues");
  return out;
}

BigInt centralizer_order_gl(const IntMatrix& A, const ResidueRing& ring) {
  diagonalize_mod(A, ring);
  return flatcyc::pow(unit_count(ring), A.rows());
}

BigInt centralizer_order_sl(const IntMatrix& A, const ResidueRing& ring) {
  diagonalize_mod(A, ring);
  return flatcyc::pow(unit_count(ring), A.rows() - 1);
}

BigInt centralizer_order_so(const IntMatrix& A, const QuadForm& Q, const ResidueRing& ring) {
  const auto iso = so_diagonalize(A, Q, ring);
  return flatcyc::pow(unit_count(ring), iso.n);
}

namespace {

bool in_group(const TableRing& T, const TableMatrix& X, GroupKind group, const TableMatrix* q) {
  const auto det = determinant(T, X);
  switch (group) {
    case GroupKind::GL:
      return T.is_unit(det);
    case GroupKind::SL:
      return det == T.one();
    case GroupKind::SO:
      return det == T.one() && equal(T, multiply(T, transpose(X), multiply(T, *q, X)), *q);
  }
  return false;
}

BigInt commutant_count(const TableRing& T, const TableMatrix& a, GroupKind group, const TableMatrix* q,
                       const BruteforceOptions& opts) {
  const ResidueRing& F = T.ring();
  const std::size_t d = a.rows();
  RingMatrix L(d * d, d * d, F.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        L(i * d + j, k * d + j) = F.add(L(i * d + j, k * d + j), T.to_element(a(i, k)));
        L(i * d + j, i * d + k) = F.sub(L(i * d + j, i * d + k), T.to_element(a(k, j)));
      }
  std::vector<TableMatrix> basis;
  for (const auto& v : kernel_basis(F, L)) {
    TableMatrix K(d, d, 0u);
    for (std::size_t c = 0; c < d * d; ++c) K(c / d, c % d) = T.from_element(v[c]);
    basis.push_back(std::move(K));
  }
  const std::size_t k = basis.size();
  const std::uint32_t p = T.size();
  require(std::pow(static_cast<double>(p), static_cast<double>(k)) <= opts.budget, Errc::TooLargeToEnumerate,
          "commutant too large to enumerate");
  const unsigned stride = std::max(1u, opts.workers);
  std::vector<std::uint64_t> parts(stride, 0);
  std::vector<std::thread> threads;
  auto work = [&](unsigned w) {
    std::vector<std::uint32_t> coeff(k, 0);
    std::uint64_t total = 0;
    for (std::uint32_t first = (k == 0 ? 0 : w); first < (k == 0 ? 1 : p); first += stride) {
      if (k == 0 && w != 0) break;
      if (k > 0) coeff[0] = first;
      std::fill(coeff.begin() + (k > 0 ? 1 : 0), coeff.end(), 0u);
      while (true) {
        TableMatrix X(d, d, 0u);
        for (std::size_t b = 0; b < k; ++b) {
          if (coeff[b] == 0) continue;
          for (std::size_t c = 0; c < d * d; ++c)
            X(c / d, c % d) = T.add(X(c / d, c % d), T.mul(coeff[b], basis[b](c / d, c % d)));
        }
        if (in_group(T, X, group, q)) ++total;
        std::size_t pos = 1;
        while (pos < k && ++coeff[pos] == p) coeff[pos++] = 0;
        if (pos >= k) break;
      }
    }
    parts[w] = total;
  };
  if (stride == 1) {
    work(0);
  } else {
    for (unsigned w = 0; w < stride; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  BigInt out = 0;
  for (auto v : parts) out += BigInt(std::to_string(v));
  return out;
}

}  // namespace

BigInt centralizer_bruteforce(const IntMatrix& A, const ResidueRing& ring, GroupKind group,
                              const std::optional<QuadForm>& Q, const BruteforceOptions& opts) {
  require(A.is_square(), Errc::NotSquare, "centralizer of a non-square matrix");
  require(group != GroupKind::SO || Q.has_value(), Errc::InvalidArgument, "SO centralizer needs a form");
  if (Q) require(Q->dim() == A.rows(), Errc::SizeMismatch, "form and matrix sizes differ");
  const TableRing T = TableRing::build(ring);
  const TableMatrix a = to_table_matrix(T, A);
  std::optional<TableMatrix> q;
  if (Q) q = to_table_matrix(T, Q->matrix());
  const int d = static_cast<int>(A.rows());
  const bool commutant = opts.method == CentralizerMethod::Commutant ||
                         (opts.method == CentralizerMethod::Auto && ring.is_prime_field());
  if (commutant) {
    require(ring.is_prime_field(), Errc::InvalidArgument, "commutant enumeration needs a prime field");
    return commutant_count(T, a, group, q ? &*q : nullptr, opts);
  }
  auto commutes = [&](const TableMatrix& X) { return equal(T, multiply(T, a, X), multiply(T, X, a)); };
  if (group == GroupKind::SO) {
    const auto r = enumerate_orthogonal(T, *Q, opts.budget, opts.workers, [&](const TableMatrix& X) {
      return determinant(T, X) == T.one() && commutes(X);
    });
    return r.selected;
  }
  return count_matrices_if(
      T, d, [&](const TableMatrix& X) { return commutes(X) && in_group(T, X, group, nullptr); }, opts.budget,
      opts.workers);
}

}  // namespace flatcyc
