#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "flatcyc/matrix.hpp"
#include "flatcyc/ring.hpp"

namespace flatcyc {

using RingMatrix = Matrix<RingElement>;

/// Symmetric integer matrix with nonzero determinant.
class QuadForm {
 public:
  /// Throws InvalidArgument (not symmetric) or DegenerateForm (det = 0).
  static QuadForm make(IntMatrix Q);

  const IntMatrix& matrix() const noexcept { return Q_; }
  std::size_t dim() const noexcept { return Q_.rows(); }
  const BigInt& det() const noexcept { return det_; }
  bool nondegenerate_mod(const BigInt& p) const { return mod(det_, p) != 0; }

  friend bool operator==(const QuadForm& a, const QuadForm& b) { return a.Q_ == b.Q_; }

 private:
  QuadForm(IntMatrix Q, BigInt det) : Q_(std::move(Q)), det_(std::move(det)) {}
  IntMatrix Q_;
  BigInt det_;
};

/// (0 I_n; I_n 0), size 2n.
QuadForm build_Qn(int n);
/// Q_n ⊕ (1), size 2n + 1.
QuadForm build_Qtilde(int n);

/// The 4×4 symmetric matrix in SO(Q_2; Z) with characteristic polynomial
/// x^4 - 18x^3 + 43x^2 - 18x + 1.
IntMatrix build_B();

/// Coordinate order carrying Q_2 ⊕ ... ⊕ Q_2 (m copies) to Q_{2m}: block b
/// holds (e_{2b+1}, e_{2b+2}, f_{2b+1}, f_{2b+2}), and the target basis lists
/// all e-vectors, then all f-vectors. perm[new] = old.
std::vector<std::size_t> hyperbolic_interleave(int m);

/// B ⊕ B^2 ⊕ ... ⊕ B^m, reordered by hyperbolic_interleave so it preserves Q_{2m}.
IntMatrix build_A_block(int m);

template <class Ring>
Matrix<typename Ring::Element> lift_matrix(const Ring& R, const IntMatrix& A) {
  Matrix<typename Ring::Element> out(A.rows(), A.cols(), R.zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = R.from_int(A(i, j));
  return out;
}

/// Integer representatives of a rational-case residue matrix.
IntMatrix to_int_matrix(const ResidueRing& R, const RingMatrix& A);

/// g^t Q g == Q in the ring. Throws SizeMismatch.
template <class Ring>
bool preserves_form(const Ring& R, const Matrix<typename Ring::Element>& g, const QuadForm& Q) {
  require(g.is_square() && g.rows() == Q.dim(), Errc::SizeMismatch, "form and matrix sizes differ");
  const auto q = lift_matrix(R, Q.matrix());
  return equal(R, multiply(R, transpose(g), multiply(R, q, g)), q);
}

bool preserves_form(const IntMatrix& g, const QuadForm& Q);

/// ⟨u, v⟩ = u^t Q v.
template <class Ring>
typename Ring::Element bilinear(const Ring& R, const QuadForm& Q, const std::vector<typename Ring::Element>& u,
                                const std::vector<typename Ring::Element>& v) {
  const auto qv = apply(R, lift_matrix(R, Q.matrix()), v);
  auto acc = R.zero();
  for (std::size_t i = 0; i < u.size(); ++i) acc = R.add(acc, R.mul(u[i], qv[i]));
  return acc;
}

/// |GL_d(F_q)| = prod_{i<d} (q^d - q^i).
BigInt gl_order_field(const BigInt& q, int d);
/// N^{d^2} |GL_d(F)| / |F|^{d^2}. Throws InvalidArgument for d < 2.
BigInt gl_order(const ResidueRing& ring, int d);
/// |GL_d(R)| / |R^×|.
BigInt sl_order(const ResidueRing& ring, int d);

/// #{μ in M_d(F_p) : μ^t Q + Q μ = 0} as p^(d^2 - rank) by elimination.
/// Throws EvenPrime, DegenerateForm.
BigInt so_lie_kernel_count(const QuadForm& Q, const BigInt& p);
std::size_t so_lie_kernel_dimension(const QuadForm& Q, const BigInt& p);

/// Same count for Q_n from the block shape μ = (a b; c e): the equations split
/// into c + c^t = 0, b + b^t = 0 and e + a^t = 0, each solved on its own.
BigInt so_lie_kernel_count_blocks(int n, const BigInt& p);

/// The closed form |M_i|^{n^2} + 2|M_i|^{n(n-1)/2}, kept for side-by-side
/// comparison with the kernel count it is often quoted for.
BigInt so_lie_kernel_printed(int n, const BigInt& p);

/// Classical order of O(Q; F_q) for Q = Q_n (split, even dimension) or
/// Q = Q̃_n (odd dimension); nullopt for other forms.
std::optional<BigInt> orthogonal_order_formula(const QuadForm& Q, const BigInt& q);

inline constexpr double kDefaultEnumerationBudget = 5e7;

struct OrthogonalOrder {
  BigInt order;
  std::optional<BigInt> enumerated;  // set when the search ran
  std::optional<BigInt> formula;     // set when a classical formula applies
  bool agree() const { return !enumerated || !formula || *enumerated == *formula; }
};

/// |O(Q; F_p)|: enumeration when p^(d^2) <= budget, cross-checked against the
/// classical formula when one applies. Over budget, the formula alone is
/// returned (enumerated unset); with neither available, throws TooLargeToEnumerate.
/// Throws EvenPrime, DegenerateForm.
OrthogonalOrder orthogonal_order_mod_p(const QuadForm& Q, const BigInt& p, double budget = kDefaultEnumerationBudget,
                                       unsigned workers = 1);

/// |O(Q; Z/p^j)| = |O(Q; F_p)| · |S(Q)|^(j-1).
BigInt orthogonal_order_tower(const QuadForm& Q, const PrimePower& base, double budget = kDefaultEnumerationBudget);

/// |SO| = |O| / 2 (reflections have determinant -1).
BigInt special_orthogonal_order(const QuadForm& Q, const PrimePower& base, double budget = kDefaultEnumerationBudget);

/// Index of the spinor kernel in SO(Q; F_p): 2 when anisotropic vectors of both
/// square classes exist (found by a deterministic vector search), else 1.
int spinor_kernel_index(const QuadForm& Q, const BigInt& p);

/// |Ω(Q; Z/p^j)| = |SO(Q; Z/p^j)| / index. The reduction kernel lies inside Ω
/// since 1 + pZ_p consists of squares for odd p.
BigInt omega_order(const QuadForm& Q, const PrimePower& base, double budget = kDefaultEnumerationBudget);

/// r_x: v -> v - 2⟨v,x⟩/⟨x,x⟩ x. Throws IsotropicVector, EvenPrime.
RingMatrix reflection(const ResidueRing& R, const QuadForm& Q, const std::vector<RingElement>& x);

/// Vectors x_1..x_k with g = r_{x_1} ... r_{x_k} over a prime field, by a
/// Cartan-Dieudonné sweep over an adaptively chosen orthogonal basis. Several
/// seeded bases are tried and the shortest factorization is returned.
/// Throws NotAnIsometry.
std::vector<std::vector<RingElement>> reflection_factorization(const ResidueRing& F, const QuadForm& Q,
                                                               const RingMatrix& g, std::uint64_t seed = 1,
                                                               int attempts = 16);

/// Product r_{x_1} ... r_{x_k} (identity for an empty list).
RingMatrix reflection_product(const ResidueRing& R, const QuadForm& Q, const std::vector<std::vector<RingElement>>& xs);

enum class SpinorClass { Square, Nonsquare };
SpinorClass operator*(SpinorClass a, SpinorClass b);
std::string to_string(SpinorClass s);

/// Square class of a unit of F_p.
SpinorClass square_class(const ResidueRing& F, const RingElement& a);

/// θ(g), the product of the classes of ⟨x_i, x_i⟩ over a reflection factorization.
/// Throws NotSpecialOrthogonal.
SpinorClass spinor_norm(const ResidueRing& F, const QuadForm& Q, const RingMatrix& g, std::uint64_t seed = 1);

/// Random anisotropic vector over a prime field.
std::vector<RingElement> random_anisotropic(const ResidueRing& F, const QuadForm& Q, std::mt19937_64& rng);

}  // namespace flatcyc
