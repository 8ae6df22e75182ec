#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "flatcyc/groups.hpp"
#include "flatcyc/matrix.hpp"
#include "flatcyc/ring.hpp"

namespace flatcyc {

/// Addition and multiplication tables of a small residue ring, indexed by
/// ResidueRing::index_of. Built from the exact ring operations, so table
/// lookups agree with BigInt arithmetic by construction.
class TableRing {
 public:
  using Element = std::uint32_t;

  /// Throws TooLargeToEnumerate when |R| exceeds max_size.
  static TableRing build(const ResidueRing& R, std::uint32_t max_size = 4096);

  const ResidueRing& ring() const noexcept { return ring_; }
  std::uint32_t size() const noexcept { return n_; }

  Element zero() const { return 0; }
  Element one() const { return one_; }
  Element from_int(const BigInt& v) const;
  Element from_element(const RingElement& e) const;
  RingElement to_element(Element a) const { return ring_.element_at(a); }

  Element add(Element a, Element b) const { return add_[a * n_ + b]; }
  Element sub(Element a, Element b) const { return add_[a * n_ + neg_[b]]; }
  Element neg(Element a) const { return neg_[a]; }
  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  bool is_unit(Element a) const { return unit_[a] != 0; }

 private:
  explicit TableRing(const ResidueRing& R) : ring_(R) {}
  ResidueRing ring_;
  std::uint32_t n_ = 0;
  Element one_ = 1;
  std::vector<Element> add_, mul_, neg_;
  std::vector<std::uint8_t> unit_;
};

using TableMatrix = Matrix<std::uint32_t>;

/// Total number of d×d matrices, as a double for budget comparisons.
double matrix_space_size(const BigInt& ring_size, int d);

/// #SL_2(R) and #GL_2(R) by direct counting over all 2×2 matrices, arranged as
/// #{(b, c)} lookups into a histogram of products a·d.
BigInt count_sl2_bruteforce(const ResidueRing& R, unsigned workers = 1);
BigInt count_gl2_bruteforce(const ResidueRing& R, unsigned workers = 1);

/// Count all d×d matrices over R satisfying pred, by exhaustive enumeration.
/// Throws TooLargeToEnumerate when |R|^(d^2) > budget.
BigInt count_matrices_if(const TableRing& T, int d, const std::function<bool(const TableMatrix&)>& pred,
                         double budget = kDefaultEnumerationBudget, unsigned workers = 1);

/// #{g in M_d(R): det g = 1} and #{det g unit}, via count_matrices_if.
BigInt count_sl_bruteforce(const ResidueRing& R, int d, double budget = kDefaultEnumerationBudget,
                           unsigned workers = 1);
BigInt count_gl_bruteforce(const ResidueRing& R, int d, double budget = kDefaultEnumerationBudget,
                           unsigned workers = 1);

struct OrthogonalCount {
  BigInt o;   // |O(Q; R)|
  BigInt so;  // determinant 1 part
  BigInt selected;  // elements accepted by the optional predicate
  std::uint64_t nodes = 0;
};

/// Column-by-column search for g with g^t Q g = Q over R. A candidate column
/// enters only if its norm and its pairings with earlier columns match Q, and
/// the candidate lists of later columns are filtered as each column is fixed.
/// `node_budget` caps the number of candidate checks (TooLargeToEnumerate).
/// `pred`, when given, must be pure; it sees every group element.
OrthogonalCount enumerate_orthogonal(const TableRing& T, const QuadForm& Q, double node_budget,
                                     unsigned workers = 1,
                                     const std::function<bool(const TableMatrix&)>& pred = nullptr);

/// Number of g in O(Q; Z/p^j) with g ≡ I mod p^(j-1), by the same search
/// restricted to columns e_i + p^(j-1) v. Equals |S(Q)| for j >= 2.
BigInt kernel_fiber_count(const QuadForm& Q, const PrimePower& base, unsigned workers = 1);

/// Exhaustive count of μ in M_d(F_p) with μ^t Q + Q μ = 0 (small d and p only).
BigInt so_lie_kernel_bruteforce(const QuadForm& Q, const BigInt& p, double budget = kDefaultEnumerationBudget);

TableMatrix to_table_matrix(const TableRing& T, const IntMatrix& A);
TableMatrix table_multiply(const TableRing& T, const TableMatrix& A, const TableMatrix& B);

}  // namespace flatcyc
