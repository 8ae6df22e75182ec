#pragma once

#include <optional>
#include <vector>

#include "flatcyc/enumerate.hpp"
#include "flatcyc/groups.hpp"
#include "flatcyc/int_poly.hpp"
#include "flatcyc/ring.hpp"

namespace flatcyc {

struct EigenData {
  std::vector<RingElement> eigenvalues;  // column i of P has eigenvalue i
  RingMatrix P;
  RingMatrix P_inv;
};

struct IsometricEigenData {
  EigenData eigen;
  // Columns are ordered v_1..v_n, u_1..u_n with ⟨v_i, u_i⟩ = 1 and
  // eigenvalue(u_i) = 1 / eigenvalue(v_i).
  std::size_t n = 0;
};

/// A vector v with M v = 0 and a unit coordinate, by elimination with unit
/// pivots over the local ring. Throws NoUnitEigenvector when the kernel modulo
/// the maximal ideal is not one-dimensional or the exact kernel is empty.
std::vector<RingElement> unit_kernel_vector(const ResidueRing& R, const RingMatrix& M);

/// Diagonalize A over O/𝔭^j: roots of χ_A modulo 𝔭, Hensel-lifted, one
/// eigenvector each. Throws RepeatedRootModP, NotSplit, NoUnitEigenvector.
EigenData diagonalize_mod(const IntMatrix& A, const ResidueRing& ring);

/// Eigenbasis of A in SO(Q_n; R) normalized to hyperbolic pairs.
/// Throws NotHyperbolic, EvenPrime, NotAnIsometry, EigenvaluePlusMinusOne,
/// NonUnitPairing and everything diagonalize_mod throws.
IsometricEigenData so_diagonalize(const IntMatrix& A, const QuadForm& Q, const ResidueRing& ring);

/// |R^×|^d once A is diagonalized with distinct eigenvalues.
BigInt centralizer_order_gl(const IntMatrix& A, const ResidueRing& ring);
/// |R^×|^(d-1): the determinant-1 slice of the split torus.
BigInt centralizer_order_sl(const IntMatrix& A, const ResidueRing& ring);
/// |R^×|^n for A in SO(Q_n) diagonalized isometrically.
BigInt centralizer_order_so(const IntMatrix& A, const QuadForm& Q, const ResidueRing& ring);

enum class GroupKind { GL, SL, SO };

enum class CentralizerMethod {
  Auto,       // commutant over prime fields, full search otherwise
  Commutant,  // enumerate the F_p-span of the commutant of A (prime fields only)
  FullSearch  // every matrix (GL, SL) or the column search over O(Q) (SO)
};

struct BruteforceOptions {
  double budget = kDefaultEnumerationBudget;
  unsigned workers = 1;
  CentralizerMethod method = CentralizerMethod::Auto;
};

/// Exhaustive count of group elements commuting with A. SO needs Q.
/// Throws TooLargeToEnumerate.
BigInt centralizer_bruteforce(const IntMatrix& A, const ResidueRing& ring, GroupKind group,
                              const std::optional<QuadForm>& Q = std::nullopt, const BruteforceOptions& opts = {});

}  // namespace flatcyc
