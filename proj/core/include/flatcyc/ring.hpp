#pragma once

#include <optional>
#include <vector>

#include "flatcyc/bigint.hpp"
#include "flatcyc/int_poly.hpp"

namespace flatcyc {

/// A prime p together with an exponent j >= 1; names the ideal p^j (or 𝔭^j).
class PrimePower {
 public:
  /// Throws NonPrime / InvalidArgument.
  static PrimePower make(const BigInt& p, int j);

  const BigInt& p() const noexcept { return p_; }
  int j() const noexcept { return j_; }
  BigInt value() const { return flatcyc::pow(p_, static_cast<unsigned long>(j_)); }
  PrimePower with_exponent(int j) const { return make(p_, j); }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  PrimePower(BigInt p, int j) : p_(std::move(p)), j_(j) {}
  BigInt p_;
  int j_;
};

/// Element of Z[x]/(g, p^j) as its canonical coefficient vector (length deg g,
/// entries in [0, p^j)). Equality is structural.
struct RingElement {
  std::vector<BigInt> c;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

/// The local ring Z[x]/(g(x), p^j) for monic g of degree f in {1, 2},
/// irreducible modulo p. With g = x it is Z/p^j; with f = 2 it is the Galois
/// ring GR(p^j, 2), which realizes O_F/𝔭^j for an inert prime of a quadratic field.
class ResidueRing {
 public:
  using Element = RingElement;

  static ResidueRing make(const PrimePower& base, const IntPoly& g);
  static ResidueRing integers_mod(const PrimePower& base);

  const PrimePower& base() const noexcept { return base_; }
  const BigInt& p() const noexcept { return base_.p(); }
  int j() const noexcept { return base_.j(); }
  const IntPoly& local_poly() const noexcept { return g_; }
  int residue_degree() const noexcept { return g_.degree(); }
  /// p^j, the characteristic of the ring.
  const BigInt& modulus() const noexcept { return modulus_; }
  /// p^(j f).
  BigInt cardinality() const;
  /// p^f.
  BigInt residue_field_size() const;
  bool is_field() const noexcept { return base_.j() == 1; }
  bool is_prime_field() const noexcept { return base_.j() == 1 && g_.degree() == 1; }

  /// Same g over p^k.
  ResidueRing with_exponent(int k) const;
  ResidueRing residue_field() const { return with_exponent(1); }

  Element zero() const;
  Element one() const;
  Element from_int(const BigInt& v) const;
  Element from_coeffs(std::vector<BigInt> coeffs) const;
  /// The class of x; a root of g. Equal to -g(0) in the rational case.
  Element generator() const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, unsigned long e) const;
  bool is_zero(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }

  /// A unit iff its image in the residue field is nonzero.
  bool is_unit(const Element& a) const;
  /// Residue-field inverse refined by Newton's iteration y <- y(2 - xy).
  /// Throws NotAUnit.
  Element invert(const Element& a) const;

  /// Image under reduction to Z[x]/(g, p^k), k <= j.
  Element reduce(const Element& a, int k) const;
  /// Canonical lift of an element of Z[x]/(g, p^k) (same coefficients).
  Element lift(const Element& a) const;

  /// Bijection between elements and [0, |R|) used by enumeration oracles.
  BigInt index_of(const Element& a) const;
  Element element_at(const BigInt& index) const;

  /// Scalar from the integer coefficient of a rational-case element.
  const BigInt& scalar(const Element& a) const;

  friend bool operator==(const ResidueRing& a, const ResidueRing& b) {
    return a.base_ == b.base_ && a.g_ == b.g_;
  }

 private:
  ResidueRing(PrimePower base, IntPoly g);
  Element canonical(std::vector<BigInt> coeffs) const;
  Element residue_inverse(const Element& a) const;

  PrimePower base_;
  IntPoly g_;
  BigInt modulus_;
};

/// |R^×| = p^(jf) - p^((j-1)f), from the extension 1 -> 1+M -> R^× -> 𝔽^× -> 1.
BigInt unit_count(const ResidueRing& ring);

/// N(𝔭^j) = p^(j f).
BigInt ideal_norm(const PrimePower& base, int residue_degree);

enum class SplitType { Split, Inert, Ramified };

/// Splitting of p in Q(√m), decided by the Legendre symbol of the field
/// discriminant. m must be squarefree, m != 0, 1, and m ≢ 1 (mod 4) so that
/// O_F = Z[√m].
SplitType split_type(const BigInt& m, const BigInt& p);

/// Element a + b√m of Z[√m].
struct QuadraticInt {
  BigInt a;
  BigInt b;
  friend bool operator==(const QuadraticInt&, const QuadraticInt&) = default;
};

/// Z[√m] as a coefficient ring for the generic matrix algorithms.
class QuadraticIntegers {
 public:
  using Element = QuadraticInt;
  explicit QuadraticIntegers(BigInt m);
  const BigInt& m() const noexcept { return m_; }
  Element zero() const { return {0, 0}; }
  Element one() const { return {1, 0}; }
  Element from_int(const BigInt& v) const { return {v, 0}; }
  Element sqrt_m() const { return {0, 1}; }
  Element add(const Element& x, const Element& y) const { return {x.a + y.a, x.b + y.b}; }
  Element sub(const Element& x, const Element& y) const { return {x.a - y.a, x.b - y.b}; }
  Element neg(const Element& x) const { return {-x.a, -x.b}; }
  Element mul(const Element& x, const Element& y) const {
    return {x.a * y.a + m_ * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  bool is_zero(const Element& x) const { return x.a == 0 && x.b == 0; }
  bool equal(const Element& x, const Element& y) const { return x == y; }

 private:
  BigInt m_;
};

/// A prime 𝔭 of Z[√m] above an unramified rational prime p. For split p the
/// two primes correspond to the two square roots of m modulo p; `root` picks
/// which (the smaller representative in [0, p) when unspecified).
class QuadraticPrime {
 public:
  /// Throws Ramified for primes dividing the discriminant.
  static QuadraticPrime make(const BigInt& m, const BigInt& p, std::optional<BigInt> root = std::nullopt);

  const BigInt& m() const noexcept { return m_; }
  const BigInt& p() const noexcept { return p_; }
  SplitType type() const noexcept { return type_; }
  int residue_degree() const noexcept { return type_ == SplitType::Split ? 1 : 2; }

  /// O_F/𝔭^j.
  ResidueRing local_ring(int j) const;
  /// Image of a + b√m in O_F/𝔭^j.
  RingElement embed(const ResidueRing& ring, const QuadraticInt& x) const;

 private:
  QuadraticPrime(BigInt m, BigInt p, SplitType t, BigInt root)
      : m_(std::move(m)), p_(std::move(p)), type_(t), root_(std::move(root)) {}
  BigInt m_;
  BigInt p_;
  SplitType type_;
  BigInt root_;  // square root of m mod p (split case only)
};

std::string to_string(SplitType t);

}  // namespace flatcyc
