#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "flatcyc/bigint.hpp"

namespace flatcyc {

/// Exact polynomial over Z, coefficients stored constant term first. The zero
/// polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly x();
  /// Product of (x - r) over the given roots.
  static IntPoly from_roots(const std::vector<BigInt>& roots);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const BigInt& leading() const;
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  BigInt operator()(const BigInt& x) const;
  Rational operator()(const Rational& x) const;

  IntPoly derivative() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& s, const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Human-readable form, highest degree first, e.g. "x^4 - 18*x^3 + 43*x^2 - 18*x + 1".
std::string to_string(const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& f);

/// Evaluate with Horner's rule inside an arbitrary coefficient ring.
template <class Ring>
typename Ring::Element evaluate(const Ring& R, const IntPoly& f, const typename Ring::Element& x) {
  auto acc = R.zero();
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = R.add(R.mul(acc, x), R.from_int(*it));
  return acc;
}

}  // namespace flatcyc
