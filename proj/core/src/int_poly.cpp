#include "flatcyc/int_poly.hpp"

#include <sstream>

#include "flatcyc/error.hpp"

namespace flatcyc {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::x() { return IntPoly(std::vector<BigInt>{0, 1}); }

IntPoly IntPoly::from_roots(const std::vector<BigInt>& roots) {
  IntPoly out = constant(1);
  for (const auto& r : roots) out = out * IntPoly(std::vector<BigInt>{-r, 1});
  return out;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::leading() const {
  require(!is_zero(), Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPoly::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + BigInt(-1) * b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return IntPoly(std::move(out));
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    BigInt c = f.coeff(i);
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }

}  // namespace flatcyc
