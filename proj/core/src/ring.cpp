#include "flatcyc/ring.hpp"

#include "flatcyc/error.hpp"

namespace flatcyc {

PrimePower PrimePower::make(const BigInt& p, int j) {
  require(j >= 1, Errc::InvalidArgument, "prime-power exponent must be >= 1");
  require(is_prime(p), Errc::NonPrime, p.get_str() + " is not prime");
  return PrimePower(p, j);
}

ResidueRing::ResidueRing(PrimePower base, IntPoly g)
    : base_(std::move(base)), g_(std::move(g)), modulus_(base_.value()) {}

ResidueRing ResidueRing::make(const PrimePower& base, const IntPoly& g) {
  require(g.is_monic(), Errc::InvalidArgument, "local polynomial must be monic");
  const int f = g.degree();
  require(f == 1 || f == 2, Errc::UnsupportedResidueDegree, "residue degree must be 1 or 2");
  if (f == 2) {
    // A monic quadratic is irreducible over F_p iff it has no root there.
    for (BigInt r = 0; r < base.p(); ++r) {
      if (mod(g(r), base.p()) == 0) {
        fail(Errc::ReduciblePoly, to_string(g) + " has the root " + r.get_str() + " modulo " + base.p().get_str());
      }
    }
  }
  return ResidueRing(base, g);
}

ResidueRing ResidueRing::integers_mod(const PrimePower& base) { return ResidueRing(base, IntPoly::x()); }

BigInt ResidueRing::cardinality() const { return flatcyc::pow(modulus_, static_cast<unsigned long>(g_.degree())); }

BigInt ResidueRing::residue_field_size() const {
  return flatcyc::pow(base_.p(), static_cast<unsigned long>(g_.degree()));
}

ResidueRing ResidueRing::with_exponent(int k) const { return ResidueRing(base_.with_exponent(k), g_); }

RingElement ResidueRing::canonical(std::vector<BigInt> coeffs) const {
  const std::size_t f = static_cast<std::size_t>(g_.degree());
  // Reduce modulo g first (the inputs here have degree < 2f - 1).
  for (std::size_t k = coeffs.size(); k-- > f;) {
    const BigInt top = coeffs[k];
    if (top == 0) continue;
    for (std::size_t t = 0; t < f; ++t) coeffs[k - f + t] -= top * g_.coeff(static_cast<int>(t));
    coeffs[k] = 0;
  }
  coeffs.resize(f, BigInt(0));
  for (auto& c : coeffs) c = mod(c, modulus_);
  return RingElement{std::move(coeffs)};
}

RingElement ResidueRing::zero() const { return canonical({}); }
RingElement ResidueRing::one() const { return canonical({BigInt(1)}); }
RingElement ResidueRing::from_int(const BigInt& v) const { return canonical({v}); }
RingElement ResidueRing::from_coeffs(std::vector<BigInt> coeffs) const { return canonical(std::move(coeffs)); }
RingElement ResidueRing::generator() const { return canonical({BigInt(0), BigInt(1)}); }

RingElement ResidueRing::add(const Element& a, const Element& b) const {
  std::vector<BigInt> out(a.c.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.c[i] + b.c[i];
  return canonical(std::move(out));
}

RingElement ResidueRing::sub(const Element& a, const Element& b) const {
  std::vector<BigInt> out(a.c.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.c[i] - b.c[i];
  return canonical(std::move(out));
}

RingElement ResidueRing::neg(const Element& a) const {
  std::vector<BigInt> out(a.c.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.c[i];
  return canonical(std::move(out));
}

RingElement ResidueRing::mul(const Element& a, const Element& b) const {
  std::vector<BigInt> out(a.c.size() + b.c.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t k = 0; k < b.c.size(); ++k) out[i + k] += a.c[i] * b.c[k];
  return canonical(std::move(out));
}

RingElement ResidueRing::pow(const Element& a, unsigned long e) const {
  Element result = one();
  Element base = a;
  while (e) {
    if (e & 1UL) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool ResidueRing::is_zero(const Element& a) const {
  for (const auto& c : a.c)
    if (c != 0) return false;
  return true;
}

bool ResidueRing::is_unit(const Element& a) const {
  const BigInt& p = base_.p();
  if (g_.degree() == 1) return mod(a.c[0], p) != 0;
  // Norm of a0 + a1 x in F_p[x]/(x^2 + g1 x + g0): a0^2 - g1 a0 a1 + g0 a1^2.
  const BigInt& a0 = a.c[0];
  const BigInt& a1 = a.c[1];
  BigInt norm = a0 * a0 - g_.coeff(1) * a0 * a1 + g_.coeff(0) * a1 * a1;
  return mod(norm, p) != 0;
}

RingElement ResidueRing::residue_inverse(const Element& a) const {
  const BigInt& p = base_.p();
  if (g_.degree() == 1) {
    BigInt inv;
    BigInt r = mod(a.c[0], p);
    require(mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t()) != 0, Errc::NotAUnit,
            "element lies in the maximal ideal");
    return from_int(inv);
  }
  // (a0 + a1 x)^{-1} = (a0 - g1 a1 - a1 x) / N(a) in the residue field.
  const BigInt& a0 = a.c[0];
  const BigInt& a1 = a.c[1];
  BigInt norm = mod(a0 * a0 - g_.coeff(1) * a0 * a1 + g_.coeff(0) * a1 * a1, p);
  BigInt inv;
  require(mpz_invert(inv.get_mpz_t(), norm.get_mpz_t(), p.get_mpz_t()) != 0, Errc::NotAUnit,
          "element lies in the maximal ideal");
  return from_coeffs({mod((a0 - g_.coeff(1) * a1) * inv, p), mod(-a1 * inv, p)});
}

RingElement ResidueRing::invert(const Element& a) const {
  Element y = residue_inverse(a);
  const Element two = from_int(2);
  // Each step doubles the p-adic precision of y.
  for (int precision = 1; !(mul(a, y) == one()); precision *= 2) {
    require(precision < 2 * base_.j() + 2, Errc::InvalidArgument, "Newton inversion failed to converge");
    y = mul(y, sub(two, mul(a, y)));
  }
  return y;
}

RingElement ResidueRing::reduce(const Element& a, int k) const {
  require(k >= 1 && k <= base_.j(), Errc::InvalidArgument, "reduction exponent out of range");
  BigInt m = flatcyc::pow(base_.p(), static_cast<unsigned long>(k));
  std::vector<BigInt> out = a.c;
  for (auto& c : out) c = mod(c, m);
  return RingElement{std::move(out)};
}

RingElement ResidueRing::lift(const Element& a) const { return canonical(a.c); }

BigInt ResidueRing::index_of(const Element& a) const {
  BigInt idx = 0;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) idx = idx * modulus_ + *it;
  return idx;
}

RingElement ResidueRing::element_at(const BigInt& index) const {
  require(index >= 0 && index < cardinality(), Errc::InvalidArgument, "element index out of range");
  std::vector<BigInt> out;
  BigInt rest = index;
  for (int i = 0; i < g_.degree(); ++i) {
    out.push_back(mod(rest, modulus_));
    rest /= modulus_;
  }
  return RingElement{std::move(out)};
}

const BigInt& ResidueRing::scalar(const Element& a) const {
  require(g_.degree() == 1, Errc::InvalidArgument, "scalar() needs a rational residue ring");
  return a.c[0];
}

BigInt unit_count(const ResidueRing& ring) {
  const auto f = static_cast<unsigned long>(ring.residue_degree());
  const auto j = static_cast<unsigned long>(ring.j());
  return flatcyc::pow(ring.p(), j * f) - flatcyc::pow(ring.p(), (j - 1) * f);
}

BigInt ideal_norm(const PrimePower& base, int residue_degree) {
  require(residue_degree >= 1, Errc::InvalidArgument, "residue degree must be positive");
  return flatcyc::pow(base.p(), static_cast<unsigned long>(base.j()) * static_cast<unsigned long>(residue_degree));
}

namespace {

void check_quadratic_parameter(const BigInt& m) {
  require(m != 0 && m != 1, Errc::InvalidArgument, "Q(sqrt(m)) needs m != 0, 1");
  BigInt r4 = mod(m, 4);
  require(r4 != 1, Errc::InvalidArgument, "m = 1 mod 4 is out of scope (ring of integers is not Z[sqrt m])");
  for (BigInt q = 2; q * q <= abs(m); ++q) {
    require(!mpz_divisible_p(m.get_mpz_t(), BigInt(q * q).get_mpz_t()), Errc::InvalidArgument,
            "m must be squarefree");
  }
}

}  // namespace

SplitType split_type(const BigInt& m, const BigInt& p) {
  check_quadratic_parameter(m);
  require(is_prime(p), Errc::NonPrime, p.get_str() + " is not prime");
  const BigInt disc = 4 * m;
  if (mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t())) return SplitType::Ramified;
  return legendre(disc, p) == 1 ? SplitType::Split : SplitType::Inert;
}

QuadraticIntegers::QuadraticIntegers(BigInt m) : m_(std::move(m)) { check_quadratic_parameter(m_); }

QuadraticPrime QuadraticPrime::make(const BigInt& m, const BigInt& p, std::optional<BigInt> root) {
  const SplitType t = split_type(m, p);
  require(t != SplitType::Ramified, Errc::Ramified, p.get_str() + " ramifies in Q(sqrt " + m.get_str() + ")");
  BigInt r = 0;
  if (t == SplitType::Split) {
    if (root) {
      r = mod(*root, p);
      require(mod(r * r - m, p) == 0, Errc::InvalidArgument, "given root is not a square root of m mod p");
    } else {
      while (mod(r * r - m, p) != 0) ++r;
    }
  }
  return QuadraticPrime(m, p, t, r);
}

ResidueRing QuadraticPrime::local_ring(int j) const {
  const auto base = PrimePower::make(p_, j);
  if (type_ == SplitType::Split) return ResidueRing::integers_mod(base);
  return ResidueRing::make(base, IntPoly(std::vector<BigInt>{-m_, 0, 1}));
}

RingElement QuadraticPrime::embed(const ResidueRing& ring, const QuadraticInt& x) const {
  require(ring.p() == p_ && ring.residue_degree() == residue_degree(), Errc::InvalidArgument,
          "ring does not belong to this prime");
  if (type_ == SplitType::Inert) return ring.from_coeffs({x.a, x.b});
  // Newton-lift the chosen square root of m to p^j.
  RingElement s = ring.from_int(root_);
  const RingElement target = ring.from_int(m_);
  const RingElement two = ring.from_int(2);
  while (!(ring.mul(s, s) == target)) {
    s = ring.sub(s, ring.mul(ring.sub(ring.mul(s, s), target), ring.invert(ring.mul(two, s))));
  }
  return ring.add(ring.from_int(x.a), ring.mul(ring.from_int(x.b), s));
}

std::string to_string(SplitType t) {
  switch (t) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: return "ramified";
  }
  return "?";
}

}  // namespace flatcyc
