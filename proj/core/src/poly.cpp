#include "flatcyc/poly.hpp"

#include <algorithm>
#include <set>

namespace flatcyc {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_of(const Rational& v) { return sgn(v); }

}  // namespace

std::vector<std::vector<Rational>> sturm_chain(const IntPoly& f) {
  require(!f.is_zero(), Errc::ZeroPolynomial, "Sturm chain of the zero polynomial");
  std::vector<RatPoly> chain;
  RatPoly p0, p1;
  for (const auto& c : f.coefficients()) p0.emplace_back(c);
  const IntPoly df = f.derivative();
  for (const auto& c : df.coefficients()) p1.emplace_back(c);
  chain.push_back(p0);
  if (p1.empty()) return chain;
  chain.push_back(p1);
  while (true) {
    RatPoly r = rat_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int real_root_count(const IntPoly& f) {
  const auto chain = sturm_chain(f);
  std::vector<int> at_neg, at_pos;
  for (const auto& q : chain) {
    const int lead = sign_of(q.back());
    const int deg = static_cast<int>(q.size()) - 1;
    at_pos.push_back(lead);
    at_neg.push_back(deg % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

PolyaVerdict polya_certificate(const IntPoly& f, const PolyaWitness& w) {
  const int d = f.degree();
  require(d >= 1, Errc::InvalidArgument, "Polya certificate needs degree >= 1");
  require(w.points.size() == static_cast<std::size_t>(d), Errc::WitnessCountMismatch,
          "expected " + std::to_string(d) + " witness points, got " + std::to_string(w.points.size()));
  std::set<BigInt> seen;
  for (const auto& b : w.points)
    require(seen.insert(b).second, Errc::DuplicateWitness, "witness " + to_string(b) + " repeated");
  const unsigned long k = static_cast<unsigned long>(d + 1) / 2;
  const BigInt kfact = factorial(k);
  const BigInt two_k = flatcyc::pow(BigInt(2), k);
  for (const auto& b : w.points) {
    const BigInt v = abs(BigInt(f(b)));
    if (v == 0 || v * two_k >= kfact) return PolyaVerdict::Inconclusive;
  }
  return PolyaVerdict::Irreducible;
}

IntPoly xi_family(const std::vector<BigInt>& a) {
  require(a.size() >= 6, Errc::TooFewPoints, "need at least six points, got " + std::to_string(a.size()));
  BigInt prev = 0;
  for (const auto& ai : a) {
    require(ai - prev > 2, Errc::GapTooSmall, "gap " + to_string(BigInt(ai - prev)) + " before " + to_string(ai));
    prev = ai;
  }
  IntPoly prod = IntPoly::x() * IntPoly::from_roots(a);
  return prod + IntPoly::constant(1);
}

PolyaWitness xi_family_witness(const std::vector<BigInt>& a) {
  PolyaWitness w;
  w.points.push_back(0);
  w.points.insert(w.points.end(), a.begin(), a.end());
  return w;
}

IntMatrix companion_matrix(const IntPoly& f) {
  require(f.is_monic(), Errc::NotMonic, "companion matrix needs a monic polynomial");
  const int d = f.degree();
  require(d >= 1, Errc::InvalidArgument, "companion matrix needs degree >= 1");
  IntMatrix C(d, d, BigInt(0));
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) C(i, d - 1) = -f.coeff(i);
  return C;
}

IntPoly char_poly(const IntMatrix& A) { return IntPoly(berkowitz(IntegerRing{}, A)); }

namespace {

using FieldPoly = std::vector<RingElement>;

void trim(const ResidueRing& F, FieldPoly& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

FieldPoly make_monic(const ResidueRing& F, FieldPoly a) {
  const auto inv = F.invert(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

FieldPoly poly_gcd(const ResidueRing& F, FieldPoly a, FieldPoly b) {
  while (!b.empty()) {
    auto r = poly_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : make_monic(F, std::move(a));
}

FieldPoly poly_powmod(const ResidueRing& F, FieldPoly base, BigInt e, const FieldPoly& m) {
  FieldPoly result = poly_rem(F, FieldPoly{F.one()}, m);
  base = poly_rem(F, std::move(base), m);
  for (; e > 0; e >>= 1) {
    if (mpz_odd_p(e.get_mpz_t())) result = poly_mulmod(F, result, base, m);
    base = poly_mulmod(F, base, base, m);
  }
  return result;
}

FieldPoly poly_quotient(const ResidueRing& F, FieldPoly a, const FieldPoly& b) {
  FieldPoly q(a.size() - b.size() + 1, F.zero());
  const auto lead_inv = F.invert(b.back());
  while (a.size() >= b.size()) {
    const auto factor = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(factor, b[i]));
    a.pop_back();
  }
  return q;
}

// Product of distinct linear factors: gcd(f, x^q - x).
FieldPoly split_part(const ResidueRing& F, const FieldPoly& f) {
  FieldPoly h = poly_powmod(F, {F.zero(), F.one()}, F.cardinality(), f);
  if (h.size() < 2) h.resize(2, F.zero());
  h[1] = F.sub(h[1], F.one());
  trim(F, h);
  return h.empty() ? f : poly_gcd(F, f, h);
}

// Equal-degree splitting of a monic squarefree product of linear factors.
void collect_roots(const ResidueRing& F, const FieldPoly& g, std::vector<RingElement>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(F.neg(g[0]));
    return;
  }
  const BigInt half = (F.cardinality() - 1) / 2;
  for (BigInt shift = 0; shift < F.cardinality(); ++shift) {
    FieldPoly h = poly_powmod(F, {F.element_at(shift), F.one()}, half, g);
    if (h.empty()) continue;
    h[0] = F.sub(h[0], F.one());
    trim(F, h);
    if (h.empty()) continue;
    const FieldPoly d = poly_gcd(F, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      collect_roots(F, d, out);
      collect_roots(F, poly_quotient(F, g, d), out);
      return;
    }
  }
  fail(Errc::InvalidArgument, "root splitting did not terminate");
}

}  // namespace

RootsModResult roots_mod(const IntPoly& f, const ResidueRing& field) {
  require(field.is_field(), Errc::InvalidArgument, "roots_mod works over the residue field (j = 1)");
  require(!f.is_zero() && field.is_unit(field.from_int(f.leading())), Errc::LeadingCoeffVanishes,
          "leading coefficient vanishes modulo p");
  RootsModResult out;
  const auto fbar = reduce_poly(field, f);
  if (fbar.size() > 1) {
    if (mpz_even_p(field.cardinality().get_mpz_t())) {
      for (BigInt i = 0; i < field.cardinality(); ++i) {
        auto x = field.element_at(i);
        if (field.is_zero(evaluate(field, f, x))) out.roots.push_back(std::move(x));
      }
    } else {
      collect_roots(field, split_part(field, make_monic(field, fbar)), out.roots);
      std::sort(out.roots.begin(), out.roots.end(), [&](const RingElement& a, const RingElement& b) {
        return field.index_of(a) < field.index_of(b);
      });
    }
  }
  const auto dbar = reduce_poly(field, f.derivative());
  out.square_free = poly_gcd_degree(field, fbar, dbar) == 0;
  out.splits_completely = out.square_free && static_cast<int>(out.roots.size()) == f.degree();
  return out;
}

int distinct_root_count(const IntPoly& f, const ResidueRing& field) {
  require(field.is_field(), Errc::InvalidArgument, "root count works over the residue field (j = 1)");
  auto fbar = reduce_poly(field, f);
  require(!fbar.empty() && fbar.size() == f.coefficients().size(), Errc::LeadingCoeffVanishes,
          "leading coefficient vanishes modulo p");
  if (fbar.size() == 1) return 0;
  const auto lead_inv = field.invert(fbar.back());
  for (auto& c : fbar) c = field.mul(c, lead_inv);
  using Poly = std::vector<RingElement>;
  Poly result{field.one()};
  Poly base{field.zero(), field.one()};
  base = poly_rem(field, base, fbar);
  for (BigInt e = field.cardinality(); e > 0; e >>= 1) {
    if (mpz_odd_p(e.get_mpz_t())) result = poly_mulmod(field, result, base, fbar);
    base = poly_mulmod(field, base, base, fbar);
  }
  // x^q - x mod f
  Poly h = result;
  if (h.size() < 2) h.resize(2, field.zero());
  h[1] = field.sub(h[1], field.one());
  while (!h.empty() && field.is_zero(h.back())) h.pop_back();
  if (h.empty()) return fbar.size() - 1;
  return poly_gcd_degree(field, fbar, h);
}

RingElement hensel_lift_root(const IntPoly& f, const ResidueRing& ring, const RingElement& r) {
  const ResidueRing field = ring.residue_field();
  const RingElement r1 = field.from_coeffs(r.c);
  require(field.is_zero(evaluate(field, f, r1)), Errc::InvalidArgument, "starting point is not a root modulo p");
  const IntPoly df = f.derivative();
  require(field.is_unit(evaluate(field, df, r1)), Errc::NotSimpleRoot, "derivative vanishes at the root modulo p");
  RingElement x = ring.lift(r1);
  // Quadratic convergence: precision doubles per step.
  for (int step = 0, prec = 1; step < 64; ++step, prec *= 2) {
    const auto fx = evaluate(ring, f, x);
    if (ring.is_zero(fx)) return x;
    x = ring.sub(x, ring.mul(fx, ring.invert(evaluate(ring, df, x))));
    if (prec > 2 * ring.j()) break;
  }
  fail(Errc::InvalidArgument, "Newton iteration failed to converge");
}

BigInt hensel_lift_root(const IntPoly& f, const PrimePower& base, const BigInt& r) {
  const ResidueRing ring = ResidueRing::integers_mod(base);
  return ring.scalar(hensel_lift_root(f, ring, ring.from_int(r)));
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  require(!f.is_zero() && !g.is_zero(), Errc::ZeroPolynomial, "resultant with the zero polynomial");
  const int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) return flatcyc::pow(f.leading(), static_cast<unsigned long>(n));
  if (n == 0) return flatcyc::pow(g.leading(), static_cast<unsigned long>(m));
  const std::size_t size = static_cast<std::size_t>(m + n);
  IntMatrix S(size, size, BigInt(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) S(i, i + k) = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) S(n + i, i + k) = g.coeff(n - k);
  return determinant(IntegerRing{}, S);
}

BigInt discriminant(const IntPoly& f) {
  const int d = f.degree();
  require(d >= 1, Errc::InvalidArgument, "discriminant needs degree >= 1");
  BigInt res = resultant(f, f.derivative());
  BigInt q = res / f.leading();
  if ((d * (d - 1) / 2) % 2 == 1) q = -q;
  return q;
}

}  // namespace flatcyc
