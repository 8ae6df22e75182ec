#pragma once

#include <vector>

#include "flatcyc/int_poly.hpp"
#include "flatcyc/matrix.hpp"
#include "flatcyc/ring.hpp"

namespace flatcyc {

/// Number of distinct real roots, exact, from a Sturm chain over Q.
/// Throws ZeroPolynomial.
int real_root_count(const IntPoly& f);

/// Sturm chain f, f', -rem(...), ... with rational coefficients (constant first).
std::vector<std::vector<Rational>> sturm_chain(const IntPoly& f);

/// Distinct integer points b_0..b_{d-1} fed to Polya's irreducibility test.
struct PolyaWitness {
  std::vector<BigInt> points;
};

enum class PolyaVerdict { Irreducible, Inconclusive };

/// Irreducible iff there are deg(f) distinct witnesses with 0 < |f(b)| < k!/2^k,
/// k = floor((d+1)/2). The criterion only certifies irreducibility; failure is
/// reported as Inconclusive, never as reducible.
/// Throws WitnessCountMismatch, DuplicateWitness, InvalidArgument (deg < 1).
PolyaVerdict polya_certificate(const IntPoly& f, const PolyaWitness& w);

/// 1 + x(x - a_1)...(x - a_n) for 0 < a_1 < ... < a_n with gaps > 2 and n >= 6.
/// Throws TooFewPoints, GapTooSmall.
IntPoly xi_family(const std::vector<BigInt>& a);

/// The natural witness set {0, a_1, ..., a_n}, where the family takes the value 1.
PolyaWitness xi_family_witness(const std::vector<BigInt>& a);

/// Companion matrix: ones on the subdiagonal, last column -a_0, ..., -a_{d-1}.
/// Throws NotMonic.
IntMatrix companion_matrix(const IntPoly& f);

/// det(xI - A). Throws NotSquare.
IntPoly char_poly(const IntMatrix& A);

struct RootsModResult {
  std::vector<RingElement> roots;  // distinct, in index order
  bool square_free = false;        // gcd(f, f') = 1 over the residue field
  bool splits_completely = false;  // square_free and #roots == deg f
};

/// Distinct roots over a residue field (ring with j = 1), found by splitting
/// gcd(f, x^q - x).
/// Throws LeadingCoeffVanishes, InvalidArgument (j != 1).
RootsModResult roots_mod(const IntPoly& f, const ResidueRing& field);

/// Newton lift of a simple root r (given modulo 𝔭) to the unique root of f in
/// `ring` reducing to r. Throws NotSimpleRoot, InvalidArgument (r not a root).
RingElement hensel_lift_root(const IntPoly& f, const ResidueRing& ring, const RingElement& r);

/// Rational-case convenience: lift r modulo p to p^j.
BigInt hensel_lift_root(const IntPoly& f, const PrimePower& base, const BigInt& r);

/// Resultant by the Sylvester determinant, and disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f).
BigInt resultant(const IntPoly& f, const IntPoly& g);
BigInt discriminant(const IntPoly& f);

/// Image of f in F[x] (coefficient vectors over the field, constant first, trimmed).
template <class Field>
std::vector<typename Field::Element> reduce_poly(const Field& F, const IntPoly& f) {
  std::vector<typename Field::Element> out;
  for (const auto& c : f.coefficients()) out.push_back(F.from_int(c));
  while (!out.empty() && F.is_zero(out.back())) out.pop_back();
  return out;
}

/// Remainder of a by b over a field (b nonzero).
template <class Field>
std::vector<typename Field::Element> poly_rem(const Field& F, std::vector<typename Field::Element> a,
                                              const std::vector<typename Field::Element>& b) {
  require(!b.empty(), Errc::ZeroPolynomial, "division by the zero polynomial");
  const auto lead_inv = F.invert(b.back());
  while (a.size() >= b.size()) {
    if (F.is_zero(a.back())) {
      a.pop_back();
      continue;
    }
    const auto factor = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(factor, b[i]));
    a.pop_back();
  }
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
  return a;
}

/// Degree of gcd(a, b) over a field; -1 when both are zero.
template <class Field>
int poly_gcd_degree(const Field& F, std::vector<typename Field::Element> a, std::vector<typename Field::Element> b) {
  while (!b.empty()) {
    auto r = poly_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

/// a·b mod m over a field, m monic of positive degree.
template <class Field>
std::vector<typename Field::Element> poly_mulmod(const Field& F, const std::vector<typename Field::Element>& a,
                                                 const std::vector<typename Field::Element>& b,
                                                 const std::vector<typename Field::Element>& m) {
  if (a.empty() || b.empty()) return {};
  std::vector<typename Field::Element> r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return poly_rem(F, std::move(r), m);
}

/// deg gcd(f, x^q - x) over the residue field F_q: the number of distinct roots
/// of f in F_q, without visiting every element.
int distinct_root_count(const IntPoly& f, const ResidueRing& field);

}  // namespace flatcyc
