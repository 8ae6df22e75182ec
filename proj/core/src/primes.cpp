#include "flatcyc/primes.hpp"

#include <set>

#include "flatcyc/poly.hpp"

namespace flatcyc {

namespace {

void require_odd_prime(const BigInt& p) {
  require(p > 2 && is_prime(p), Errc::BadPrime, to_string(p) + " is not an odd prime");
}

int mod_small(const BigInt& p, unsigned long m) { return static_cast<int>(mpz_fdiv_ui(p.get_mpz_t(), m)); }

}  // namespace

PrimeVerdict classify_prime_for_poly(const IntPoly& chi, const BigInt& p, const Exclusions& ex) {
  require_odd_prime(p);
  require(!chi.is_zero() && mod(chi.leading(), p) != 0, Errc::BadLeadingCoefficient,
          "leading coefficient vanishes modulo " + to_string(p));
  PrimeVerdict v;
  v.p = p;
  v.class_mod_40 = mod_small(p, 40);
  v.three_mod_four = mod_small(p, 4) == 3;
  const auto roots = roots_mod(chi, ResidueRing::integers_mod(PrimePower::make(p, 1)));
  v.root_count = roots.roots.size();
  v.square_free_mod_p = roots.square_free;
  v.splits_completely = roots.splits_completely;
  v.hensel_stable = roots.square_free;
  auto fire = [&](const std::string& rule) { v.fired.push_back(rule); };
  if (ex.chi_pm_one) {
    if (mod(chi(BigInt(1)), p) == 0) fire("chi(1)");
    if (mod(chi(BigInt(-1)), p) == 0) fire("chi(-1)");
  }
  if (ex.discriminant && chi.degree() >= 1 && mod(discriminant(chi), p) == 0) fire("discriminant");
  for (const auto& d : ex.denominators)
    if (mod(d, p) == 0) {
      fire("denominator " + to_string(d));
      break;
    }
  if (!v.fired.empty()) v.excluded = v.fired.front();
  return v;
}

bool in_mod40_classes(std::uint64_t p) {
  const auto c = p % 40;
  return c == 1 || c == 9 || c == 31 || c == 39;
}

std::vector<Mod40Entry> mod40_sieve(std::uint64_t limit) {
  require(limit >= 2, Errc::InvalidArgument, "sieve limit must be >= 2");
  std::vector<Mod40Entry> out;
  for (auto p : primes_up_to(limit))
    if (in_mod40_classes(p)) out.push_back({p, static_cast<int>(p % 40), p % 4 == 3});
  return out;
}

ResidueCheck quadratic_residue_check(const BigInt& p) {
  require(p > 2 && p != 5 && is_prime(p), Errc::BadPrime, to_string(p) + " must be an odd prime other than 5");
  ResidueCheck r{legendre(2, p), legendre(5, p), false};
  r.splits = r.leg2 == 1 && r.leg5 == 1;
  return r;
}

IntPoly chi_B() { return IntPoly{1, -18, 43, -18, 1}; }

PrimeVerdict so_prime_verdict(const BigInt& p, int blocks) {
  require(blocks >= 1, Errc::InvalidArgument, "block count must be >= 1");
  PrimeVerdict v = classify_prime_for_poly(chi_B(), p);
  if (!v.three_mod_four) v.fired.push_back("p mod 4 != 3");
  if (v.splits_completely) {
    const ResidueRing F = ResidueRing::integers_mod(PrimePower::make(p, 1));
    std::set<BigInt> seen;
    bool distinct = true;
    const auto roots = roots_mod(chi_B(), F);
    for (int k = 1; k <= blocks && distinct; ++k) {
      for (const auto& r : roots.roots) {
        const BigInt value = F.scalar(F.pow(r, static_cast<unsigned long>(k)));
        if (value == 1 || value == p - 1 || !seen.insert(value).second) distinct = false;
      }
    }
    if (!distinct) v.fired.push_back("repeated eigenvalue among B^1..B^m");
  }
  if (!v.excluded && !v.fired.empty()) v.excluded = v.fired.front();
  return v;
}

PrimeVerdict hilbert_prime_verdict(const BigInt& p, const BigInt& m, const IntPoly& torus) {
  require_odd_prime(p);
  require(!torus.is_zero() && mod(torus.leading(), p) != 0, Errc::BadLeadingCoefficient,
          "leading coefficient vanishes modulo " + to_string(p));
  PrimeVerdict v;
  v.p = p;
  v.class_mod_40 = mod_small(p, 40);
  v.three_mod_four = mod_small(p, 4) == 3;
  const SplitType t = split_type(m, p);
  v.field_split = t;
  if (t == SplitType::Ramified) {
    v.fired.push_back("ramified in F");
    v.excluded = v.fired.front();
    return v;
  }
  const ResidueRing field = QuadraticPrime::make(m, p).local_ring(1);
  const auto roots = roots_mod(torus, field);
  v.root_count = roots.roots.size();
  v.square_free_mod_p = roots.square_free;
  v.splits_completely = roots.splits_completely;
  v.hensel_stable = roots.square_free;
  if (mod(discriminant(torus), p) == 0) v.fired.push_back("discriminant");
  if (!v.fired.empty()) v.excluded = v.fired.front();
  return v;
}

std::vector<PrimeVerdict> good_primes_for_case(const CaseSpec& spec, std::uint64_t limit) {
  std::vector<PrimeVerdict> out;
  for (auto q : primes_up_to(limit)) {
    if (q == 2) continue;
    const BigInt p(std::to_string(q));
    PrimeVerdict v;
    switch (spec.kind) {
      case CaseKind::SL: {
        if (mod(spec.torus.leading(), p) == 0) continue;
        if (distinct_root_count(spec.torus, ResidueRing::integers_mod(PrimePower::make(p, 1))) !=
            spec.torus.degree())
          continue;
        Exclusions ex;
        ex.chi_pm_one = false;
        v = classify_prime_for_poly(spec.torus, p, ex);
        break;
      }
      case CaseKind::Hilbert:
        if (mod(spec.torus.leading(), p) == 0) continue;
        if (split_type(spec.field_m, p) != SplitType::Ramified &&
            distinct_root_count(spec.torus, QuadraticPrime::make(spec.field_m, p).local_ring(1)) !=
                spec.torus.degree())
          continue;
        v = hilbert_prime_verdict(p, spec.field_m, spec.torus);
        break;
      case CaseKind::SO:
        v = so_prime_verdict(p, spec.blocks);
        break;
    }
    if (v.good()) out.push_back(std::move(v));
  }
  return out;
}

std::string to_string(CaseKind k) {
  switch (k) {
    case CaseKind::SL:
      return "SL";
    case CaseKind::Hilbert:
      return "Hilbert";
    case CaseKind::SO:
      return "SO";
  }
  return "?";
}

}  // namespace flatcyc
