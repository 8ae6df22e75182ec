#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatcyc/int_poly.hpp"
#include "flatcyc/ring.hpp"

namespace flatcyc {

struct Exclusions {
  bool discriminant = true;    // p | disc(χ)
  bool chi_pm_one = true;      // p | χ(1) or p | χ(-1)
  std::vector<BigInt> denominators;  // p dividing any of these
};

struct PrimeVerdict {
  BigInt p;
  int class_mod_40 = 0;
  bool three_mod_four = false;
  bool splits_completely = false;
  bool square_free_mod_p = false;
  std::size_t root_count = 0;
  // Splitting persists to every p^j by Hensel once the roots are simple.
  bool hensel_stable = false;
  std::optional<SplitType> field_split;  // Hilbert case only
  std::vector<std::string> fired;        // exclusion rules that fired
  std::optional<std::string> excluded;   // first fired rule

  bool good() const { return splits_completely && !excluded; }
};

/// Root count of χ modulo p decides the splitting flags, then the requested
/// exclusion rules are evaluated. Throws BadPrime (p not an odd prime),
/// BadLeadingCoefficient.
PrimeVerdict classify_prime_for_poly(const IntPoly& chi, const BigInt& p, const Exclusions& ex = {});

struct Mod40Entry {
  std::uint64_t p;
  int cls;
  bool three_mod_four;
};

/// Primes <= limit with p mod 40 in {1, 9, 31, 39}. Throws InvalidArgument for limit < 2.
std::vector<Mod40Entry> mod40_sieve(std::uint64_t limit);
bool in_mod40_classes(std::uint64_t p);

struct ResidueCheck {
  int leg2;
  int leg5;
  bool splits;  // both +1
};

/// (2|p), (5|p) by Euler's criterion. Throws BadPrime for p = 2, 5 or composite p.
ResidueCheck quadratic_residue_check(const BigInt& p);

enum class CaseKind { SL, Hilbert, SO };

struct CaseSpec {
  CaseKind kind = CaseKind::SO;
  IntPoly torus;          // SL and Hilbert: polynomial whose roots give the torus
  BigInt field_m = 2;     // Hilbert: F = Q(√m)
  int blocks = 1;         // SO: m in A = B ⊕ ... ⊕ B^m
};

/// χ_B = x^4 - 18x^3 + 43x^2 - 18x + 1.
IntPoly chi_B();

/// SO predicate for one prime: p ≡ 3 mod 4, χ_B split and unexcluded, and the
/// eigenvalues λ^k (k <= m) of B, ..., B^m pairwise distinct and != ±1 mod p.
PrimeVerdict so_prime_verdict(const BigInt& p, int blocks);

/// Hilbert predicate: 𝔭 | p unramified in Q(√m) and the torus polynomial
/// square-free and split over O_F/𝔭 (F_p or F_{p^2}).
PrimeVerdict hilbert_prime_verdict(const BigInt& p, const BigInt& m, const IntPoly& torus);

/// Odd primes p <= limit passing every predicate of the case, ordered by p.
std::vector<PrimeVerdict> good_primes_for_case(const CaseSpec& spec, std::uint64_t limit);

std::string to_string(CaseKind k);

}  // namespace flatcyc
