#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <optional>
#include <string>

#include "flatcyc/matrix.hpp"
#include "flatcyc/primes.hpp"

namespace flatcyc {

/// Decimal float with 60 digits of working precision; κ values are reported to 50.
using HighFloat = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<60>>;
inline constexpr int kKappaDigits = 50;
std::string format_high(const HighFloat& x, int digits = kKappaDigits);

/// Pairing between S (rows) and S* (columns) with exact rational entries.
struct PairingInstance {
  RatMatrix pairing;
  std::size_t t = 1;
};

struct XueResult {
  Rational bound;     // |S*| / t
  std::size_t rank;   // rank of the pairing matrix
  bool holds() const { return Rational(static_cast<unsigned long>(rank)) >= bound; }
};

/// Checks both hypotheses, then reports |S*|/t next to the exact rank.
/// Throws HypothesisOneViolated (a zero column), HypothesisTwoViolated (a row
/// with more than t nonzero entries), InvalidArgument (t = 0).
XueResult xue_bound(const PairingInstance& inst);

/// Parse whitespace-separated rationals, one row per line ('#' starts a comment).
RatMatrix parse_rational_matrix(const std::string& text);

/// |W| / (c |W1| |W2|). Throws ZeroDenominator, InvalidArgument (nonpositive input).
Rational mrt_bound(const BigInt& W, const BigInt& W1, const BigInt& W2, const BigInt& c);

struct TowerSpec {
  CaseKind kind = CaseKind::SL;
  int n = 2;          // SL: SL_{n+1}; SO: Q_n with n = 2m; Hilbert: unused (SL_2)
  BigInt p = 7;
  int k = 1;
  int l = 2;
  BigInt c = 1;
  BigInt field_m = 2;                  // Hilbert: F = Q(√m)
  std::optional<IntPoly> torus;        // SL, Hilbert: checked against p when given
  std::optional<BigInt> split_root;    // Hilbert, split p: which prime above p
};

/// Throws InvalidArgument on malformed data and BadPrimeForCase when p fails
/// the case predicate.
void validate(const TowerSpec& spec);

struct TowerOrders {
  BigInt W, W1, W2;
  BigInt base_constant;  // |G(level k)|, so that volume_proxy = |W| · base_constant
};

TowerOrders tower_orders(const TowerSpec& spec);

struct KappaResult {
  std::string exponent;                       // exact rational for SL/Hilbert, formula value for SO
  std::optional<Rational> exponent_exact;     // SL, Hilbert
  std::optional<HighFloat> kappa_printed;     // SO: the closed form as printed
  std::optional<Rational> kappa_kernel;       // exponent from this library's orders
  std::optional<HighFloat> log_bound;         // SO: (n - 1 - log_p 3) / n^2
};

KappaResult kappa(const TowerSpec& spec);

/// Exponent of the orders alone: (log W - log W1 - log W2) / log W when all
/// three are powers of the same base; nullopt otherwise (including k = l).
std::optional<Rational> kappa_from_orders(const TowerOrders& o, const BigInt& base);

struct GrowthReport {
  TowerSpec spec;
  TowerOrders orders;
  Rational bound;
  BigInt volume_proxy;
  KappaResult kappa;
  std::optional<HighFloat> kappa_difference;  // SO: printed - kernel
  std::string case_label;
};

/// tower_orders + mrt_bound + kappa, with bound · c · W1 · W2 == W asserted.
GrowthReport growth_report(const TowerSpec& spec);

/// Exact log_p of a power of p as a Rational-friendly integer, or nullopt.
std::optional<long> log_exact(const BigInt& value, const BigInt& base);

std::string case_label(const TowerSpec& spec);

}  // namespace flatcyc
