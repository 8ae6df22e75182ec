#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace flatcyc {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt powmod(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

/// Canonical representative in [0, m).
BigInt mod(const BigInt& a, const BigInt& m);

/// Deterministic Miller-Rabin for 64-bit inputs; larger inputs fall back to a
/// GMP probabilistic test with 50 rounds.
bool is_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

/// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
int legendre(const BigInt& a, const BigInt& p);

/// Largest e with p^e | n, for n != 0.
unsigned long valuation(const BigInt& n, const BigInt& p);

/// Exponent e with n == p^e, or -1 when n is not a power of p.
long exact_log(const BigInt& n, const BigInt& p);

BigInt factorial(unsigned long n);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

std::uint64_t to_u64(const BigInt& v);
long to_long(const BigInt& v);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace flatcyc
