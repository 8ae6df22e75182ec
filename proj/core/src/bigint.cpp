#include "flatcyc/bigint.hpp"

#include "flatcyc/error.hpp"

namespace flatcyc {

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt powmod(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  require(sgn(modulus) > 0, Errc::InvalidArgument, "powmod: modulus must be positive");
  require(sgn(exponent) >= 0, Errc::InvalidArgument, "powmod: negative exponent");
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a complete witness set below 3.18e23, which covers 64 bits.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (sgn(n) <= 0) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

int legendre(const BigInt& a, const BigInt& p) {
  require(p > 2 && is_prime(p), Errc::BadPrime, "legendre: p must be an odd prime");
  BigInt r = mod(a, p);
  if (r == 0) return 0;
  BigInt e = powmod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

unsigned long valuation(const BigInt& n, const BigInt& p) {
  require(n != 0, Errc::InvalidArgument, "valuation of zero");
  BigInt m = abs(n);
  unsigned long e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++e;
  }
  return e;
}

long exact_log(const BigInt& n, const BigInt& p) {
  if (sgn(n) <= 0 || p < 2) return -1;
  BigInt m = n;
  long e = 0;
  while (m > 1) {
    if (!mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) return -1;
    m /= p;
    ++e;
  }
  return e;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

std::uint64_t to_u64(const BigInt& v) {
  require(sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64, Errc::InvalidArgument,
          "value does not fit in 64 bits: " + v.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

long to_long(const BigInt& v) {
  require(mpz_fits_slong_p(v.get_mpz_t()) != 0, Errc::InvalidArgument, "value does not fit in long: " + v.get_str());
  return v.get_si();
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t k = i * i; k <= limit; k += i) composite[k] = true;
  }
  return out;
}

}  // namespace flatcyc
