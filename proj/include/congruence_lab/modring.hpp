#pragma once

// Exact integer/rational arithmetic and reduction into Z/p^e.
//
// Integers and rationals are GMP values. A Rational is always kept in
// canonical form (positive denominator, gcd(num, den) = 1); every GMP
// arithmetic operator re-canonicalizes its result.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "congruence_lab/error.hpp"

namespace congruence_lab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n) noexcept;

/// p^e as an arbitrary-precision integer.
Integer int_pow(std::uint64_t p, unsigned e);

/// Z/p^r for an odd prime p and r >= 1.
class Modulus {
 public:
  Modulus(std::uint64_t p, unsigned r);

  std::uint64_t prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return r_; }
  const Integer& value() const noexcept { return m_; }

  /// Auxiliary power p^e of the same prime (lemma checks need up to p^{2r+2}).
  Integer power(unsigned e) const { return int_pow(p_, e); }

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.p_ == b.p_ && a.r_ == b.r_;
  }

 private:
  std::uint64_t p_;
  unsigned r_;
  Integer m_;
};

/// An element of Z/modulus, value in [0, modulus).
struct Residue {
  Integer value;
  Integer modulus;

  /// Reduces an arbitrary integer into [0, modulus).
  static Residue of(const Integer& x, const Integer& modulus);
  static Residue zero(const Integer& modulus) { return Residue{0, modulus}; }

  bool is_zero() const { return value == 0; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.modulus == b.modulus && a.value == b.value;
  }
};

// Arithmetic on residues; mixing moduli throws ModulusMismatch.
Residue operator+(const Residue& a, const Residue& b);
Residue operator-(const Residue& a, const Residue& b);
Residue operator-(const Residue& a);
Residue operator*(const Residue& a, const Residue& b);
Residue operator*(const Residue& a, const Integer& k);

/// v with a*v = 1 (mod modulus). Throws NonInvertible if gcd(a, modulus) != 1.
Residue mod_inverse(const Integer& a, const Integer& modulus);

/// Largest e with p^e | x. Throws ZeroInput for x = 0.
unsigned p_valuation(const Integer& x, std::uint64_t p);

/// v_p(num) - v_p(den) of a nonzero rational.
long p_valuation(const Rational& q, std::uint64_t p);

/// num/den in lowest terms with den > 0. Throws ZeroDenominator.
Rational normalize(const Integer& num, const Integer& den);

/// num * den^{-1} mod p^e. Throws NotPAdicInteger when p divides the reduced
/// denominator. A numerator divisible by p is fine and may give 0.
Residue reduce_rational(const Rational& q, std::uint64_t p, unsigned e);
Residue reduce_rational(const Rational& q, const Modulus& modulus);

/// Reduction into Z/m for an arbitrary modulus m >= 1 (den must be a unit).
Residue reduce_rational_mod(const Rational& q, const Integer& m);

std::string to_string(const Integer& x);
std::string to_string(const Rational& q);

namespace detail {

// Machine-word helpers used by the hot loops once the modulus fits.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// Inverse of a modulo m via extended Euclid; returns 0 when not invertible.
std::uint64_t inverse_u64(std::uint64_t a, std::uint64_t m) noexcept;

/// True when the value fits in a uint64 with headroom for sums of two residues.
bool fits_word(const Integer& m);

std::uint64_t to_u64(const Integer& x);

}  // namespace detail

}  // namespace congruence_lab
