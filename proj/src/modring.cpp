#include "congruence_lab/modring.hpp"

#include <utility>

namespace congruence_lab {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonInvertible: return "NonInvertible";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NotPAdicInteger: return "NotPAdicInteger";
    case Errc::NotPIntegral: return "NotPIntegral";
    case Errc::NotCommonMultiple: return "NotCommonMultiple";
    case Errc::InvalidWeights: return "InvalidWeights";
    case Errc::PNotDivisor: return "PNotDivisor";
    case Errc::ExactPowerViolated: return "ExactPowerViolated";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::NonInvertibleTerm: return "NonInvertibleTerm";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::PDividesM: return "PDividesM";
    case Errc::PDividesS: return "PDividesS";
    case Errc::UnknownLemma: return "UnknownLemma";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer int_pow(std::uint64_t p, unsigned e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, e);
  return out;
}

Modulus::Modulus(std::uint64_t p, unsigned r) : p_(p), r_(r) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw Error(Errc::PreconditionViolated, "modulus prime must be an odd prime, got " + std::to_string(p));
  }
  if (r < 1) {
    throw Error(Errc::PreconditionViolated, "modulus exponent must be >= 1");
  }
  m_ = int_pow(p, r);
}

Residue Residue::of(const Integer& x, const Integer& modulus) {
  if (modulus < 1) throw Error(Errc::PreconditionViolated, "residue modulus must be >= 1");
  Integer v;
  mpz_fdiv_r(v.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return Residue{std::move(v), modulus};
}

namespace {

void require_same(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus) {
    throw Error(Errc::ModulusMismatch, to_string(a.modulus) + " vs " + to_string(b.modulus));
  }
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue::of(a.value + b.value, a.modulus);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue::of(a.value - b.value, a.modulus);
}

Residue operator-(const Residue& a) { return Residue::of(-a.value, a.modulus); }

Residue operator*(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue::of(a.value * b.value, a.modulus);
}

Residue operator*(const Residue& a, const Integer& k) { return Residue::of(a.value * k, a.modulus); }

Residue mod_inverse(const Integer& a, const Integer& modulus) {
  if (modulus < 2) throw Error(Errc::PreconditionViolated, "inverse modulus must be >= 2");
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw Error(Errc::NonInvertible, to_string(a) + " mod " + to_string(modulus));
  }
  return Residue::of(inv, modulus);
}

unsigned p_valuation(const Integer& x, std::uint64_t p) {
  if (x == 0) throw Error(Errc::ZeroInput, "valuation of zero");
  if (p < 2) throw Error(Errc::PreconditionViolated, "valuation base must be >= 2");
  Integer rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), Integer(p).get_mpz_t()));
}

long p_valuation(const Rational& q, std::uint64_t p) {
  return static_cast<long>(p_valuation(q.get_num(), p)) - static_cast<long>(p_valuation(q.get_den(), p));
}

Rational normalize(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::ZeroDenominator, to_string(num) + "/0");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Residue reduce_rational_mod(const Rational& q, const Integer& m) {
  if (m == 1) return Residue::zero(1);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(Errc::NotPAdicInteger, "denominator of " + to_string(q) + " not invertible mod " + to_string(m));
  }
  return Residue::of(q.get_num() * inv, m);
}

Residue reduce_rational(const Rational& q, std::uint64_t p, unsigned e) {
  if (q.get_den() % p == 0) {
    throw Error(Errc::NotPAdicInteger, to_string(q) + " at p=" + std::to_string(p));
  }
  return reduce_rational_mod(q, int_pow(p, e));
}

Residue reduce_rational(const Rational& q, const Modulus& modulus) {
  return reduce_rational(q, modulus.prime(), modulus.exponent());
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace detail {

std::uint64_t inverse_u64(std::uint64_t a, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  // Signed extended Euclid on 128-bit intermediates.
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::swap(t, new_t);
    new_t -= q * t;
    std::swap(r, new_r);
    new_r -= q * r;
  }
  if (r != 1) return 0;
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool fits_word(const Integer& m) { return mpz_sizeinbase(m.get_mpz_t(), 2) <= 62; }

std::uint64_t to_u64(const Integer& x) { return mpz_get_ui(x.get_mpz_t()); }

}  // namespace detail

}  // namespace congruence_lab
