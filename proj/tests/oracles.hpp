#pragma once

// Independent reference computations for the tests. Nothing here calls into the
// library; each routine takes a different route to the same numbers.

#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Inverse of a modulo p^e by Euler's theorem: a^(phi(p^e) - 1).
inline mpz_class inverse_prime_power(const mpz_class& a, std::uint64_t p, unsigned e) {
  mpz_class m, phi, out;
  mpz_ui_pow_ui(m.get_mpz_t(), p, e);
  mpz_ui_pow_ui(phi.get_mpz_t(), p, e - 1);
  phi *= p - 1;
  mpz_class base = a % m;
  if (base < 0) base += m;
  mpz_class exponent = phi - 1;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  return out;
}

inline mpz_class reduce(const mpq_class& q, std::uint64_t p, unsigned e) {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), p, e);
  mpz_class out = q.get_num() * inverse_prime_power(q.get_den(), p, e);
  out %= m;
  if (out < 0) out += m;
  return out;
}

/// The triple sum by the most literal enumeration: every (i, j) and the forced k.
inline mpq_class triple_sum(std::uint64_t a1, std::uint64_t a2, std::uint64_t a3, std::uint64_t A, std::uint64_t n) {
  const std::uint64_t t = A * n;
  mpq_class acc = 0;
  for (std::uint64_t i = 1; a1 * i < t; ++i) {
    for (std::uint64_t j = 1; a1 * i + a2 * j < t; ++j) {
      const std::uint64_t rest = t - a1 * i - a2 * j;
      if (rest % a3 != 0) continue;
      const std::uint64_t k = rest / a3;
      if (std::gcd(i, n) != 1 || std::gcd(j, n) != 1 || std::gcd(k, n) != 1) continue;
      acc += mpq_class(1, mpz_class(i) * j * k);
    }
  }
  acc.canonicalize();
  return acc;
}

/// Akiyama-Tanigawa; produces B_1 = +1/2, so the sign of index 1 is flipped.
inline std::vector<mpq_class> bernoulli(std::size_t max_index) {
  std::vector<mpq_class> out, a(max_index + 1);
  for (std::size_t m = 0; m <= max_index; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (std::size_t j = m; j >= 1; --j) {
      a[j - 1] = mpq_class(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  if (max_index >= 1) out[1] = -out[1];
  return out;
}

/// For even m with (p - 1) not dividing m: sum_{j<p} j^m = p B_m (mod p^2).
inline std::uint64_t bernoulli_mod_p_powersum(std::uint64_t m, std::uint64_t p) {
  const std::uint64_t p2 = p * p;
  std::uint64_t s = 0;
  for (std::uint64_t j = 1; j < p; ++j) {
    std::uint64_t pw = 1;
    for (std::uint64_t k = 0; k < m; ++k) pw = pw * j % p2;
    s = (s + pw) % p2;
  }
  return s / p;
}

/// Schoolbook product of coefficient lists modulo m, truncated to `length`.
inline std::vector<std::uint64_t> poly_mul(const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v,
                                           std::uint64_t m, std::size_t length) {
  std::vector<std::uint64_t> out(length, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size() && i + j < length; ++j) out[i + j] = (out[i + j] + u[i] * v[j]) % m;
  }
  return out;
}

/// sum of 1/i over i in [lo, hi] with i = ell (mod step) and p not | i, accumulated mod p^e.
inline mpz_class progression_inverse_sum(std::uint64_t hi, std::uint64_t step, std::uint64_t ell, std::uint64_t p,
                                         unsigned e) {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), p, e);
  mpz_class acc = 0;
  for (std::uint64_t i = 1; i <= hi; ++i) {
    if (i % step != ell % step || i % p == 0) continue;
    acc = (acc + inverse_prime_power(mpz_class(i), p, e)) % m;
  }
  return acc;
}

}  // namespace oracle
