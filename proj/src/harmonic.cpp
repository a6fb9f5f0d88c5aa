#include "congruence_lab/harmonic.hpp"

#include <numeric>
#include <string>

#include "congruence_lab/bernoulli.hpp"

namespace congruence_lab {

namespace {

std::string weights_str(const WeightTriple& w) {
  return "(" + std::to_string(w.a1) + "," + std::to_string(w.a2) + "," + std::to_string(w.a3) +
         ";A=" + std::to_string(w.A) + ")";
}

Rational inv_sq(std::uint64_t x) {
  Integer d = x;
  return Rational(Integer(1), d * d);
}

// gcd(x, n) == 1 flags for 0..limit.
std::vector<char> coprime_flags(std::uint64_t limit, std::uint64_t n) {
  std::vector<char> flags(limit + 1, 0);
  for (std::uint64_t x = 1; x <= limit; ++x) flags[x] = std::gcd(x, n) == 1;
  return flags;
}

// Visits every ordered positive (i, j, k) with a1 i + a2 j + a3 k = target and
// gcd(ijk, n) = 1.
template <typename Visit>
void for_each_triple(const WeightTriple& w, std::uint64_t target, const std::vector<char>& coprime,
                     Visit&& visit) {
  for (std::uint64_t i = 1; w.a1 * i + w.a2 + w.a3 <= target; ++i) {
    if (!coprime[i]) continue;
    const std::uint64_t rem_i = target - w.a1 * i;
    for (std::uint64_t j = 1; w.a2 * j + w.a3 <= rem_i; ++j) {
      if (!coprime[j]) continue;
      const std::uint64_t rem = rem_i - w.a2 * j;
      if (rem % w.a3 != 0) continue;
      const std::uint64_t k = rem / w.a3;
      if (!coprime[k]) continue;
      visit(i, j, k);
    }
  }
}

}  // namespace

WeightTriple derive_gcd_structure(std::uint64_t a1, std::uint64_t a2, std::uint64_t a3, std::uint64_t A) {
  if (a1 == 0 || a2 == 0 || a3 == 0 || A == 0) {
    throw Error(Errc::PreconditionViolated, "weights and A must be positive");
  }
  WeightTriple w{a1, a2, a3, A, 1, 1, 1, 1};
  if (A % a1 != 0 || A % a2 != 0 || A % a3 != 0) {
    throw Error(Errc::NotCommonMultiple, "A is not a common multiple of " + weights_str(w));
  }
  w.g1 = std::gcd(a2, a3);
  w.g2 = std::gcd(a3, a1);
  w.g3 = std::gcd(a1, a2);
  w.g = std::gcd(w.g1, a1);
  return w;
}

WeightTriple reduce_to_coprime(const WeightTriple& w) {
  const std::uint64_t g = w.g;
  auto exact_div = [&](std::uint64_t num, std::uint64_t den, const char* what) {
    if (num % den != 0) {
      throw Error(Errc::PreconditionViolated, std::string(what) + " is not integral for " + weights_str(w));
    }
    return num / den;
  };
  const std::uint64_t b1 = exact_div(w.a1 * g, w.g2 * w.g3, "b1");
  const std::uint64_t b2 = exact_div(w.a2 * g, w.g3 * w.g1, "b2");
  const std::uint64_t b3 = exact_div(w.a3 * g, w.g1 * w.g2, "b3");
  const std::uint64_t C = exact_div(w.A * g * g, w.g1 * w.g2 * w.g3, "C");
  WeightTriple out = derive_gcd_structure(b1, b2, b3, C);
  if (out.g1 != 1 || out.g2 != 1 || out.g3 != 1) {
    throw Error(Errc::PreconditionViolated, "reduced weights not pairwise coprime for " + weights_str(w));
  }
  return out;
}

std::vector<PrimeFactor> factorize(std::uint64_t n) {
  if (n == 0) throw Error(Errc::ZeroInput, "factorize(0)");
  std::vector<PrimeFactor> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

void require_valid_weights(const WeightTriple& w, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::PreconditionViolated, "p must be an odd prime");
  for (auto a : w.weights()) {
    if (a % p == 0) {
      throw Error(Errc::InvalidWeights, "p=" + std::to_string(p) + " divides a weight of " + weights_str(w));
    }
  }
}

Residue triple_sum_bruteforce(const WeightTriple& w, std::uint64_t n, const Modulus& modulus) {
  const std::uint64_t p = modulus.prime();
  require_valid_weights(w, p);
  if (n == 0 || n % p != 0) {
    throw Error(Errc::PNotDivisor, "p=" + std::to_string(p) + " does not divide n=" + std::to_string(n));
  }
  const std::uint64_t target = w.A * n;
  const auto coprime = coprime_flags(target, n);
  const Integer& m = modulus.value();

  if (detail::fits_word(m)) {
    const std::uint64_t mw = detail::to_u64(m);
    std::vector<std::uint64_t> inv(target + 1, 0);
    for (std::uint64_t x = 1; x <= target; ++x) {
      if (coprime[x]) inv[x] = detail::inverse_u64(x % mw, mw);
    }
    std::uint64_t acc = 0;
    for_each_triple(w, target, coprime, [&](std::uint64_t i, std::uint64_t j, std::uint64_t k) {
      acc += detail::mul_mod(detail::mul_mod(inv[i], inv[j], mw), inv[k], mw);
      if (acc >= mw) acc -= mw;
    });
    return Residue::of(Integer(acc), m);
  }

  Integer acc = 0;
  for_each_triple(w, target, coprime, [&](std::uint64_t i, std::uint64_t j, std::uint64_t k) {
    Integer prod = Integer(i) * Integer(j) * Integer(k);
    acc += mod_inverse(prod, m).value;
  });
  return Residue::of(acc, m);
}

Rational triple_sum_exact(const WeightTriple& w, std::uint64_t n) {
  if (n == 0) throw Error(Errc::PreconditionViolated, "n must be positive");
  const std::uint64_t target = w.A * n;
  const auto coprime = coprime_flags(target, n);
  Rational acc = 0;
  for_each_triple(w, target, coprime, [&](std::uint64_t i, std::uint64_t j, std::uint64_t k) {
    acc += Rational(Integer(1), Integer(i) * Integer(j) * Integer(k));
  });
  acc.canonicalize();
  return acc;
}

Rational structure_factor(const WeightTriple& w) {
  Integer g3 = Integer(w.g) * w.g * w.g;
  Rational lead(Integer(w.A) * g3, Integer(3));
  lead.canonicalize();
  Rational sum = inv_sq(w.a1 * w.g1) + inv_sq(w.a2 * w.g2) + inv_sq(w.a3 * w.g3);
  return lead * sum;
}

Rational euler_like_product(std::uint64_t n, std::uint64_t p) {
  if (p == 0 || n == 0 || n % p != 0) {
    throw Error(Errc::PNotDivisor, "p=" + std::to_string(p) + " does not divide n=" + std::to_string(n));
  }
  Rational out = 1;
  for (const auto& [q, e] : factorize(n)) {
    if (q == p) continue;
    Integer qi = q;
    out *= normalize(qi - 2, qi) * normalize(qi * qi * qi - 1, qi * qi * qi);
  }
  out.canonicalize();
  return out;
}

Rational closed_form_exact(const WeightTriple& w, std::uint64_t n, std::uint64_t p) {
  Rational n_over_p{Integer(n), Integer(p)};
  n_over_p.canonicalize();
  return Rational(-2) * bernoulli_number(p - 3) * n_over_p * structure_factor(w) * euler_like_product(n, p);
}

namespace {

void require_exact_power(std::uint64_t n, std::uint64_t p, unsigned r) {
  if (r < 1) throw Error(Errc::ExactPowerViolated, "r must be >= 1");
  if (n == 0 || n % p != 0 || p_valuation(Integer(n), p) != r) {
    throw Error(Errc::ExactPowerViolated,
                std::to_string(p) + "^" + std::to_string(r) + " is not the exact power in n=" + std::to_string(n));
  }
}

// For p = 3 the structure factor is 3-integral only because
// a1^2 a2^2 g1^2 g2^2 + a2^2 a3^2 g2^2 g3^2 + a3^2 a1^2 g3^2 g1^2 = 0 mod 3.
void assert_structure_integrality(const WeightTriple& w, std::uint64_t p) {
  if (p == 3) {
    auto sq = [](std::uint64_t x) -> Integer { return Integer(x) * x; };
    Integer x1 = sq(w.a1 * w.g1), x2 = sq(w.a2 * w.g2), x3 = sq(w.a3 * w.g3);
    Integer s = x1 * x2 + x2 * x3 + x3 * x1;
    if (s % 3 != 0) {
      throw Error(Errc::NotPAdicInteger, "structure factor numerator not divisible by 3 for " + weights_str(w));
    }
  }
  if (structure_factor(w).get_den() % p == 0) {
    throw Error(Errc::NotPAdicInteger, "structure factor not p-integral for " + weights_str(w));
  }
}

}  // namespace

Residue closed_form_rhs(const WeightTriple& w, std::uint64_t n, std::uint64_t p, unsigned r) {
  require_valid_weights(w, p);
  require_exact_power(n, p, r);
  assert_structure_integrality(w, p);
  const Rational exact = closed_form_exact(w, n, p);
  if (exact.get_den() % p == 0) {
    throw Error(Errc::NotPAdicInteger, "closed form " + to_string(exact) + " is not p-integral (bug)");
  }
  return reduce_rational(exact, p, r);
}

Residue prime_power_rhs(const WeightTriple& w, std::uint64_t p, unsigned r) {
  require_valid_weights(w, p);
  if (r < 1) throw Error(Errc::ExactPowerViolated, "r must be >= 1");
  assert_structure_integrality(w, p);
  Rational value = Rational(-2) * Rational(int_pow(p, r - 1)) * bernoulli_number(p - 3) * structure_factor(w);
  return reduce_rational(value, p, r);
}

VerificationReport verify_main_theorem(const WeightTriple& w, std::uint64_t n, std::uint64_t p) {
  require_valid_weights(w, p);
  if (n == 0 || n % p != 0) {
    throw Error(Errc::PNotDivisor, "p=" + std::to_string(p) + " does not divide n=" + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  const unsigned r = p_valuation(Integer(n), p);
  const Modulus modulus(p, r);
  VerificationReport report;
  report.p = p;
  report.r = r;
  report.n = n;
  report.weights = w;
  report.lhs = triple_sum_bruteforce(w, n, modulus);
  report.rhs = closed_form_rhs(w, n, p, r);
  report.match = report.lhs == report.rhs;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace congruence_lab
