#pragma once

// Randomized invariant checks shared by the unit tests and the acceptance run.
// Each check draws its own instances from the main grid's bounds and reports
// how many held.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "congruence_lab/bernoulli.hpp"
#include "congruence_lab/harmonic.hpp"
#include "oracles.hpp"

namespace props {

using namespace congruence_lab;

struct Outcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return cases > 0 && failures.empty(); }
};

struct Instance {
  WeightTriple w;
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  unsigned r = 0;
};

inline constexpr std::array<std::uint64_t, 5> kPrimes{3, 5, 7, 11, 13};
inline constexpr std::array<std::uint64_t, 8> kCofactors{1, 2, 4, 7, 14, 15, 21, 35};
inline constexpr std::uint64_t kMaxAn = 3000;

template <typename Range>
auto pick(std::mt19937_64& rng, const Range& range) {
  std::uniform_int_distribution<std::size_t> d(0, std::size(range) - 1);
  return range[d(rng)];
}

/// Weights a_i in [1, 4] prime to p, A = lcm, and `headroom` * A * n within the grid bound.
inline Instance draw(std::mt19937_64& rng, std::uint64_t headroom = 1) {
  std::uniform_int_distribution<std::uint64_t> weight(1, 4);
  std::uniform_int_distribution<unsigned> exponent(1, 2);
  for (;;) {
    const std::uint64_t p = pick(rng, kPrimes);
    const std::uint64_t m = pick(rng, kCofactors);
    if (m % p == 0) continue;
    const unsigned r = exponent(rng);
    const std::uint64_t n = (r == 1 ? p : p * p) * m;
    const std::uint64_t a1 = weight(rng), a2 = weight(rng), a3 = weight(rng);
    if (a1 % p == 0 || a2 % p == 0 || a3 % p == 0) continue;
    const std::uint64_t A = std::lcm(a1, std::lcm(a2, a3));
    if (headroom * A * n > kMaxAn) continue;
    return Instance{derive_gcd_structure(a1, a2, a3, A), n, p, r};
  }
}

inline std::string describe(const Instance& c) {
  std::ostringstream os;
  os << "p=" << c.p << " n=" << c.n << " a=(" << c.w.a1 << ',' << c.w.a2 << ',' << c.w.a3 << ") A=" << c.w.A;
  return os.str();
}

inline Outcome permutation_symmetry(std::mt19937_64& rng, std::size_t count) {
  Outcome out;
  for (; out.cases < count; ++out.cases) {
    const Instance c = draw(rng);
    std::array<std::uint64_t, 3> a = c.w.weights();
    std::shuffle(a.begin(), a.end(), rng);
    const WeightTriple permuted = derive_gcd_structure(a[0], a[1], a[2], c.w.A);
    const Modulus mod(c.p, c.r);
    const bool lhs_same = triple_sum_bruteforce(c.w, c.n, mod) == triple_sum_bruteforce(permuted, c.n, mod);
    const bool rhs_same = closed_form_rhs(c.w, c.n, c.p, c.r) == closed_form_rhs(permuted, c.n, c.p, c.r);
    if (!lhs_same || !rhs_same) out.failures.push_back(describe(c));
  }
  return out;
}

inline Outcome common_scaling(std::mt19937_64& rng, std::size_t count) {
  Outcome out;
  for (; out.cases < count; ++out.cases) {
    const Instance c = draw(rng, 2);
    const std::uint64_t d = c.p == 3 ? 2 : pick(rng, std::array<std::uint64_t, 2>{2, 3});
    if (d * c.w.A * c.n > kMaxAn) {
      --out.cases;
      continue;
    }
    const WeightTriple scaled = derive_gcd_structure(d * c.w.a1, d * c.w.a2, d * c.w.a3, d * c.w.A);
    const Modulus mod(c.p, c.r);
    const bool sum_same = triple_sum_bruteforce(c.w, c.n, mod) == triple_sum_bruteforce(scaled, c.n, mod);
    const bool factor_same = structure_factor(c.w) == structure_factor(scaled);
    if (!sum_same || !factor_same) out.failures.push_back(describe(c) + " d=" + std::to_string(d));
  }
  return out;
}

inline Outcome multiple_linearity(std::mt19937_64& rng, std::size_t count) {
  Outcome out;
  for (; out.cases < count; ++out.cases) {
    const Instance c = draw(rng, 2);
    const std::uint64_t lambda = c.p == 3 ? 2 : pick(rng, std::array<std::uint64_t, 2>{2, 3});
    if (lambda * c.w.A * c.n > kMaxAn) {
      --out.cases;
      continue;
    }
    const WeightTriple big = derive_gcd_structure(c.w.a1, c.w.a2, c.w.a3, lambda * c.w.A);
    const Modulus mod(c.p, c.r);
    const Integer l(lambda);
    const bool lhs_ok = triple_sum_bruteforce(big, c.n, mod) == triple_sum_bruteforce(c.w, c.n, mod) * l;
    const bool rhs_ok = closed_form_rhs(big, c.n, c.p, c.r) == closed_form_rhs(c.w, c.n, c.p, c.r) * l;
    if (!lhs_ok || !rhs_ok) out.failures.push_back(describe(c) + " lambda=" + std::to_string(lambda));
  }
  return out;
}

/// Exact rational identity between the sum and the sum over reduced weights.
/// `coprime_only` restricts draws to gcd(a1 a2 a3, n) = 1.
inline Outcome reduce_identity(std::mt19937_64& rng, std::size_t count, bool coprime_only = false) {
  Outcome out;
  for (; out.cases < count; ++out.cases) {
    const Instance c = draw(rng);
    if (coprime_only && std::gcd(c.w.a1 * c.w.a2 * c.w.a3, c.n) != 1) {
      --out.cases;
      continue;
    }
    const WeightTriple red = reduce_to_coprime(c.w);
    const bool pairwise = std::gcd(red.a1, red.a2) == 1 && std::gcd(red.a1, red.a3) == 1 &&
                          std::gcd(red.a2, red.a3) == 1;
    mpq_class scale(mpz_class(c.w.g * c.w.g * c.w.g), mpz_class(c.w.g1 * c.w.g2 * c.w.g3));
    scale.canonicalize();
    const bool equal = oracle::triple_sum(c.w.a1, c.w.a2, c.w.a3, c.w.A, c.n) ==
                       scale * oracle::triple_sum(red.a1, red.a2, red.a3, red.A, c.n);
    if (!pairwise || !equal) out.failures.push_back(describe(c));
  }
  return out;
}

/// Recurrence table against Akiyama-Tanigawa, and B_m mod p against power sums.
inline Outcome bernoulli_dual_path(std::mt19937_64& rng, std::size_t count) {
  Outcome out;
  const auto other = oracle::bernoulli(120);
  std::uniform_int_distribution<std::size_t> index(0, 120);
  std::uniform_int_distribution<std::size_t> half(1, 40);
  const std::array<std::uint64_t, 8> primes{5, 7, 11, 13, 17, 19, 23, 29};
  for (; out.cases < count; ++out.cases) {
    if (out.cases % 2 == 0) {
      const std::size_t m = index(rng);
      if (bernoulli_number(m) != other[m]) out.failures.push_back("B_" + std::to_string(m));
      continue;
    }
    const std::uint64_t p = pick(rng, primes);
    const std::size_t m = 2 * half(rng);
    if (m % (p - 1) == 0) {
      --out.cases;
      continue;
    }
    if (bernoulli_mod_p(m, p).value != Integer(oracle::bernoulli_mod_p_powersum(m, p))) {
      out.failures.push_back("B_" + std::to_string(m) + " mod " + std::to_string(p));
    }
  }
  return out;
}

/// Every even index up to 30, by the library check and by direct summation.
inline Outcome von_staudt_clausen() {
  Outcome out;
  const auto table = oracle::bernoulli(30);
  for (std::uint64_t k = 1; 2 * k <= 30; ++k, ++out.cases) {
    mpq_class v = table[2 * k];
    for (std::uint64_t d = 1; d <= 2 * k; ++d) {
      if ((2 * k) % d != 0) continue;
      const std::uint64_t p = d + 1;
      bool prime = p >= 2;
      for (std::uint64_t f = 2; f * f <= p; ++f) prime = prime && p % f != 0;
      if (prime) v += mpq_class(1, p);
    }
    v.canonicalize();
    if (!check_von_staudt_clausen(k) || v.get_den() != 1) out.failures.push_back("B_" + std::to_string(2 * k));
  }
  return out;
}

}  // namespace props
