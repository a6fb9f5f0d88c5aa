#pragma once

// Both sides of the weighted harmonic triple-sum congruence
//
//   sum_{a1 i + a2 j + a3 k = A n, gcd(ijk, n) = 1} 1/(ijk)
//     = -2 B_{p-3} (n/p) (A g^3 / 3) sum_i 1/(a_i^2 g_i^2)
//       * prod_{q | n, q != p} (1 - 2/q)(1 - 1/q^3)   (mod p^r),  p^r || n.
//
// The left side is enumerated directly; the right side is one exact rational
// reduced once at the end.

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "congruence_lab/modring.hpp"

namespace congruence_lab {

/// Weights (a1, a2, a3), a common multiple A, and the derived gcds
/// g1 = gcd(a2, a3), g2 = gcd(a3, a1), g3 = gcd(a1, a2), g = gcd(a1, a2, a3).
struct WeightTriple {
  std::uint64_t a1 = 1, a2 = 1, a3 = 1, A = 1;
  std::uint64_t g1 = 1, g2 = 1, g3 = 1, g = 1;

  std::array<std::uint64_t, 3> weights() const noexcept { return {a1, a2, a3}; }

  friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
};

/// Throws NotCommonMultiple if some a_i does not divide A (PreconditionViolated on zeros).
WeightTriple derive_gcd_structure(std::uint64_t a1, std::uint64_t a2, std::uint64_t a3, std::uint64_t A);

/// b_i = a_i g / (g_j g_k), C = A g^2 / (g1 g2 g3): pairwise coprime weights.
WeightTriple reduce_to_coprime(const WeightTriple& w);

struct PrimeFactor {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Trial division; primes strictly increasing. factorize(1) is empty.
std::vector<PrimeFactor> factorize(std::uint64_t n);

/// Left side accumulated in Z/p^r. Requires p | n and p not dividing any a_i.
Residue triple_sum_bruteforce(const WeightTriple& w, std::uint64_t n, const Modulus& modulus);

/// Left side as an exact rational; only for small An.
Rational triple_sum_exact(const WeightTriple& w, std::uint64_t n);

/// (A g^3 / 3) (1/(a1 g1)^2 + 1/(a2 g2)^2 + 1/(a3 g3)^2).
Rational structure_factor(const WeightTriple& w);

/// prod over primes q | n, q != p of (1 - 2/q)(1 - 1/q^3). Throws PNotDivisor if p does not divide n.
Rational euler_like_product(std::uint64_t n, std::uint64_t p);

/// The closed form as one exact rational, before reduction.
Rational closed_form_exact(const WeightTriple& w, std::uint64_t n, std::uint64_t p);

/// Closed form reduced mod p^r. Throws ExactPowerViolated unless p^r || n.
Residue closed_form_rhs(const WeightTriple& w, std::uint64_t n, std::uint64_t p, unsigned r);

/// The n = p^r specialization: -2 p^{r-1} B_{p-3} * structure_factor(w) mod p^r.
Residue prime_power_rhs(const WeightTriple& w, std::uint64_t p, unsigned r);

struct InductionParams {
  std::uint64_t q;
  unsigned s;
  std::uint64_t base_n;
};

struct VerificationReport {
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t n = 0;
  WeightTriple weights;
  Residue lhs;
  Residue rhs;
  bool match = false;
  std::chrono::duration<double, std::milli> elapsed{};
  std::optional<InductionParams> induction;  // set for induction-step reports
};

/// Brute force against closed form, r = v_p(n).
VerificationReport verify_main_theorem(const WeightTriple& w, std::uint64_t n, std::uint64_t p);

/// Shared validation: p odd prime, p does not divide any a_i.
void require_valid_weights(const WeightTriple& w, std::uint64_t p);

}  // namespace congruence_lab
