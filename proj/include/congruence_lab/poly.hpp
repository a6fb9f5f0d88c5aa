#pragma once

// Truncated polynomials over Z/p^e built from
//
//   f(x; M, N) = sum_{1 <= k <= MN, gcd(k, N) = 1} x^k / k,
//
// whose triple products encode the weighted harmonic sums as coefficients.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "congruence_lab/harmonic.hpp"
#include "congruence_lab/modring.hpp"

namespace congruence_lab {

/// A prime power q^e with q any prime (including 2, which composite N can carry).
struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  Integer value() const { return int_pow(prime, exponent); }
};

/// Dense coefficients c_0..c_{length-1}, all reduced modulo one common modulus.
class CoeffVector {
 public:
  CoeffVector(Integer modulus, std::size_t length);
  CoeffVector(Integer modulus, std::vector<Integer> coeffs);

  std::size_t length() const noexcept { return coeffs_.size(); }
  const Integer& modulus() const noexcept { return modulus_; }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  void set(std::size_t i, const Integer& value);

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  Integer modulus_;
  std::vector<Integer> coeffs_;
};

/// Coefficients of f(x^stride; M, N) modulo a prime power dividing N's support,
/// truncated to `length` terms. The prime must divide N.
CoeffVector harmonic_poly(std::uint64_t stride, std::uint64_t M, std::uint64_t N, const PrimePower& modulus,
                          std::size_t length);

/// Truncated Cauchy product (schoolbook). Throws ModulusMismatch.
CoeffVector convolve(const CoeffVector& u, const CoeffVector& v, std::size_t length);

/// [x^index] (u * v) without forming the product.
Residue product_coefficient(const CoeffVector& u, const CoeffVector& v, std::size_t index);

/// [x^{An}] prod_i f(x^{a_i}; A/a_i, n) in Z/p^r.
Residue extract_triple_coefficient(const WeightTriple& w, std::uint64_t n, const Modulus& modulus);

/// Outcome of the coefficient-reflection check on prod_i f(x^{a_i}; A/a_i, N).
struct ReflectionCheck {
  bool constant_term_zero = false;
  bool degree_below_3AN = false;
  std::size_t degree = 0;
  Residue coeff_AN;   // mod N, combined from the prime-power factors of N
  Residue coeff_2AN;  // mod N
  bool reflection_holds = false;

  bool ok() const noexcept { return constant_term_zero && degree_below_3AN && reflection_holds; }
};

/// Requires N >= 2.
ReflectionCheck reflection_details(const WeightTriple& w, std::uint64_t N);
bool check_reflection(const WeightTriple& w, std::uint64_t N);

/// f(x; LM, N) = (sum_{l<L} x^{lMN}) f(x; M, N) coefficientwise mod N.
bool check_shift_lemma(std::uint64_t L, std::uint64_t M, std::uint64_t N);

/// Compares the sum at q^s n against q^s (1 - 2/q)(1 - 1/q^3) times the sum at n, mod p^r.
VerificationReport check_induction_step(const WeightTriple& w, std::uint64_t n, std::uint64_t p, unsigned r,
                                        std::uint64_t q, unsigned s);

/// The coefficients [x^{Aqn}] S_j, j = 1..8, of the signed products obtained by
/// splitting each f(x^{a_i}; A/a_i, qn) into f(x^{a_i}; qA/a_i, n) - f(x^{q a_i}; A/a_i, n)/q.
/// Entry j-1 holds S_j in the order: no split factor, then factor 1, 2, 3 split,
/// then pairs (1,2), (1,3), (2,3), then all three.
std::array<Residue, 8> eight_part_decomposition(const WeightTriple& w, std::uint64_t n, std::uint64_t q,
                                                const Modulus& modulus);

/// Coefficients of (1 + z + z^2 + ...)^3 truncated to `length` terms, by repeated convolution.
std::vector<Integer> inverse_cube_series(std::size_t length);

/// x mod m1*m2 from x mod m1 and x mod m2, coprime moduli.
Residue crt_combine(const Residue& a, const Residue& b);

}  // namespace congruence_lab
