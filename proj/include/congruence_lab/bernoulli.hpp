#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "congruence_lab/modring.hpp"

namespace congruence_lab {

/// Exact Bernoulli numbers B_0..B_max with B_1 = -1/2 (generating function z/(e^z - 1)).
class BernoulliTable {
 public:
  explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}

  const Rational& operator[](std::size_t k) const { return values_.at(k); }
  std::size_t max_index() const noexcept { return values_.size() - 1; }
  std::span<const Rational> values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

/// Table via sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
BernoulliTable bernoulli_exact(std::size_t max_index);

/// B_m from a process-wide table that grows on demand. Thread-safe.
Rational bernoulli_number(std::size_t m);

/// B_m mod p. Throws NotPIntegral when (p - 1) | m with m > 0.
Residue bernoulli_mod_p(std::size_t m, std::uint64_t p);

/// B_{2n} + sum over primes p with (p - 1) | 2n of 1/p is an integer.
bool check_von_staudt_clausen(std::uint64_t n);

}  // namespace congruence_lab
