#pragma once

// Direct numerical checks of the auxiliary congruences behind the main
// theorem. Every sum is formed as an exact rational and reduced afterwards, so
// one sum can be compared at several powers of p.

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "congruence_lab/modring.hpp"

namespace congruence_lab {

/// One checked congruence: computed and expected residues share a modulus.
struct LemmaInstance {
  std::string lemma;
  std::string parameters;
  Residue computed;
  Residue expected;
  bool match = false;
};

LemmaInstance make_instance(std::string lemma, std::string parameters, Residue computed, Residue expected);

// --- residues along an arithmetic progression ---------------------------------

/// sum_{1 <= i <= u m p^r, i = ell (mod m), p not | i} 1/i mod p^r (vanishes).
Residue arith_prog_inverse_sum(std::uint64_t u, std::uint64_t m, std::int64_t ell, std::uint64_t p, unsigned r);
LemmaInstance arith_prog_instance(std::uint64_t u, std::uint64_t m, std::int64_t ell, std::uint64_t p, unsigned r);

/// sum over i <= u c p^r, j <= v c p^r, a i = b j (mod c), p not | ij of 1/(ij) mod p^{2r} (vanishes).
Residue double_sum_same_residue(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t u, std::uint64_t v,
                                std::uint64_t p, unsigned r);
LemmaInstance double_sum_same_residue_instance(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t u,
                                               std::uint64_t v, std::uint64_t p, unsigned r);

// --- the partial sums U(s; u, p^r) ----------------------------------------------

/// U(s; u, p^r) = sum_{k=0}^{u p^{r-1} - 1} 1/(kp + s). Requires s >= 1, p not | s.
Rational compute_U(std::int64_t s, std::uint64_t u, std::uint64_t p, unsigned r);

/// Memo for compute_U; the U grids reuse each value many times. Thread-safe.
class UCache {
 public:
  Rational get(std::int64_t s, std::uint64_t u, std::uint64_t p, unsigned r);

 private:
  std::mutex mutex_;
  std::map<std::tuple<std::int64_t, std::uint64_t, std::uint64_t, unsigned>, Rational> values_;
};

LemmaInstance U_part_a(std::int64_t s, std::uint64_t u, std::uint64_t p, unsigned r, UCache* cache = nullptr);
LemmaInstance U_part_b(std::int64_t s, std::uint64_t u, std::uint64_t p, unsigned r, UCache* cache = nullptr);
LemmaInstance U_part_c(std::int64_t s, std::int64_t t, std::uint64_t u, std::uint64_t v, std::uint64_t p, unsigned r,
                       UCache* cache = nullptr);
LemmaInstance U_part_d(std::int64_t s, std::int64_t t, std::uint64_t u, std::uint64_t v, std::uint64_t p, unsigned r,
                       UCache* cache = nullptr);

/// Parts (a) and (b) always; (c) and (d) only when r >= 2.
std::vector<LemmaInstance> check_U_congruences(std::int64_t s, std::int64_t t, std::uint64_t u, std::uint64_t v,
                                               std::uint64_t p, unsigned r, UCache* cache = nullptr);

// --- pairing k with the residue of a k modulo cp ---------------------------------

/// The unique h in [1, cp-1] with h = a k (mod cp).
std::uint64_t h_of_k(std::uint64_t k, std::int64_t a, std::uint64_t c, std::uint64_t p);

/// sum_{k < cp, p not | k} 1/(k h(k)) mod p^2 against -c/a^3 (p = 3) or c(a^2+1)/(3a) p B_{p-3}.
LemmaInstance hk_pair_sum(std::int64_t a, std::uint64_t c, std::uint64_t p);

/// Double sum with a i = b j (mod cp), mod p^{2r}, against its closed form
/// (two branches for p = 3 split at r = 1, one for p >= 5).
LemmaInstance double_sum_mod_cp(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t u, std::uint64_t v,
                                std::uint64_t p, unsigned r);

/// Floor-weighted sums mod p. Returns two instances: the polynomial weight
/// (k^{p-4} for p >= 5, k for p = 3) and the 1/k^3 weight it stands in for.
std::vector<LemmaInstance> floor_weighted_sum(std::uint64_t a, std::uint64_t c, std::uint64_t p);

/// sum_{k < bound, p not | k} k^{-e}:
///   e = 2, p = 3: bound 3s, mod 9, equals -s;
///   e = 2, p >= 5: bound cp, mod p^2, equals (2c/3) p B_{p-3};
///   e = 3: bound cp, mod p, vanishes;
///   e = 4, p = 3: bound 3c, mod 3, equals -c.
LemmaInstance inverse_power_sum(unsigned e, std::uint64_t c_or_s, std::uint64_t p);

// --- grids ----------------------------------------------------------------------

enum class LemmaId {
  ArithProg,
  ModC,
  U,
  HK,
  ModCp,
  Floor,
  PowerSums,
  Key,
  Reflection,
  Shift,
  Induction,
  EightPart,
};

const std::vector<LemmaId>& all_lemma_ids();
std::string lemma_name(LemmaId id);
/// Throws UnknownLemma.
LemmaId parse_lemma_id(const std::string& name);

/// Optional overrides of the default grid. Empty vectors keep the defaults.
struct LemmaGrid {
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> exponents;
  std::vector<std::uint64_t> N_values;  // reflection and shift
};

std::vector<LemmaInstance> run_lemma_grid(LemmaId id, const LemmaGrid& grid = {});

}  // namespace congruence_lab
