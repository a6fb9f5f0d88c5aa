#include "congruence_lab/poly.hpp"

#include <numeric>
#include <string>

namespace congruence_lab {

CoeffVector::CoeffVector(Integer modulus, std::size_t length) : modulus_(std::move(modulus)), coeffs_(length, 0) {
  if (modulus_ < 1) throw Error(Errc::PreconditionViolated, "coefficient modulus must be >= 1");
}

CoeffVector::CoeffVector(Integer modulus, std::vector<Integer> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
  if (modulus_ < 1) throw Error(Errc::PreconditionViolated, "coefficient modulus must be >= 1");
  for (auto& c : coeffs_) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus_.get_mpz_t());
}

void CoeffVector::set(std::size_t i, const Integer& value) {
  mpz_fdiv_r(coeffs_.at(i).get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

CoeffVector harmonic_poly(std::uint64_t stride, std::uint64_t M, std::uint64_t N, const PrimePower& modulus,
                          std::size_t length) {
  if (stride == 0 || M == 0 || N == 0) {
    throw Error(Errc::PreconditionViolated, "harmonic_poly needs positive stride, M and N");
  }
  if (length == 0) throw Error(Errc::PreconditionViolated, "harmonic_poly needs length > 0");
  const Integer m = modulus.value();
  CoeffVector out(m, length);
  const std::uint64_t top = M * N;
  for (std::uint64_t k = 1; k <= top && stride * k < length; ++k) {
    if (std::gcd(k, N) != 1) continue;
    if (k % modulus.prime == 0) {
      throw Error(Errc::NonInvertibleTerm, "k=" + std::to_string(k) + " shares the prime " +
                                               std::to_string(modulus.prime) + "; it must divide N");
    }
    out.set(stride * k, mod_inverse(Integer(k), m).value);
  }
  return out;
}

namespace {

void require_same_modulus(const CoeffVector& u, const CoeffVector& v) {
  if (u.modulus() != v.modulus()) {
    throw Error(Errc::ModulusMismatch, to_string(u.modulus()) + " vs " + to_string(v.modulus()));
  }
}

std::vector<std::uint64_t> to_words(const CoeffVector& u) {
  std::vector<std::uint64_t> out(u.length());
  for (std::size_t i = 0; i < u.length(); ++i) out[i] = detail::to_u64(u[i]);
  return out;
}

}  // namespace

CoeffVector convolve(const CoeffVector& u, const CoeffVector& v, std::size_t length) {
  require_same_modulus(u, v);
  const Integer& m = u.modulus();
  std::vector<Integer> out(length, 0);

  if (detail::fits_word(m)) {
    const std::uint64_t mw = detail::to_u64(m);
    const auto uw = to_words(u);
    const auto vw = to_words(v);
    const bool narrow = mw < (std::uint64_t{1} << 32);
    // Narrow moduli: products fit in 64 bits, so 128-bit accumulators cannot overflow.
    std::vector<unsigned __int128> acc(length, 0);
    for (std::size_t i = 0; i < uw.size() && i < length; ++i) {
      if (uw[i] == 0) continue;
      const std::size_t jmax = std::min(vw.size(), length - i);
      for (std::size_t j = 0; j < jmax; ++j) {
        if (vw[j] == 0) continue;
        if (narrow) {
          acc[i + j] += static_cast<unsigned __int128>(uw[i] * vw[j]);
        } else {
          acc[i + j] = (acc[i + j] + detail::mul_mod(uw[i], vw[j], mw)) % mw;
        }
      }
    }
    for (std::size_t k = 0; k < length; ++k) out[k] = Integer(static_cast<std::uint64_t>(acc[k] % mw));
    return CoeffVector(m, std::move(out));
  }

  for (std::size_t i = 0; i < u.length() && i < length; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.length() && i + j < length; ++j) {
      if (v[j] == 0) continue;
      out[i + j] += u[i] * v[j];
    }
  }
  return CoeffVector(m, std::move(out));
}

Residue product_coefficient(const CoeffVector& u, const CoeffVector& v, std::size_t index) {
  require_same_modulus(u, v);
  Integer acc = 0;
  for (std::size_t i = 0; i <= index && i < u.length(); ++i) {
    const std::size_t j = index - i;
    if (j >= v.length() || u[i] == 0) continue;
    acc += u[i] * v[j];
  }
  return Residue::of(acc, u.modulus());
}

Residue extract_triple_coefficient(const WeightTriple& w, std::uint64_t n, const Modulus& modulus) {
  const std::uint64_t p = modulus.prime();
  require_valid_weights(w, p);
  if (n == 0 || n % p != 0) {
    throw Error(Errc::PNotDivisor, "p=" + std::to_string(p) + " does not divide n=" + std::to_string(n));
  }
  const std::size_t target = w.A * n;
  const PrimePower pp{p, modulus.exponent()};
  const auto f1 = harmonic_poly(w.a1, w.A / w.a1, n, pp, target + 1);
  const auto f2 = harmonic_poly(w.a2, w.A / w.a2, n, pp, target + 1);
  const auto f3 = harmonic_poly(w.a3, w.A / w.a3, n, pp, target + 1);
  return product_coefficient(convolve(f1, f2, target + 1), f3, target);
}

Residue crt_combine(const Residue& a, const Residue& b) {
  if (a.modulus == 1) return b;
  if (b.modulus == 1) return a;
  const Integer m = a.modulus * b.modulus;
  const Residue t = Residue::of(b.value - a.value, b.modulus) * mod_inverse(a.modulus, b.modulus);
  return Residue::of(a.value + a.modulus * t.value, m);
}

ReflectionCheck reflection_details(const WeightTriple& w, std::uint64_t N) {
  if (N < 2) throw Error(Errc::PreconditionViolated, "reflection check needs N >= 2");
  const std::size_t AN = w.A * N;
  ReflectionCheck out;

  // All coefficients of f are positive rationals, so the lowest and highest
  // exponents of the product are sums of the factors' extreme exponents.
  std::uint64_t lowest = 0, highest = 0;
  for (auto a : w.weights()) {
    const std::uint64_t top = (w.A / a) * N;
    std::uint64_t k_min = 1, k_max = top;
    while (std::gcd(k_max, N) != 1) --k_max;
    lowest += a * k_min;
    highest += a * k_max;
  }
  out.constant_term_zero = lowest > 0;
  out.degree = highest;
  out.degree_below_3AN = highest < 3 * AN;

  Residue at_AN = Residue::zero(1), at_2AN = Residue::zero(1);
  for (const auto& [q, e] : factorize(N)) {
    const PrimePower pp{q, e};
    const auto f1 = harmonic_poly(w.a1, w.A / w.a1, N, pp, 2 * AN + 1);
    const auto f2 = harmonic_poly(w.a2, w.A / w.a2, N, pp, 2 * AN + 1);
    const auto f3 = harmonic_poly(w.a3, w.A / w.a3, N, pp, 2 * AN + 1);
    const auto f12 = convolve(f1, f2, 2 * AN + 1);
    at_AN = crt_combine(at_AN, product_coefficient(f12, f3, AN));
    at_2AN = crt_combine(at_2AN, product_coefficient(f12, f3, 2 * AN));
  }
  out.coeff_AN = at_AN;
  out.coeff_2AN = at_2AN;
  out.reflection_holds = (at_AN + at_2AN).is_zero();
  return out;
}

bool check_reflection(const WeightTriple& w, std::uint64_t N) { return reflection_details(w, N).ok(); }

bool check_shift_lemma(std::uint64_t L, std::uint64_t M, std::uint64_t N) {
  if (L == 0 || M == 0 || N == 0) throw Error(Errc::PreconditionViolated, "shift check needs L, M, N >= 1");
  if (N == 1) return true;  // everything vanishes mod 1
  const std::uint64_t block = M * N;
  const std::size_t length = L * block + 1;
  for (const auto& [q, e] : factorize(N)) {
    const PrimePower pp{q, e};
    const auto lhs = harmonic_poly(1, L * M, N, pp, length);
    const auto base = harmonic_poly(1, M, N, pp, length);
    CoeffVector prefactor(pp.value(), length);
    for (std::uint64_t l = 0; l < L; ++l) prefactor.set(l * block, 1);
    if (!(convolve(prefactor, base, length) == lhs)) return false;
  }
  return true;
}

namespace {

void require_induction_params(const WeightTriple& w, std::uint64_t n, std::uint64_t p, unsigned r, std::uint64_t q,
                              unsigned s) {
  require_valid_weights(w, p);
  if (r < 1 || n == 0 || n % p != 0 || p_valuation(Integer(n), p) != r) {
    throw Error(Errc::ExactPowerViolated, "p^r must exactly divide n=" + std::to_string(n));
  }
  if (!is_prime(q)) throw Error(Errc::PreconditionViolated, "q=" + std::to_string(q) + " is not prime");
  if (n % q == 0) throw Error(Errc::PreconditionViolated, "q=" + std::to_string(q) + " divides n");
  if (s < 1) throw Error(Errc::PreconditionViolated, "s must be >= 1");
}

}  // namespace

VerificationReport check_induction_step(const WeightTriple& w, std::uint64_t n, std::uint64_t p, unsigned r,
                                        std::uint64_t q, unsigned s) {
  require_induction_params(w, n, p, r, q, s);
  const auto start = std::chrono::steady_clock::now();
  const Modulus modulus(p, r);
  const Integer qs = int_pow(q, s);
  const std::uint64_t lifted_n = detail::to_u64(qs) * n;

  const Integer qi = q;
  Rational factor = Rational(qs) * normalize(qi - 2, qi) * normalize(qi * qi * qi - 1, qi * qi * qi);
  factor.canonicalize();

  VerificationReport report;
  report.p = p;
  report.r = r;
  report.n = lifted_n;
  report.weights = w;
  report.lhs = triple_sum_bruteforce(w, lifted_n, modulus);
  report.rhs = triple_sum_bruteforce(w, n, modulus) * reduce_rational(factor, modulus);
  report.match = report.lhs == report.rhs;
  report.induction = InductionParams{q, s, n};
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::array<Residue, 8> eight_part_decomposition(const WeightTriple& w, std::uint64_t n, std::uint64_t q,
                                                const Modulus& modulus) {
  const std::uint64_t p = modulus.prime();
  require_induction_params(w, n, p, modulus.exponent(), q, 1);

  const std::size_t target = w.A * q * n;
  const std::size_t length = target + 1;
  const PrimePower pp{p, modulus.exponent()};
  const auto weights = w.weights();

  // plain[i] = f(x^{a_i}; qA/a_i, n); split[i] = f(x^{q a_i}; A/a_i, n).
  std::vector<CoeffVector> plain, split;
  for (auto a : weights) {
    plain.push_back(harmonic_poly(a, (w.A / a) * q, n, pp, length));
    split.push_back(harmonic_poly(a * q, w.A / a, n, pp, length));
  }
  auto pick = [&](unsigned mask, int i) -> const CoeffVector& { return (mask >> i) & 1 ? split[i] : plain[i]; };

  // Products of the first two factors, indexed by the low two mask bits.
  std::array<CoeffVector, 4> front = {
      convolve(plain[0], plain[1], length), convolve(split[0], plain[1], length),
      convolve(plain[0], split[1], length), convolve(split[0], split[1], length)};

  const Residue minus_q_inv = -mod_inverse(Integer(q), modulus.value());
  constexpr std::array<unsigned, 8> kMaskOrder = {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};

  std::array<Residue, 8> out;
  for (std::size_t idx = 0; idx < kMaskOrder.size(); ++idx) {
    const unsigned mask = kMaskOrder[idx];
    Residue c = product_coefficient(front[mask & 0b11], pick(mask, 2), target);
    for (unsigned bits = mask; bits != 0; bits &= bits - 1) c = c * minus_q_inv;
    out[idx] = c;
  }
  return out;
}

std::vector<Integer> inverse_cube_series(std::size_t length) {
  const std::vector<Integer> ones(length, 1);
  auto times_ones = [&](const std::vector<Integer>& u) {
    std::vector<Integer> out(length, 0);
    for (std::size_t i = 0; i < length; ++i) {
      for (std::size_t j = 0; i + j < length; ++j) out[i + j] += u[i] * ones[j];
    }
    return out;
  };
  return times_ones(times_ones(ones));
}

}  // namespace congruence_lab
