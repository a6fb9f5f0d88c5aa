#include "congruence_lab/lemmas.hpp"

#include <numeric>
#include <sstream>

#include "congruence_lab/bernoulli.hpp"

namespace congruence_lab {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::PreconditionViolated, "p must be an odd prime, got " + std::to_string(p));
}

void require_positive(std::initializer_list<std::uint64_t> values, const char* what) {
  for (auto v : values) {
    if (v == 0) throw Error(Errc::PreconditionViolated, std::string(what) + " must be positive");
  }
}

Rational unit_fraction(std::uint64_t k) { return Rational(Integer(1), Integer(k)); }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t out = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) out = detail::mul_mod(out, base, m);
    base = detail::mul_mod(base, base, m);
    e >>= 1;
  }
  return out;
}

template <typename... Args>
std::string params(Args&&... kv) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const auto& pair) {
    if (!first) os << ' ';
    first = false;
    os << pair.first << '=' << pair.second;
  };
  (put(kv), ...);
  return os.str();
}

template <typename T>
std::pair<const char*, T> kv(const char* key, T value) {
  return {key, value};
}

// Exact sum over 1 <= i <= i_max, 1 <= j <= j_max, p not | ij, a i = b j (mod C)
// of 1/(ij). Both indices are bucketed by residue class, which leaves C products.
Rational paired_inverse_sum(std::uint64_t a, std::uint64_t b, std::uint64_t C, std::uint64_t i_max,
                            std::uint64_t j_max, std::uint64_t p) {
  std::vector<Rational> i_class(C, 0), j_class(C, 0);
  for (std::uint64_t i = 1; i <= i_max; ++i) {
    if (i % p != 0) i_class[(a % C) * (i % C) % C] += unit_fraction(i);
  }
  for (std::uint64_t j = 1; j <= j_max; ++j) {
    if (j % p != 0) j_class[(b % C) * (j % C) % C] += unit_fraction(j);
  }
  Rational total = 0;
  for (std::uint64_t l = 0; l < C; ++l) total += i_class[l] * j_class[l];
  return total;
}

Rational int_rational(const Integer& x) { return Rational(x); }

}  // namespace

LemmaInstance make_instance(std::string lemma, std::string parameters, Residue computed, Residue expected) {
  LemmaInstance out{std::move(lemma), std::move(parameters), std::move(computed), std::move(expected), false};
  out.match = out.computed == out.expected;
  return out;
}

Residue arith_prog_inverse_sum(std::uint64_t u, std::uint64_t m, std::int64_t ell, std::uint64_t p, unsigned r) {
  require_odd_prime(p);
  require_positive({u, m, r}, "u, m and r");
  if (m % p == 0) throw Error(Errc::PDividesM, "p=" + std::to_string(p) + " divides m=" + std::to_string(m));
  const std::uint64_t top = u * m * detail::to_u64(int_pow(p, r));
  const auto mi = static_cast<std::int64_t>(m);
  const std::uint64_t first = static_cast<std::uint64_t>(((ell % mi) + mi - 1) % mi) + 1;  // in [1, m]
  Rational sum = 0;
  for (std::uint64_t i = first; i <= top; i += m) {
    if (i % p != 0) sum += unit_fraction(i);
  }
  return reduce_rational(sum, p, r);
}

LemmaInstance arith_prog_instance(std::uint64_t u, std::uint64_t m, std::int64_t ell, std::uint64_t p, unsigned r) {
  Residue got = arith_prog_inverse_sum(u, m, ell, p, r);
  Residue want = Residue::zero(got.modulus);
  return make_instance("arith-prog", params(kv("u", u), kv("m", m), kv("ell", ell), kv("p", p), kv("r", r)),
                       std::move(got), std::move(want));
}

Residue double_sum_same_residue(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t u, std::uint64_t v,
                                std::uint64_t p, unsigned r) {
  require_odd_prime(p);
  require_positive({a, b, c, u, v, r}, "a, b, c, u, v and r");
  if (c % p == 0) throw Error(Errc::PreconditionViolated, "p divides c");
  if (std::gcd(a, c) != 1 || std::gcd(b, c) != 1) throw Error(Errc::PreconditionViolated, "a and b must be coprime to c");
  const std::uint64_t pr = detail::to_u64(int_pow(p, r));
  return reduce_rational(paired_inverse_sum(a, b, c, u * c * pr, v * c * pr, p), p, 2 * r);
}

LemmaInstance double_sum_same_residue_instance(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t u,
                                               std::uint64_t v, std::uint64_t p, unsigned r) {
  Residue got = double_sum_same_residue(a, b, c, u, v, p, r);
  Residue want = Residue::zero(got.modulus);
  return make_instance("mod-c",
                       params(kv("a", a), kv("b", b), kv("c", c), kv("u", u), kv("v", v), kv("p", p), kv("r", r)),
                       std::move(got), std::move(want));
}

Rational compute_U(std::int64_t s, std::uint64_t u, std::uint64_t p, unsigned r) {
  require_odd_prime(p);
  require_positive({u, r}, "u and r");
  if (s % static_cast<std::int64_t>(p) == 0) {
    throw Error(Errc::PDividesS, "p=" + std::to_string(p) + " divides s=" + std::to_string(s));
  }
  if (s < 1) throw Error(Errc::PreconditionViolated, "U(s; u, p^r) is only evaluated for s >= 1");
  const std::uint64_t terms = u * detail::to_u64(int_pow(p, r - 1));
  Rational sum = 0;
  for (std::uint64_t k = 0; k < terms; ++k) sum += unit_fraction(k * p + static_cast<std::uint64_t>(s));
  return sum;
}

Rational UCache::get(std::int64_t s, std::uint64_t u, std::uint64_t p, unsigned r) {
  const auto key = std::make_tuple(s, u, p, r);
  {
    std::lock_guard lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  Rational value = compute_U(s, u, p, r);
  std::lock_guard lock(mutex_);
  return values_.emplace(key, std::move(value)).first->second;
}

namespace {

Rational U_value(std::int64_t s, std::uint64_t u, std::uint64_t p, unsigned r, UCache* cache) {
  return cache ? cache->get(s, u, p, r) : compute_U(s, u, p, r);
}

}  // namespace

LemmaInstance U_part_a(std::int64_t s, std::uint64_t u, std::uint64_t p, unsigned r, UCache* cache) {
  const unsigned e = r == 1 ? 2 : r + 2;
  Rational lifted = U_value(s, u, p, r + 1, cache);
  Rational scaled = Rational(Integer(p)) * U_value(s, u, p, r, cache);
  return make_instance("U(a)", params(kv("s", s), kv("u", u), kv("p", p), kv("r", r)), reduce_rational(lifted, p, e),
                       reduce_rational(scaled, p, e));
}

LemmaInstance U_part_b(std::int64_t s, std::uint64_t u, std::uint64_t p, unsigned r, UCache* cache) {
  Rational value = U_value(s, u, p, r, cache);
  LemmaInstance out = make_instance("U(b)", params(kv("s", s), kv("u", u), kv("p", p), kv("r", r)),
                                    reduce_rational(value, p, r - 1), Residue::zero(int_pow(p, r - 1)));
  out.match = out.match && p_valuation(value, p) >= static_cast<long>(r) - 1;
  return out;
}

LemmaInstance U_part_c(std::int64_t s, std::int64_t t, std::uint64_t u, std::uint64_t v, std::uint64_t p, unsigned r,
                       UCache* cache) {
  if (r < 2) throw Error(Errc::PreconditionViolated, "U part (c) needs r >= 2");
  const unsigned e = 2 * r + 2;
  // Each U is p-integral, so reducing the factors before multiplying gives the
  // residue of the exact product without forming it.
  auto red = [&](std::int64_t x, std::uint64_t y, unsigned k) { return reduce_rational(U_value(x, y, p, k, cache), p, e); };
  Residue lifted = red(s, u, r + 1) * red(t, v, r + 1);
  Residue scaled = red(s, u, r) * red(t, v, r) * Integer(p * p);
  return make_instance("U(c)", params(kv("s", s), kv("t", t), kv("u", u), kv("v", v), kv("p", p), kv("r", r)),
                       std::move(lifted), std::move(scaled));
}

LemmaInstance U_part_d(std::int64_t s, std::int64_t t, std::uint64_t u, std::uint64_t v, std::uint64_t p, unsigned r,
                       UCache* cache) {
  if (r < 2) throw Error(Errc::PreconditionViolated, "U part (d) needs r >= 2");
  const unsigned e = 2 * r;
  Residue product = reduce_rational(U_value(s, u, p, r, cache), p, e) * reduce_rational(U_value(t, v, p, r, cache), p, e);

  // Fractions read as inverses mod p^{2r}; forming them as rationals and
  // reducing once is the same thing.
  const Rational S = int_rational(Integer(s)), T = int_rational(Integer(t));
  const Rational uv = int_rational(Integer(u) * v);
  const Rational lead = uv / (S * T) * Rational(int_pow(p, 2 * r - 2));
  Rational correction;
  if (p == 3) {
    correction = (uv * (T + 1) / (S * T * T * T) + uv * (S + 1) / (S * S * S * T)) / 2;
  } else {
    correction = (uv / (S * T * T) + uv / (S * S * T)) / 2;
  }
  Rational closed = lead + correction * Rational(int_pow(p, 2 * r - 1));
  return make_instance("U(d)", params(kv("s", s), kv("t", t), kv("u", u), kv("v", v), kv("p", p), kv("r", r)),
                       std::move(product), reduce_rational(closed, p, e));
}

std::vector<LemmaInstance> check_U_congruences(std::int64_t s, std::int64_t t, std::uint64_t u, std::uint64_t v,
                                               std::uint64_t p, unsigned r, UCache* cache) {
  if (t % static_cast<std::int64_t>(p) == 0) {
    throw Error(Errc::PDividesS, "p=" + std::to_string(p) + " divides t=" + std::to_string(t));
  }
  std::vector<LemmaInstance> out;
  out.push_back(U_part_a(s, u, p, r, cache));
  out.push_back(U_part_b(s, u, p, r, cache));
  if (r >= 2) {
    out.push_back(U_part_c(s, t, u, v, p, r, cache));
    out.push_back(U_part_d(s, t, u, v, p, r, cache));
  }
  return out;
}

std::uint64_t h_of_k(std::uint64_t k, std::int64_t a, std::uint64_t c, std::uint64_t p) {
  require_odd_prime(p);
  require_positive({k, c}, "k and c");
  if (k % p == 0) throw Error(Errc::PreconditionViolated, "k must be coprime to p");
  const auto cp = static_cast<std::int64_t>(c * p);
  const auto a_abs = static_cast<std::uint64_t>(a < 0 ? -a : a);
  if (std::gcd(a_abs, c * p) != 1) throw Error(Errc::PreconditionViolated, "a must be coprime to cp");
  const std::int64_t ak = ((a % cp) * static_cast<std::int64_t>(k % static_cast<std::uint64_t>(cp))) % cp;
  return static_cast<std::uint64_t>((ak + cp) % cp);
}

LemmaInstance hk_pair_sum(std::int64_t a, std::uint64_t c, std::uint64_t p) {
  require_odd_prime(p);
  if (c == 0 || c % p == 0) throw Error(Errc::PreconditionViolated, "c must be positive and coprime to p");
  Rational sum = 0;
  for (std::uint64_t k = 1; k < c * p; ++k) {
    if (k % p == 0) continue;
    sum += Rational(Integer(1), Integer(k) * h_of_k(k, a, c, p));
  }
  const Rational A = int_rational(Integer(static_cast<long>(a)));
  const Rational C = int_rational(Integer(c));
  Rational closed;
  if (p == 3) {
    closed = -C / (A * A * A);
  } else {
    closed = C * (A * A + 1) / (3 * A) * Rational(Integer(p)) * bernoulli_number(p - 3);
  }
  return make_instance("h(k)", params(kv("a", a), kv("c", c), kv("p", p)), reduce_rational(sum, p, 2),
                       reduce_rational(closed, p, 2));
}

LemmaInstance double_sum_mod_cp(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t u, std::uint64_t v,
                                std::uint64_t p, unsigned r) {
  require_odd_prime(p);
  require_positive({a, b, c, u, v, r}, "a, b, c, u, v and r");
  if (a % p == 0 || b % p == 0 || c % p == 0) throw Error(Errc::PreconditionViolated, "p must not divide a, b or c");
  if (std::gcd(a, c) != 1 || std::gcd(b, c) != 1) throw Error(Errc::PreconditionViolated, "a and b must be coprime to c");
  const std::uint64_t pr = detail::to_u64(int_pow(p, r));
  const Rational sum = paired_inverse_sum(a, b, c * p, u * c * pr, v * c * pr, p);

  const Integer A = a, B = b, C = c, U = u, V = v;
  Rational closed;
  if (p == 3) {
    if (r == 1) {
      closed = Rational(Integer(-U * V * A * A * A * B * B * B * C));
    } else {
      closed = Rational(Integer(-int_pow(3, 2 * r - 2) * U * V * (A * A * A * B * B * B * C + 3 * A * B * C)));
    }
  } else {
    closed = Rational(int_pow(p, 2 * r - 1)) * bernoulli_number(p - 3) *
             normalize(U * V * C * (A * A + B * B), 3 * A * B);
  }
  return make_instance("mod-cp",
                       params(kv("a", a), kv("b", b), kv("c", c), kv("u", u), kv("v", v), kv("p", p), kv("r", r)),
                       reduce_rational(sum, p, 2 * r), reduce_rational(closed, p, 2 * r));
}

std::vector<LemmaInstance> floor_weighted_sum(std::uint64_t a, std::uint64_t c, std::uint64_t p) {
  require_odd_prime(p);
  require_positive({a, c}, "a and c");
  if (c % p == 0 || std::gcd(a, c * p) != 1) throw Error(Errc::PreconditionViolated, "need gcd(a, cp) = 1, p not | c");
  const std::uint64_t cp = c * p;
  const std::uint64_t weight_exp = p == 3 ? 1 : p - 4;
  std::uint64_t poly_sum = 0;
  Rational cubic_sum = 0;
  for (std::uint64_t k = 1; k < cp; ++k) {
    if (k % p == 0) continue;
    const std::uint64_t fl = a * k / cp;
    poly_sum = (poly_sum + pow_mod(k, weight_exp, p) * (fl % p)) % p;
    cubic_sum += normalize(fl, Integer(k) * k * k);
  }
  const Rational A = int_rational(Integer(a));
  Rational closed;
  if (p == 3) {
    closed = (A * A - 1) / (12 * A);
  } else {
    closed = (A * A * A - A) / 3 * bernoulli_number(p - 3);
  }
  const Residue want = reduce_rational(closed, p, 1);
  const std::string id = p == 3 ? "floor-2" : "floor";
  const std::string ps = params(kv("a", a), kv("c", c), kv("p", p));
  std::vector<LemmaInstance> out;
  out.push_back(make_instance(id, ps, Residue::of(Integer(poly_sum), Integer(p)), want));
  out.push_back(make_instance(id + "-cubic", ps, reduce_rational(cubic_sum, p, 1), want));
  return out;
}

LemmaInstance inverse_power_sum(unsigned e, std::uint64_t c_or_s, std::uint64_t p) {
  require_odd_prime(p);
  require_positive({c_or_s}, "bound parameter");
  const std::uint64_t bound = c_or_s * p;
  Rational sum = 0;
  for (std::uint64_t k = 1; k < bound; ++k) {
    if (k % p == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), k, e);
    sum += Rational(Integer(1), pw);
  }
  const Rational X = int_rational(Integer(c_or_s));
  std::string id;
  unsigned power = 0;
  Rational closed;
  if (e == 2 && p == 3) {
    id = "3c-1", power = 2, closed = -X;
  } else if (e == 2) {
    id = "hong", power = 2, closed = 2 * X / 3 * Rational(Integer(p)) * bernoulli_number(p - 3);
  } else if (e == 3) {
    id = "inv-cube", power = 1, closed = 0;
  } else if (e == 4 && p == 3) {
    id = "inv-fourth", power = 1, closed = -X;
  } else {
    throw Error(Errc::PreconditionViolated,
                "no inverse power sum congruence for e=" + std::to_string(e) + ", p=" + std::to_string(p));
  }
  return make_instance(id, params(kv("e", e), kv(id == "3c-1" ? "s" : "c", c_or_s), kv("p", p)),
                       reduce_rational(sum, p, power), reduce_rational(closed, p, power));
}

}  // namespace congruence_lab
