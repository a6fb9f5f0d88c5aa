#include "congruence_lab/bernoulli.hpp"

#include <mutex>

namespace congruence_lab {

namespace {

void extend(std::vector<Rational>& values, std::size_t max_index) {
  if (values.empty()) values.emplace_back(1);
  std::vector<Integer> binom;  // row m+1 of Pascal's triangle, rebuilt per m
  for (std::size_t m = values.size(); m <= max_index; ++m) {
    binom.assign(m + 2, 0);
    for (std::size_t j = 0; j <= m + 1; ++j) {
      mpz_bin_uiui(binom[j].get_mpz_t(), m + 1, j);
    }
    Rational acc = 0;
    for (std::size_t j = 0; j < m; ++j) acc += binom[j] * values[j];
    Rational next = -acc / Rational(static_cast<unsigned long>(m + 1));
    next.canonicalize();
    values.push_back(std::move(next));
  }
}

std::mutex g_table_mutex;
std::vector<Rational> g_table;

}  // namespace

BernoulliTable bernoulli_exact(std::size_t max_index) {
  std::vector<Rational> values;
  values.reserve(max_index + 1);
  extend(values, max_index);
  return BernoulliTable(std::move(values));
}

Rational bernoulli_number(std::size_t m) {
  std::lock_guard lock(g_table_mutex);
  if (g_table.size() <= m) extend(g_table, m);
  return g_table[m];
}

Residue bernoulli_mod_p(std::size_t m, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(Errc::PreconditionViolated, "bernoulli_mod_p needs an odd prime, got " + std::to_string(p));
  }
  if (m > 0 && m % (p - 1) == 0) {
    throw Error(Errc::NotPIntegral, "B_" + std::to_string(m) + " has p=" + std::to_string(p) + " in its denominator");
  }
  return reduce_rational(bernoulli_number(m), p, 1);
}

bool check_von_staudt_clausen(std::uint64_t n) {
  if (n < 1) throw Error(Errc::PreconditionViolated, "von Staudt-Clausen check needs n >= 1");
  const std::uint64_t two_n = 2 * n;
  Rational sum = bernoulli_number(two_n);
  for (std::uint64_t d = 1; d <= two_n; ++d) {
    if (two_n % d == 0 && is_prime(d + 1)) sum += Rational(Integer(1), Integer(d + 1));
  }
  sum.canonicalize();
  return sum.get_den() == 1;
}

}  // namespace congruence_lab
