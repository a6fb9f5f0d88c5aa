// Acceptance run: one PASS/FAIL line per criterion, then details for failures.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "congruence_lab/bernoulli.hpp"
#include "congruence_lab/harmonic.hpp"
#include "congruence_lab/lemmas.hpp"
#include "congruence_lab/poly.hpp"
#include "congruence_lab/sweep.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace congruence_lab;

namespace {

struct Verdict {
  int number;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;
};

std::string row(const VerificationReport& r) {
  std::string s = "p=" + std::to_string(r.p) + " r=" + std::to_string(r.r) + " n=" + std::to_string(r.n) + " a=(" +
                  std::to_string(r.weights.a1) + "," + std::to_string(r.weights.a2) + "," +
                  std::to_string(r.weights.a3) + ") A=" + std::to_string(r.weights.A);
  if (r.induction) s += " q=" + std::to_string(r.induction->q) + " s=" + std::to_string(r.induction->s);
  return s + " lhs=" + to_string(r.lhs.value) + " rhs=" + to_string(r.rhs.value);
}

bool weights_prime_to_cofactor(const VerificationReport& r) {
  const std::uint64_t m = r.n / detail::to_u64(int_pow(r.p, r.r));
  return std::gcd(r.weights.a1 * r.weights.a2 * r.weights.a3, m) == 1;
}

void summarize_rows(Verdict& v, const std::vector<VerificationReport>& reports) {
  std::size_t bad = 0, coprime = 0, coprime_bad = 0;
  for (const auto& r : reports) {
    const bool cop = weights_prime_to_cofactor(r);
    coprime += cop;
    if (!r.match) {
      ++bad;
      coprime_bad += cop;
      v.notes.push_back("mismatch " + row(r));
    }
  }
  v.pass = bad == 0;
  v.notes.insert(v.notes.begin(), std::to_string(reports.size()) + " rows, " + std::to_string(bad) +
                                      " mismatches; rows with gcd(a1 a2 a3, n/p^r) = 1: " + std::to_string(coprime) +
                                      ", of which mismatching: " + std::to_string(coprime_bad));
}

// -2 B_{p-3} via the independent Bernoulli table, reduced mod p^e.
mpz_class zhao_value(std::uint64_t p, unsigned e, const mpq_class& factor) {
  static const auto table = oracle::bernoulli(40);
  mpq_class v = mpq_class(-2) * table[p - 3] * factor;
  v.canonicalize();
  return oracle::reduce(v, p, e);
}

mpq_class oracle_structure_factor(const WeightTriple& w) {
  mpq_class sum = 0;
  for (auto [a, g] : {std::pair{w.a1, w.g1}, std::pair{w.a2, w.g2}, std::pair{w.a3, w.g3}}) {
    sum += mpq_class(1, mpz_class(a * g) * (a * g));
  }
  mpq_class out = mpq_class(mpz_class(w.A) * w.g * w.g * w.g) * sum / 3;
  out.canonicalize();
  return out;
}

Verdict lemma_criterion(int number, const std::string& title, const std::vector<LemmaId>& ids) {
  Verdict v{number, title};
  for (auto id : ids) {
    const auto instances = run_lemma_grid(id);
    std::size_t bad = 0;
    for (const auto& inst : instances) {
      if (inst.match) continue;
      ++bad;
      if (bad <= 10) v.notes.push_back("mismatch " + inst.lemma + " " + inst.parameters);
    }
    v.notes.push_back(lemma_name(id) + ": " + std::to_string(instances.size()) + " instances, " +
                      std::to_string(bad) + " mismatches");
    if (bad != 0 || instances.empty()) v.pass = false;
  }
  return v;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Verdict> verdicts;

  const SweepConfig config = default_sweep_config();
  const auto points = expand_grid(config);
  const auto sweep_start = std::chrono::steady_clock::now();
  const auto reports = run_sweep(points, 1);
  const double sweep_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start).count();

  {
    Verdict v{1, "main grid: brute force equals closed form in Z/p^r"};
    summarize_rows(v, reports);
    v.notes.push_back("single-threaded sweep time " + std::to_string(sweep_seconds) + " s");
    if (sweep_seconds > 300) v.pass = false;
    verdicts.push_back(std::move(v));
  }

  {
    Verdict v{2, "main grid restricted to weights (1,1,1;1)"};
    std::vector<VerificationReport> unit;
    for (const auto& r : reports) {
      if (r.weights.a1 == 1 && r.weights.a2 == 1 && r.weights.a3 == 1 && r.weights.A == 1) unit.push_back(r);
    }
    summarize_rows(v, unit);
    if (unit.empty()) v.pass = false;
    verdicts.push_back(std::move(v));
  }

  {
    Verdict v{3, "n = p: both sides equal -2 B_{p-3} mod p"};
    const auto w = derive_gcd_structure(1, 1, 1, 1);
    for (std::uint64_t p : {5, 7, 11, 13}) {
      const mpz_class lhs = oracle::reduce(oracle::triple_sum(1, 1, 1, 1, p), p, 1);
      const mpz_class want = zhao_value(p, 1, 1);
      const auto report = verify_main_theorem(w, p, p);
      const bool ok = lhs == want && report.lhs.value == want && report.rhs.value == want;
      if (!ok) v.pass = false;
      v.notes.push_back("p=" + std::to_string(p) + " oracle lhs=" + lhs.get_str() + " -2B_{p-3}=" + want.get_str() +
                        " library lhs=" + to_string(report.lhs.value) + " rhs=" + to_string(report.rhs.value));
      if (p == 5 && want != 3) v.pass = false;
    }
    verdicts.push_back(std::move(v));
  }

  {
    Verdict v{4, "n = p^r: rhs equals -2 p^(r-1) B_{p-3} times the structure factor"};
    std::size_t checked = 0;
    for (auto p : config.primes) {
      for (auto r : config.exponents) {
        const std::uint64_t n = detail::to_u64(int_pow(p, r));
        for (const auto& wr : config.weights) {
          if (wr[0] % p == 0 || wr[1] % p == 0 || wr[2] % p == 0 || wr[3] * n > config.max_An) continue;
          const auto w = derive_gcd_structure(wr[0], wr[1], wr[2], wr[3]);
          mpz_class pr1;
          mpz_ui_pow_ui(pr1.get_mpz_t(), p, r - 1);
          const mpz_class want = zhao_value(p, r, mpq_class(pr1) * oracle_structure_factor(w));
          const bool ok = prime_power_rhs(w, p, r).value == want && closed_form_rhs(w, n, p, r).value == want;
          ++checked;
          if (!ok) {
            v.pass = false;
            v.notes.push_back("mismatch p=" + std::to_string(p) + " r=" + std::to_string(r));
          }
        }
      }
    }
    v.notes.push_back(std::to_string(checked) + " prime-power points");
    verdicts.push_back(std::move(v));
  }

  {
    Verdict v{5, "coefficient extraction equals brute force for An <= 600"};
    std::size_t checked = 0;
    for (const auto& point : points) {
      if (point.induction || point.weights.A * point.n > 600) continue;
      const Modulus mod(point.p, point.r);
      ++checked;
      const auto coeff = extract_triple_coefficient(point.weights, point.n, mod);
      const auto brute = triple_sum_bruteforce(point.weights, point.n, mod);
      if (!(coeff == brute)) {
        v.pass = false;
        v.notes.push_back("mismatch p=" + std::to_string(point.p) + " n=" + std::to_string(point.n));
      }
    }
    v.notes.push_back(std::to_string(checked) + " points");
    if (checked == 0) v.pass = false;
    verdicts.push_back(std::move(v));
  }

  verdicts.push_back(lemma_criterion(6, "auxiliary lemma grids",
                                     {LemmaId::ArithProg, LemmaId::ModC, LemmaId::U, LemmaId::HK, LemmaId::ModCp,
                                      LemmaId::Floor, LemmaId::PowerSums}));
  verdicts.push_back(lemma_criterion(7, "reflection and shift lemmas", {LemmaId::Reflection, LemmaId::Shift}));

  {
    Verdict v{8, "induction step over q^s n"};
    const std::vector<std::array<std::uint64_t, 3>> bases{{3, 1, 3}, {5, 1, 5}, {3, 2, 9}, {7, 1, 7}};
    const std::vector<std::array<std::uint64_t, 4>> weights{{1, 1, 1, 1}, {1, 2, 3, 6}};
    std::vector<VerificationReport> rows;
    std::size_t parity_rows = 0;
    for (const auto& [p, r, n] : bases) {
      for (std::uint64_t q : {2, 3, 5, 7}) {
        if (q == p || n % q == 0) continue;
        for (unsigned s : {1u, 2u}) {
          for (const auto& wr : weights) {
            if (wr[0] % p == 0 || wr[1] % p == 0 || wr[2] % p == 0) continue;
            if (wr[3] * detail::to_u64(int_pow(q, s)) * n > 3000) continue;
            const auto w = derive_gcd_structure(wr[0], wr[1], wr[2], wr[3]);
            auto report = check_induction_step(w, n, p, static_cast<unsigned>(r), q, s);
            if (q == 2 && wr[0] == 1 && wr[1] == 1 && wr[2] == 1) {
              ++parity_rows;
              if (report.lhs.value != 0 || report.rhs.value != 0) {
                v.pass = false;
                v.notes.push_back("parity case not zero: " + row(report));
              }
            }
            rows.push_back(std::move(report));
          }
        }
      }
    }
    const bool parity_ok = v.pass;
    summarize_rows(v, rows);
    v.pass = v.pass && parity_ok && parity_rows > 0;
    v.notes.push_back(std::to_string(parity_rows) + " parity rows for (1,1,1) with q=2");
    verdicts.push_back(std::move(v));
  }

  {
    Verdict v{9, "randomized property invariants (fixed seed)"};
    std::mt19937_64 rng(20240917);
    const std::pair<const char*, props::Outcome> outcomes[] = {
        {"permutation symmetry", props::permutation_symmetry(rng, 200)},
        {"common scaling", props::common_scaling(rng, 200)},
        {"multiple-of-A linearity", props::multiple_linearity(rng, 200)},
        {"reduced-weight sum identity", props::reduce_identity(rng, 200)},
        {"Bernoulli dual path", props::bernoulli_dual_path(rng, 200)},
        {"von Staudt-Clausen n <= 30", props::von_staudt_clausen()},
    };
    for (const auto& [name, o] : outcomes) {
      v.notes.push_back(std::string(name) + ": " + std::to_string(o.cases) + " cases, " +
                        std::to_string(o.failures.size()) + " failures");
      for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) v.notes.push_back("  failing " + o.failures[i]);
      if (!o.ok()) v.pass = false;
    }
    verdicts.push_back(std::move(v));
  }

  bool all = true;
  for (const auto& v : verdicts) {
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << v.number << ": " << v.title << '\n';
    all = all && v.pass;
  }
  std::cout << '\n';
  for (const auto& v : verdicts) {
    std::cout << "criterion " << v.number << ":\n";
    for (const auto& note : v.notes) std::cout << "  " << note << '\n';
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total time " << total << " s\n";
  return all ? 0 : 1;
}
