#include <numeric>

#include "congruence_lab/lemmas.hpp"
#include "congruence_lab/poly.hpp"
#include "congruence_lab/sweep.hpp"

namespace congruence_lab {

namespace {

struct NamedId {
  LemmaId id;
  const char* name;
};

constexpr NamedId kNames[] = {
    {LemmaId::ArithProg, "arith-prog"}, {LemmaId::ModC, "mod-c"},         {LemmaId::U, "U"},
    {LemmaId::HK, "h(k)"},              {LemmaId::ModCp, "mod-cp"},       {LemmaId::Floor, "floor"},
    {LemmaId::PowerSums, "power-sums"}, {LemmaId::Key, "key"},            {LemmaId::Reflection, "reflection"},
    {LemmaId::Shift, "shift"},          {LemmaId::Induction, "induction"}, {LemmaId::EightPart, "eight-part"},
};

std::vector<std::uint64_t> pick(const std::vector<std::uint64_t>& override, std::vector<std::uint64_t> fallback) {
  return override.empty() ? fallback : override;
}

std::vector<unsigned> pick(const std::vector<unsigned>& override, std::vector<unsigned> fallback) {
  return override.empty() ? fallback : override;
}

bool coprime(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b) == 1; }

std::string triple_params(const WeightTriple& w, std::uint64_t n) {
  return "a=(" + std::to_string(w.a1) + "," + std::to_string(w.a2) + "," + std::to_string(w.a3) +
         ") A=" + std::to_string(w.A) + " n=" + std::to_string(n);
}

std::vector<WeightTriple> weight_sets(std::initializer_list<std::array<std::uint64_t, 4>> rows) {
  std::vector<WeightTriple> out;
  for (const auto& row : rows) out.push_back(derive_gcd_structure(row[0], row[1], row[2], row[3]));
  return out;
}

std::vector<WeightTriple> default_weight_sets() {
  std::vector<WeightTriple> out;
  for (const auto& row : default_sweep_config().weights) out.push_back(derive_gcd_structure(row[0], row[1], row[2], row[3]));
  return out;
}

struct InductionBase {
  std::uint64_t p;
  unsigned r;
  std::uint64_t n;
};

constexpr InductionBase kInductionBases[] = {{3, 1, 3}, {5, 1, 5}, {3, 2, 9}, {7, 1, 7}};
constexpr std::uint64_t kInductionQ[] = {2, 3, 5, 7};

bool weights_valid(const WeightTriple& w, std::uint64_t p) {
  return w.a1 % p != 0 && w.a2 % p != 0 && w.a3 % p != 0;
}

void run_arith_prog(const LemmaGrid& g, std::vector<LemmaInstance>& out) {
  for (auto p : pick(g.primes, {3, 5, 7})) {
    for (auto r : pick(g.exponents, {1, 2})) {
      for (std::uint64_t u = 1; u <= 3; ++u) {
        for (std::uint64_t m = 1; m <= 6; ++m) {
          if (m % p == 0) continue;
          for (std::uint64_t ell = 0; ell < m; ++ell) out.push_back(arith_prog_instance(u, m, ell, p, r));
        }
      }
    }
  }
}

void run_mod_c(const LemmaGrid& g, std::vector<LemmaInstance>& out) {
  for (auto p : pick(g.primes, {3, 5})) {
    for (auto r : pick(g.exponents, {1, 2})) {
      for (std::uint64_t c : {1, 2, 3, 5}) {
        if (c % p == 0) continue;
        for (std::uint64_t a = 1; a <= 4; ++a) {
          for (std::uint64_t b = 1; b <= 4; ++b) {
            if (!coprime(a, c) || !coprime(b, c)) continue;
            for (std::uint64_t u = 1; u <= 2; ++u) {
              for (std::uint64_t v = 1; v <= 2; ++v) out.push_back(double_sum_same_residue_instance(a, b, c, u, v, p, r));
            }
          }
        }
      }
    }
  }
}

void run_U(const LemmaGrid& g, std::vector<LemmaInstance>& out) {
  UCache cache;
  for (auto p : pick(g.primes, {3, 5, 7})) {
    std::vector<std::int64_t> residues;
    for (std::uint64_t s = 1; s < p * p; ++s) {
      if (s % p != 0) residues.push_back(static_cast<std::int64_t>(s));
    }
    for (auto r : pick(g.exponents, {1, 2, 3})) {
      for (auto s : residues) {
        for (std::uint64_t u = 1; u <= 3; ++u) {
          out.push_back(U_part_a(s, u, p, r, &cache));
          out.push_back(U_part_b(s, u, p, r, &cache));
        }
      }
      if (r < 2) continue;
      for (auto s : residues) {
        for (auto t : residues) {
          for (std::uint64_t u = 1; u <= 3; ++u) {
            for (std::uint64_t v = 1; v <= 3; ++v) {
              out.push_back(U_part_c(s, t, u, v, p, r, &cache));
              out.push_back(U_part_d(s, t, u, v, p, r, &cache));
            }
          }
        }
      }
    }
  }
}

void run_hk(const LemmaGrid& g, std::vector<LemmaInstance>& out) {
  for (auto p : pick(g.primes, {3, 5, 7})) {
    for (std::uint64_t c : {1, 2, 5}) {
      if (c % p == 0) continue;
      for (std::uint64_t a = 1; a <= 5; ++a) {
        if (coprime(a, c * p)) out.push_back(hk_pair_sum(static_cast<std::int64_t>(a), c, p));
      }
    }
  }
}

void run_mod_cp(const LemmaGrid& g, std::vector<LemmaInstance>& out) {
  for (auto p : pick(g.primes, {3, 5, 7})) {
    for (auto r : pick(g.exponents, {1, 2})) {
      for (std::uint64_t c : {1, 2, 5}) {
        if (c % p == 0) continue;
        for (std::uint64_t a = 1; a <= 5; ++a) {
          for (std::uint64_t b = 1; b <= 5; ++b) {
            if (a % p == 0 || b % p == 0 || !coprime(a, c) || !coprime(b, c)) continue;
            for (std::uint64_t u = 1; u <= 2; ++u) {
              for (std::uint64_t v = 1; v <= 2; ++v) out.push_back(double_sum_mod_cp(a, b, c, u, v, p, r));
            }
          }
        }
      }
    }
  }
}

void run_floor(const LemmaGrid& g, std::vector<LemmaInstance>& out) {
  for (auto p : pick(g.primes, {3, 5, 7, 11, 13})) {
    for (std::uint64_t c : {1, 2, 5}) {
      if (c % p == 0) continue;
      for (std::uint64_t a = 1; a <= 10; ++a) {
        if (!coprime(a, c * p)) continue;
        for (auto& inst : floor_weighted_sum(a, c, p)) out.push_back(std::move(inst));
      }
    }
  }
}

void run_power_sums(const LemmaGrid& g, std::vector<LemmaInstance>& out) {
  for (auto p : pick(g.primes, {3, 5, 7, 11, 13})) {
    for (std::uint64_t s = 1; s <= (p == 3 ? 30u : 10u); ++s) out.push_back(inverse_power_sum(2, s, p));
    for (std::uint64_t c = 1; c <= 10; ++c) out.push_back(inverse_power_sum(3, c, p));
    if (p != 3) continue;
    for (std::uint64_t c = 1; c <= 10; ++c) out.push_back(inverse_power_sum(4, c, p));
  }
}

void run_key(const LemmaGrid& g, std::vector<LemmaInstance>& out) {
  SweepConfig config = default_sweep_config();
  if (!g.primes.empty()) config.primes = g.primes;
  if (!g.exponents.empty()) config.exponents = g.exponents;
  config.max_An = 600;
  for (const auto& point : expand_grid(config)) {
    const Modulus modulus(point.p, point.r);
    out.push_back(make_instance("key", "p=" + std::to_string(point.p) + " " + triple_params(point.weights, point.n),
                                extract_triple_coefficient(point.weights, point.n, modulus),
                                triple_sum_bruteforce(point.weights, point.n, modulus)));
  }
}

void run_reflection(const LemmaGrid& g, std::vector<LemmaInstance>& out) {
  for (auto N : pick(g.N_values, {3, 5, 9, 15})) {
    for (const auto& w : default_weight_sets()) {
      const ReflectionCheck check = reflection_details(w, N);
      LemmaInstance inst{"reflection", triple_params(w, N) + " degree=" + std::to_string(check.degree),
                         check.coeff_2AN, -check.coeff_AN, false};
      inst.match = check.ok();
      out.push_back(std::move(inst));
    }
  }
}

void run_shift(const LemmaGrid& g, std::vector<LemmaInstance>& out) {
  for (auto N : pick(g.N_values, {3, 5, 9, 15})) {
    for (std::uint64_t L = 1; L <= 4; ++L) {
      for (std::uint64_t M = 1; M <= 4; ++M) {
        // A pass/fail indicator mod N: 0 when every coefficient agrees.
        const bool ok = check_shift_lemma(L, M, N);
        out.push_back(make_instance("shift",
                                    "L=" + std::to_string(L) + " M=" + std::to_string(M) + " N=" + std::to_string(N),
                                    Residue::of(Integer(ok ? 0 : 1), Integer(N)), Residue::zero(Integer(N))));
      }
    }
  }
}

void run_induction(const LemmaGrid&, std::vector<LemmaInstance>& out) {
  for (const auto& base : kInductionBases) {
    for (const auto& w : weight_sets({{1, 1, 1, 1}, {1, 2, 3, 6}})) {
      if (!weights_valid(w, base.p)) continue;
      for (auto q : kInductionQ) {
        if (q == base.p || base.n % q == 0) continue;
        for (unsigned s : {1u, 2u}) {
          if (Integer(w.A) * base.n * int_pow(q, s) > 3000) continue;
          const VerificationReport rep = check_induction_step(w, base.n, base.p, base.r, q, s);
          LemmaInstance inst = make_instance(
              "induction",
              "p=" + std::to_string(base.p) + " " + triple_params(w, base.n) + " q=" + std::to_string(q) +
                  " s=" + std::to_string(s),
              rep.lhs, rep.rhs);
          out.push_back(std::move(inst));
        }
      }
    }
  }
}

void run_eight_part(const LemmaGrid&, std::vector<LemmaInstance>& out) {
  for (const auto& base : kInductionBases) {
    const Modulus modulus(base.p, base.r);
    for (const auto& w : weight_sets({{1, 1, 1, 1}, {1, 2, 3, 6}, {2, 3, 4, 12}})) {
      if (!weights_valid(w, base.p)) continue;
      for (auto q : kInductionQ) {
        if (q == base.p || base.n % q == 0 || w.A * base.n * q > 3000) continue;
        const auto parts = eight_part_decomposition(w, base.n, q, modulus);
        Residue total = Residue::zero(modulus.value());
        for (const auto& part : parts) total = total + part;
        out.push_back(make_instance("eight-part",
                                    "p=" + std::to_string(base.p) + " " + triple_params(w, base.n) +
                                        " q=" + std::to_string(q),
                                    total, triple_sum_bruteforce(w, q * base.n, modulus)));
      }
    }
  }
}

}  // namespace

const std::vector<LemmaId>& all_lemma_ids() {
  static const std::vector<LemmaId> ids = [] {
    std::vector<LemmaId> v;
    for (const auto& entry : kNames) v.push_back(entry.id);
    return v;
  }();
  return ids;
}

std::string lemma_name(LemmaId id) {
  for (const auto& entry : kNames) {
    if (entry.id == id) return entry.name;
  }
  return "unknown";
}

LemmaId parse_lemma_id(const std::string& name) {
  for (const auto& entry : kNames) {
    if (name == entry.name) return entry.id;
  }
  if (name == "hk") return LemmaId::HK;
  throw Error(Errc::UnknownLemma, "'" + name + "'");
}

std::vector<LemmaInstance> run_lemma_grid(LemmaId id, const LemmaGrid& grid) {
  std::vector<LemmaInstance> out;
  switch (id) {
    case LemmaId::ArithProg: run_arith_prog(grid, out); break;
    case LemmaId::ModC: run_mod_c(grid, out); break;
    case LemmaId::U: run_U(grid, out); break;
    case LemmaId::HK: run_hk(grid, out); break;
    case LemmaId::ModCp: run_mod_cp(grid, out); break;
    case LemmaId::Floor: run_floor(grid, out); break;
    case LemmaId::PowerSums: run_power_sums(grid, out); break;
    case LemmaId::Key: run_key(grid, out); break;
    case LemmaId::Reflection: run_reflection(grid, out); break;
    case LemmaId::Shift: run_shift(grid, out); break;
    case LemmaId::Induction: run_induction(grid, out); break;
    case LemmaId::EightPart: run_eight_part(grid, out); break;
  }
  return out;
}

}  // namespace congruence_lab
