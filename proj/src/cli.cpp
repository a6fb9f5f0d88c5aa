#include "congruence_lab/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "congruence_lab/bernoulli.hpp"
#include "congruence_lab/lemmas.hpp"
#include "congruence_lab/sweep.hpp"

namespace congruence_lab {

namespace {

struct VerifyOptions {
  std::optional<std::uint64_t> p;
  std::optional<unsigned> r;
  std::optional<std::uint64_t> cofactor;
  std::optional<std::uint64_t> n;
  std::vector<std::uint64_t> weights;
  std::uint64_t A = 0;
  std::string format = "human";
};

struct SweepOptions {
  std::string config_path;
  std::optional<std::string> format;
  std::optional<unsigned> threads;
  std::optional<std::vector<std::uint64_t>> primes;
  std::optional<std::vector<unsigned>> exponents;
  std::optional<std::vector<std::uint64_t>> cofactors;
  std::optional<std::uint64_t> max_An;
  std::vector<std::uint64_t> induction_q;
  std::vector<unsigned> induction_s;
};

struct LemmaOptions {
  std::vector<std::string> ids;
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> exponents;
  std::vector<std::uint64_t> N_values;
  bool failures_only = false;
};

struct BernoulliOptions {
  std::size_t max_index = 0;
  std::optional<std::uint64_t> mod_p;
  bool check_vsc = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.weights.size() != 3) throw Error(Errc::InvalidWeights, "--weights takes exactly three values a1,a2,a3");
  if (!o.p) throw Error(Errc::PreconditionViolated, "--p is required");
  const std::uint64_t p = *o.p;
  std::uint64_t n = 0;
  if (o.n) {
    if (o.r || o.cofactor) throw Error(Errc::PreconditionViolated, "give either --n or --r/--cofactor, not both");
    n = *o.n;
    if (n == 0 || n % p != 0) throw Error(Errc::PNotDivisor, "p=" + std::to_string(p) + " must divide n");
  } else {
    if (!o.r) throw Error(Errc::PreconditionViolated, "--r is required unless --n is given");
    const std::uint64_t m = o.cofactor.value_or(1);
    if (m == 0) throw Error(Errc::PreconditionViolated, "--cofactor must be positive");
    if (m % p == 0) throw Error(Errc::ExactPowerViolated, "cofactor must be coprime to p");
    const Integer full = int_pow(p, *o.r) * m;
    if (!detail::fits_word(full)) throw Error(Errc::PreconditionViolated, "n is too large");
    n = detail::to_u64(full);
  }
  const WeightTriple w = derive_gcd_structure(o.weights[0], o.weights[1], o.weights[2], o.A);
  const VerificationReport report = verify_main_theorem(w, n, p);
  out << encode({report}, parse_output_format(o.format));
  return report.match ? kExitMatch : kExitMismatch;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  SweepConfig config = o.config_path.empty() ? default_sweep_config() : parse_sweep_config(read_file(o.config_path));
  if (o.primes) config.primes = *o.primes;
  if (o.exponents) config.exponents = *o.exponents;
  if (o.cofactors) config.cofactors = *o.cofactors;
  if (o.max_An) config.max_An = *o.max_An;
  if (o.format) config.format = parse_output_format(*o.format);
  if (!o.induction_q.empty() || !o.induction_s.empty()) {
    InductionRange range{o.induction_q, o.induction_s};
    if (range.s.empty()) range.s = {1};
    config.induction = std::move(range);
  }
  for (auto p : config.primes) {
    if (p < 3 || !is_prime(p)) throw Error(Errc::ConfigError, "primes must be odd primes, got " + std::to_string(p));
  }

  const auto points = expand_grid(config);
  const auto reports = run_sweep(points, resolve_threads(o.threads, config.threads));
  out << encode(reports, config.format);
  for (const auto& r : reports) {
    if (!r.match) return kExitMismatch;
  }
  return kExitMatch;
}

int cmd_lemmas(const LemmaOptions& o, std::ostream& out) {
  std::vector<LemmaId> ids;
  if (o.ids.empty()) {
    ids = all_lemma_ids();
  } else {
    for (const auto& name : o.ids) ids.push_back(parse_lemma_id(name));
  }
  const LemmaGrid grid{o.primes, o.exponents, o.N_values};

  std::size_t total = 0, mismatches = 0;
  for (auto id : ids) {
    for (const auto& inst : run_lemma_grid(id, grid)) {
      ++total;
      if (!inst.match) ++mismatches;
      if (o.failures_only && inst.match) continue;
      out << inst.lemma << "  " << inst.parameters << "  computed=" << inst.computed.value
          << " expected=" << inst.expected.value << " (mod " << inst.computed.modulus << ")  "
          << (inst.match ? "match" : "MISMATCH") << '\n';
    }
  }
  out << total << " instances, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitMatch : kExitMismatch;
}

int cmd_bernoulli(const BernoulliOptions& o, std::ostream& out) {
  if (o.mod_p && !is_prime(*o.mod_p)) throw Error(Errc::PreconditionViolated, "--mod-p must be prime");
  const BernoulliTable table = bernoulli_exact(o.max_index);
  for (std::size_t m = 0; m <= o.max_index; ++m) {
    out << m << '\t' << to_string(table[m]);
    if (o.mod_p) {
      const std::uint64_t p = *o.mod_p;
      if (table[m].get_den() % p == 0) {
        out << "\t-";
      } else {
        out << '\t' << reduce_rational_mod(table[m], Integer(p)).value;
      }
    }
    if (o.check_vsc) {
      if (m >= 2 && m % 2 == 0) {
        out << '\t' << (check_von_staudt_clausen(m / 2) ? "vsc-ok" : "vsc-FAIL");
      } else {
        out << "\t-";
      }
    }
    out << '\n';
  }
  return kExitMatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic triple sums modulo odd prime powers", "congruence_lab"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "check one instance of the main congruence");
  verify->add_option("--p", vo.p, "odd prime p");
  verify->add_option("--r", vo.r, "exponent r with p^r exactly dividing n");
  verify->add_option("--cofactor", vo.cofactor, "n = p^r * cofactor (default 1)");
  verify->add_option("--n", vo.n, "give n directly; r is its p-adic valuation");
  verify->add_option("--weights", vo.weights, "a1,a2,a3")->delimiter(',')->required();
  verify->add_option("--A", vo.A, "common multiple A of the weights")->required();
  verify->add_option("--format", vo.format, "human | json | csv");

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep", "run the main congruence over a parameter grid");
  sweep->add_option("--config", so.config_path, "JSON sweep config");
  sweep->add_option("--format", so.format, "human | json | csv");
  sweep->add_option("--threads", so.threads, "worker threads (overrides CONGRUENCE_LAB_THREADS)");
  sweep->add_option("--primes", so.primes, "comma-separated odd primes")->delimiter(',');
  sweep->add_option("--exponents", so.exponents, "comma-separated exponents r")->delimiter(',');
  sweep->add_option("--cofactors", so.cofactors, "comma-separated cofactors")->delimiter(',');
  sweep->add_option("--max-An", so.max_An, "skip points with A n above this bound");
  sweep->add_option("--induction-q", so.induction_q, "primes q for induction-step rows")->delimiter(',');
  sweep->add_option("--induction-s", so.induction_s, "exponents s for induction-step rows")->delimiter(',');

  LemmaOptions lo;
  auto* lemmas = app.add_subcommand("lemmas", "check the auxiliary congruences over their grids");
  lemmas->add_option("--id", lo.ids, "lemma ids (default: all)")->delimiter(',');
  lemmas->add_option("--p", lo.primes, "override the prime list")->delimiter(',');
  lemmas->add_option("--r", lo.exponents, "override the exponent list")->delimiter(',');
  lemmas->add_option("--N", lo.N_values, "moduli for reflection and shift")->delimiter(',');
  lemmas->add_flag("--failures-only", lo.failures_only, "print only mismatching rows");

  BernoulliOptions bo;
  auto* bern = app.add_subcommand("bernoulli", "print exact Bernoulli numbers");
  bern->add_option("--max-index", bo.max_index, "largest index m")->required();
  bern->add_option("--mod-p", bo.mod_p, "also reduce modulo this prime");
  bern->add_flag("--check-vsc", bo.check_vsc, "von Staudt-Clausen integrality column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitMatch;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(vo, out);
    if (*sweep) return cmd_sweep(so, out);
    if (*lemmas) return cmd_lemmas(lo, out);
    if (*bern) return cmd_bernoulli(bo, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace congruence_lab
