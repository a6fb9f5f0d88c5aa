#pragma once

// Parameter sweeps over (p, r, cofactor, weights) and their report encoders.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congruence_lab/harmonic.hpp"

namespace congruence_lab {

enum class OutputFormat { Human, Json, Csv };

OutputFormat parse_output_format(const std::string& name);  // throws ConfigError

struct InductionRange {
  std::vector<std::uint64_t> q;
  std::vector<unsigned> s;
};

struct SweepConfig {
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> exponents;
  std::vector<std::uint64_t> cofactors;
  std::vector<std::array<std::uint64_t, 4>> weights;  // a1, a2, a3, A
  std::uint64_t max_An = 3000;
  std::optional<InductionRange> induction;
  OutputFormat format = OutputFormat::Human;
  unsigned threads = 1;
};

/// The main-theorem grid: p in {3,5,7,11,13}, r in {1,2}, the six weight sets,
/// cofactors {1,2,4,7,14,15,21,35} (those coprime to p), An <= 3000.
SweepConfig default_sweep_config();

/// Strict JSON reader; unknown keys and wrong types raise ConfigError. Missing
/// keys keep the defaults above.
SweepConfig parse_sweep_config(const std::string& json_text);

struct GridPoint {
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t cofactor = 1;
  std::uint64_t n = 0;
  WeightTriple weights;
  std::optional<InductionParams> induction;
};

/// Cofactors sharing p and weights divisible by p are skipped, as are points
/// with A n above max_An. Induction points follow the plain points.
std::vector<GridPoint> expand_grid(const SweepConfig& config);

VerificationReport evaluate_point(const GridPoint& point);

/// Evaluates every point on `threads` workers; output order equals input order.
std::vector<VerificationReport> run_sweep(const std::vector<GridPoint>& points, unsigned threads);

/// --threads flag, then CONGRUENCE_LAB_THREADS, then the config value, then 1.
unsigned resolve_threads(std::optional<unsigned> flag, unsigned config_value);

std::string encode_human(const std::vector<VerificationReport>& reports);
std::string encode_json(const std::vector<VerificationReport>& reports);
std::string encode_csv(const std::vector<VerificationReport>& reports);
std::string encode(const std::vector<VerificationReport>& reports, OutputFormat format);

}  // namespace congruence_lab
