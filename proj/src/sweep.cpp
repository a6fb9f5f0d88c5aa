#include "congruence_lab/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "congruence_lab/poly.hpp"

namespace congruence_lab {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
std::vector<T> read_list(const nlohmann::json& value, const char* key) {
  if (!value.is_array()) throw Error(Errc::ConfigError, std::string(key) + " must be an array");
  std::vector<T> out;
  for (const auto& item : value) {
    if (!item.is_number_unsigned() && !(item.is_number_integer() && item.get<std::int64_t>() >= 0)) {
      throw Error(Errc::ConfigError, std::string(key) + " entries must be non-negative integers");
    }
    out.push_back(item.get<T>());
  }
  return out;
}

std::uint64_t read_count(const nlohmann::json& value, const char* key) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw Error(Errc::ConfigError, std::string(key) + " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(Errc::ConfigError, "unknown output format '" + name + "' (human, json, csv)");
}

SweepConfig default_sweep_config() {
  SweepConfig config;
  config.primes = {3, 5, 7, 11, 13};
  config.exponents = {1, 2};
  config.cofactors = {1, 2, 4, 7, 14, 15, 21, 35};
  config.weights = {{1, 1, 1, 1}, {1, 1, 2, 2}, {1, 2, 3, 6}, {2, 3, 4, 12}, {1, 2, 3, 12}, {2, 2, 2, 2}};
  config.max_An = 3000;
  return config;
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ConfigError, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ConfigError, "config must be a JSON object");

  SweepConfig config = default_sweep_config();
  for (const auto& [key, value] : doc.items()) {
    if (key == "primes") {
      config.primes = read_list<std::uint64_t>(value, "primes");
    } else if (key == "exponents") {
      config.exponents = read_list<unsigned>(value, "exponents");
    } else if (key == "cofactors") {
      config.cofactors = read_list<std::uint64_t>(value, "cofactors");
    } else if (key == "weights") {
      if (!value.is_array()) throw Error(Errc::ConfigError, "weights must be an array of [a1,a2,a3,A]");
      config.weights.clear();
      for (const auto& row : value) {
        auto entries = read_list<std::uint64_t>(row, "weights");
        if (entries.size() != 4) throw Error(Errc::ConfigError, "each weights entry is [a1,a2,a3,A]");
        config.weights.push_back({entries[0], entries[1], entries[2], entries[3]});
      }
    } else if (key == "max_An") {
      config.max_An = read_count(value, "max_An");
    } else if (key == "induction") {
      if (!value.is_object()) throw Error(Errc::ConfigError, "induction must be an object {q, s}");
      InductionRange range;
      for (const auto& [ikey, ivalue] : value.items()) {
        if (ikey == "q") {
          range.q = read_list<std::uint64_t>(ivalue, "induction.q");
        } else if (ikey == "s") {
          range.s = read_list<unsigned>(ivalue, "induction.s");
        } else {
          throw Error(Errc::ConfigError, "unknown key induction." + ikey);
        }
      }
      config.induction = std::move(range);
    } else if (key == "format") {
      if (!value.is_string()) throw Error(Errc::ConfigError, "format must be a string");
      config.format = parse_output_format(value.get<std::string>());
    } else if (key == "threads") {
      config.threads = static_cast<unsigned>(read_count(value, "threads"));
    } else {
      throw Error(Errc::ConfigError, "unknown key '" + key + "'");
    }
  }

  for (auto p : config.primes) {
    if (p < 3 || !is_prime(p)) throw Error(Errc::ConfigError, "primes must be odd primes, got " + std::to_string(p));
  }
  for (auto r : config.exponents) {
    if (r < 1) throw Error(Errc::ConfigError, "exponents must be >= 1");
  }
  for (auto m : config.cofactors) {
    if (m < 1) throw Error(Errc::ConfigError, "cofactors must be >= 1");
  }
  for (const auto& row : config.weights) {
    try {
      derive_gcd_structure(row[0], row[1], row[2], row[3]);
    } catch (const Error& e) {
      throw Error(Errc::ConfigError, e.what());
    }
  }
  if (config.induction) {
    for (auto q : config.induction->q) {
      if (!is_prime(q)) throw Error(Errc::ConfigError, "induction.q must be primes, got " + std::to_string(q));
    }
    for (auto s : config.induction->s) {
      if (s < 1) throw Error(Errc::ConfigError, "induction.s must be >= 1");
    }
  }
  return config;
}

std::vector<GridPoint> expand_grid(const SweepConfig& config) {
  std::vector<GridPoint> plain, lifted;
  for (auto p : config.primes) {
    for (auto r : config.exponents) {
      const std::uint64_t pr = detail::to_u64(int_pow(p, r));
      for (auto m : config.cofactors) {
        if (std::gcd(m, p) != 1) continue;
        const std::uint64_t n = pr * m;
        for (const auto& row : config.weights) {
          if (row[0] % p == 0 || row[1] % p == 0 || row[2] % p == 0) continue;
          const WeightTriple w = derive_gcd_structure(row[0], row[1], row[2], row[3]);
          if (w.A * n <= config.max_An) plain.push_back(GridPoint{p, r, m, n, w, std::nullopt});
          if (!config.induction) continue;
          for (auto q : config.induction->q) {
            if (q == p || n % q == 0) continue;
            for (auto s : config.induction->s) {
              const Integer lifted_An = Integer(w.A) * n * int_pow(q, s);
              if (lifted_An > Integer(config.max_An)) continue;
              lifted.push_back(GridPoint{p, r, m, n, w, InductionParams{q, s, n}});
            }
          }
        }
      }
    }
  }
  plain.insert(plain.end(), lifted.begin(), lifted.end());
  return plain;
}

VerificationReport evaluate_point(const GridPoint& point) {
  if (point.induction) {
    return check_induction_step(point.weights, point.n, point.p, point.r, point.induction->q, point.induction->s);
  }
  return verify_main_theorem(point.weights, point.n, point.p);
}

std::vector<VerificationReport> run_sweep(const std::vector<GridPoint>& points, unsigned threads) {
  std::vector<VerificationReport> out(points.size());
  if (threads <= 1 || points.size() <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = evaluate_point(points[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        out[i] = evaluate_point(points[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = std::min<std::size_t>(threads, points.size());
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

unsigned resolve_threads(std::optional<unsigned> flag, unsigned config_value) {
  if (flag && *flag > 0) return *flag;
  if (const char* env = std::getenv("CONGRUENCE_LAB_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return config_value > 0 ? config_value : 1;
}

namespace {

bool any_induction(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.induction) return true;
  }
  return false;
}

ordered_json row_json(const VerificationReport& r) {
  ordered_json row;
  row["p"] = r.p;
  row["r"] = r.r;
  row["n"] = r.n;
  row["a"] = {r.weights.a1, r.weights.a2, r.weights.a3};
  row["A"] = r.weights.A;
  row["lhs"] = to_string(r.lhs.value);
  row["rhs"] = to_string(r.rhs.value);
  row["modulus"] = to_string(r.lhs.modulus);
  row["match"] = r.match;
  row["elapsed_ms"] = r.elapsed.count();
  if (r.induction) {
    row["q"] = r.induction->q;
    row["s"] = r.induction->s;
  }
  return row;
}

}  // namespace

std::string encode_human(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  std::size_t mismatches = 0;
  for (const auto& r : reports) {
    os << "p=" << r.p << " r=" << r.r << " n=" << r.n << " a=(" << r.weights.a1 << ',' << r.weights.a2 << ','
       << r.weights.a3 << ") A=" << r.weights.A;
    if (r.induction) os << " q=" << r.induction->q << " s=" << r.induction->s;
    os << "  lhs=" << r.lhs.value << " rhs=" << r.rhs.value << " (mod " << r.lhs.modulus << ")  "
       << (r.match ? "match" : "MISMATCH") << "  " << std::fixed << std::setprecision(3) << r.elapsed.count()
       << " ms\n";
    os.unsetf(std::ios::floatfield);
    if (!r.match) ++mismatches;
  }
  os << reports.size() << " rows, " << mismatches << " mismatches\n";
  return os.str();
}

std::string encode_json(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    os << (i == 0 ? "\n  " : ",\n  ") << row_json(reports[i]).dump();
  }
  os << (reports.empty() ? "]\n" : "\n]\n");
  return os.str();
}

std::string encode_csv(const std::vector<VerificationReport>& reports) {
  const bool lifted = any_induction(reports);
  std::ostringstream os;
  os << "p,r,n,a,A,lhs,rhs,modulus,match,elapsed_ms" << (lifted ? ",q,s" : "") << '\n';
  for (const auto& r : reports) {
    os << r.p << ',' << r.r << ',' << r.n << ",\"" << r.weights.a1 << ',' << r.weights.a2 << ',' << r.weights.a3
       << "\"," << r.weights.A << ',' << r.lhs.value << ',' << r.rhs.value << ',' << r.lhs.modulus << ','
       << (r.match ? "true" : "false") << ',' << ordered_json(r.elapsed.count()).dump();
    if (lifted) {
      if (r.induction) {
        os << ',' << r.induction->q << ',' << r.induction->s;
      } else {
        os << ",,";
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string encode(const std::vector<VerificationReport>& reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return encode_json(reports);
    case OutputFormat::Csv: return encode_csv(reports);
    case OutputFormat::Human: break;
  }
  return encode_human(reports);
}

}  // namespace congruence_lab
