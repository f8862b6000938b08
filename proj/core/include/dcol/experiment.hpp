#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dcol/colouring.hpp"
#include "dcol/graph.hpp"
#include "dcol/io.hpp"

namespace dcol {

// String-valued parameters with typed access. Keys are normalised to use
// '-' instead of '_'. Every key must be read before check_consumed().
class Params {
 public:
  Params() = default;
  explicit Params(const std::map<std::string, std::string>& kv);
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  std::string str(const std::string& key) const;
  std::string str(const std::string& key, const std::string& fallback) const;
  long long integer(const std::string& key) const;
  long long integer(const std::string& key, long long fallback) const;
  double real(const std::string& key, double fallback) const;
  Rational rational(const std::string& key) const;
  // Throws InvalidInput naming the first unread key.
  void check_consumed(const std::string& context) const;
  const std::map<std::string, std::string>& values() const noexcept { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
  mutable std::set<std::string> read_;
};

Rational parse_rational(const std::string& s);
std::string rational_text(const Rational& r);

inline constexpr std::uint64_t kDefaultSeed = 20240101;

std::vector<std::string> construction_names();
bool construction_is_random(const std::string& name);
// Unknown names throw InvalidInput.
Graph generate(const std::string& construction, const Params& p, std::uint64_t seed);

std::vector<std::string> engine_names();
bool engine_is_random(const std::string& name, const Params& p);
struct EngineRun {
  Colouring colouring;
  Report extra;  // engine-specific keys, appended after the audit
};
EngineRun run_engine(const std::string& engine, const Graph& g, const Params& p, std::uint64_t seed,
                     unsigned threads = 1);
// Audit plus engine keys.
Report colour_report(const std::string& engine, const Graph& g, const Params& p, std::uint64_t seed,
                     unsigned threads = 1);

// Exact questions; caps come from --cap and refusals propagate as CapExceeded.
std::vector<std::string> oracle_questions();
Report oracle_answer(const std::string& question, const Graph& g, const Params& p, unsigned threads = 1);

// Closed-form calculators.
std::vector<std::string> formula_names();
Report evaluate_formula(const std::string& formula, const Params& p);

struct ExpectedBounds {
  std::optional<int> colours, defect, clustering;
};
struct ExperimentManifest {
  std::string engine;
  std::string generator;  // set when the graph is generated
  Params generator_params;
  std::string file;  // set when the graph is read
  std::optional<GraphFormat> format;
  Params params;
  std::optional<std::uint64_t> seed;
  ExpectedBounds expected;
};
// JSON text; relative file paths are resolved against base_dir.
ExperimentManifest parse_manifest(const std::string& json_text, const std::string& base_dir = "");
ExperimentManifest read_manifest_file(const std::string& path);

struct ManifestOutcome {
  Report report;
  bool bounds_met = true;
};
// Randomised engines and generators require a seed in the manifest.
ManifestOutcome run_manifest(const ExperimentManifest& m, unsigned threads = 1);

}  // namespace dcol
