#pragma once

#include "venlane/analysis.hpp"
#include "venlane/circuit.hpp"
#include "venlane/persistence.hpp"
#include "venlane/stimgen.hpp"
#include "venlane/trainer.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace venlane::harness {

using persistence::json;
namespace fs = std::filesystem;

enum class Experiment { sweep, clinical_fixed, clinical_adaptive, latency, evolve };

std::string experiment_name(Experiment e);

struct Condition {
  std::string name;
  double f_ven = 0.02;
  bool ablated = false;
};

/// typical (2%), autism-like (0.4%), ftd-like (2%, ablated at test time).
std::vector<Condition> clinical_conditions();

struct Plan {
  std::vector<std::uint64_t> seeds;
  int theta = 3;
  int theta0 = 1;
  int delta = 1;
  std::vector<double> fractions{0.0, 0.005, 0.01, 0.02, 0.03, 0.05, 0.08, 0.10};
  std::vector<int> class_counts{2, 4, 6, 8, 12, 16};
  int evolve_epochs = 15;
};

/// Everything an experiment needs besides its kind and output directory.
struct RunConfig {
  snn::CircuitConfig circuit;
  trainer::TrainConfig train;
  stimgen::TaskSpec task = stimgen::default_task();
  Plan plan;
};

enum class Profile { paper, ci };

/// Paper scale, or the downscaled CI profile (256 pyramidal units, 1000
/// training trials, 5 epochs, seeds 0..2).
RunConfig profile_config(Profile p);

/// Applies a JSON config with optional sections circuit, train, task, plan.
void apply_config(RunConfig& rc, const json& j);
json to_json(const RunConfig& rc);

/// Parses "a..b" (inclusive) or a comma-separated list.
std::vector<std::uint64_t> parse_seeds(const std::string& text);

/// Default seed list of an experiment: 0..9 clinical, 0..2 sweep, {0} latency
/// and evolve. The CI profile caps every list at 0..2.
std::vector<std::uint64_t> default_seeds(Experiment e, Profile p);

/// Hash identifying a trained cell: circuit, training hyperparameters (minus
/// seed) and task.
std::string config_hash(const snn::CircuitConfig& c, const trainer::TrainConfig& t, const stimgen::TaskSpec& task);

fs::path checkpoint_path(const fs::path& out, const std::string& hash, std::uint64_t seed);

struct Cell {
  snn::CircuitParams params;
  trainer::TrainHistory history;
  bool reused = false;
};

struct Failure {
  std::string experiment;
  std::string cell;
  std::uint64_t seed = 0;
  std::string error;
};

/// Output directory plus the run's failure list and dataset cache.
class Workspace {
 public:
  explicit Workspace(fs::path out, bool verbose = true);

  const fs::path& out() const { return out_; }
  bool verbose() const { return verbose_; }

  /// Dataset for (task, seed): loaded from the cache directory if present,
  /// otherwise generated.
  const stimgen::DatasetSplits& dataset(const stimgen::TaskSpec& task, std::uint64_t seed);

  /// Trains (or reloads) the circuit for (circuit, train, task, seed).
  Cell train_cell(const snn::CircuitConfig& circuit, trainer::TrainConfig train, const stimgen::TaskSpec& task,
                  std::uint64_t seed, const std::string& label);

  void fail(Failure f);
  const std::vector<Failure>& failures() const { return failures_; }
  /// Writes failures.json if any cell failed; returns true when none did.
  bool write_manifest() const;

 private:
  fs::path out_;
  bool verbose_;
  std::string cached_key_;
  stimgen::DatasetSplits cached_;
  std::vector<Failure> failures_;
};

persistence::ResultsDocument run_sweep(const RunConfig& rc, Workspace& ws);
persistence::ResultsDocument run_clinical(const RunConfig& rc, Experiment kind, Workspace& ws);
persistence::ResultsDocument run_latency(const RunConfig& rc, Workspace& ws);
persistence::ResultsDocument run_evolve(const RunConfig& rc, Workspace& ws);

persistence::ResultsDocument run(Experiment e, const RunConfig& rc, Workspace& ws);

fs::path results_path(const fs::path& out, Experiment e);

/// Recomputes aggregates and paired tests from the per-seed rows of a
/// clinical document.
void fill_clinical_statistics(persistence::ResultsDocument& doc);

/// Argmax-accuracy fraction, ties toward the smaller fraction.
double optimal_fraction(const std::vector<double>& fractions, const std::vector<double>& accuracies);

struct PrimateDensity {
  const char* species;
  double f_ven;
};
inline constexpr PrimateDensity kPrimates[] = {
    {"macaque", 0.0}, {"gorilla", 0.005}, {"chimpanzee", 0.009}, {"human", 0.02}};

/// Writes figures/figN.csv and .svg for every results document found under
/// `out`/results. Returns the number of figures written.
int export_figures(const fs::path& out);

}  // namespace venlane::harness
