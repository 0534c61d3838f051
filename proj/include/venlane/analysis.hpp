#pragma once

#include "venlane/circuit.hpp"
#include "venlane/stimgen.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace venlane::analysis {

/// Decision rule applied to the readout: fixed count threshold, or a threshold
/// that grows by `delta` per step from `theta0`.
struct Protocol {
  enum class Kind { fixed, adaptive };
  Kind kind = Kind::fixed;
  int theta = 3;
  int theta0 = 1;
  int delta = 1;

  static Protocol fixed(int theta) { return {Kind::fixed, theta, 1, 0}; }
  static Protocol adaptive(int theta0, int delta) { return {Kind::adaptive, 0, theta0, delta}; }

  snn::DecisionOutcome decide(const snn::SimTrace& trace) const;
  std::string name() const;
};

struct SeedMetrics {
  std::uint64_t seed = 0;
  double mean_rt_ms = 0.0;
  /// All trials; non-crossing trials are scored by full-window spike count.
  double decision_accuracy = 0.0;
  double crossing_rate = 0.0;
  /// Accuracy over trials that crossed the threshold; absent if none did.
  std::optional<double> crossing_accuracy;
  std::optional<double> median_latency_pyr_ms;
  std::optional<double> median_latency_ven_ms;
};

SeedMetrics evaluate_condition(const snn::CircuitParams& params, const stimgen::StimulusSet& test,
                               const Protocol& protocol, std::uint64_t seed = 0);

enum class Population { pyr, ven };

struct LatencyResult {
  std::vector<int> latencies;  // 1-indexed step of first spike, ms
  std::optional<double> median;
};

/// Pools first-spike times over every (neuron, raster) pair that spiked.
LatencyResult first_spike_latencies(std::span<const SpikeRaster> rasters);

/// Latencies of one population over all stimuli. An ablated or empty
/// population yields an empty list and no median.
LatencyResult first_spike_latencies(const snn::CircuitParams& params, const stimgen::StimulusSet& stimuli,
                                    Population population);

std::optional<double> median(std::vector<double> values);

/// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
double incomplete_beta(double x, double a, double b);

/// Two-sided Student-t tail probability P(|T| >= |t|) with `df` degrees of freedom.
double student_t_sf(double t, int df);

struct PairedTestResult {
  double t_statistic = 0.0;
  double p_value = 1.0;
  int df = 0;
  int n = 0;
};

class DegenerateDifferences : public std::domain_error {
 public:
  DegenerateDifferences() : std::domain_error("degenerate differences: paired differences have zero variance") {}
};

/// Paired t-test on a - b, pairing by index.
PairedTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // n - 1 denominator; NaN when n < 2
  int n = 0;
};

MeanSd mean_sd(std::span<const double> values);

/// Mean and SD per SeedMetrics field; absent optional values are skipped.
std::map<std::string, MeanSd> aggregate_seeds(std::span<const SeedMetrics> metrics);

struct Cluster {
  std::vector<std::size_t> members;  // indices into the input
  double mean = 0.0;
};

struct BimodalSplit {
  Cluster lower;
  Cluster upper;
  double split_point = 0.0;
  bool degenerate = false;
};

/// Exhaustive 1-D two-means: the sorted split minimizing total within-cluster
/// sum of squares.
BimodalSplit bimodal_split(std::span<const double> values);

}  // namespace venlane::analysis
