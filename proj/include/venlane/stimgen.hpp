#pragma once

#include "venlane/rng.hpp"
#include "venlane/tensor.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace venlane::stimgen {

/// Rate envelope of one stimulus class. Rates are in Hz at 1 ms per step.
struct ClassSpec {
  double rate_lo = 0.0;
  double rate_hi = 0.0;
  double burst_prob = 0.0;

  void validate() const;
  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

struct Split {
  int n_train = 4000;
  int n_val = 500;
  int n_test = 1000;
  friend bool operator==(const Split&, const Split&) = default;
};

ClassSpec threat_class();    // 40-90 Hz, burst 0.7
ClassSpec friendly_class();  // 5-20 Hz, burst 0.15

struct TaskSpec {
  int n_channels = 100;
  int T = 50;
  std::vector<ClassSpec> classes{threat_class(), friendly_class()};
  Split split{};
  /// Multiplier on the per-step spike probability during burst steps (capped at 1).
  double burst_gain = 4.0;

  int n_classes() const { return static_cast<int>(classes.size()); }
  void validate() const;
  friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

/// The binary threat/friendly task with the default 4000/500/1000 split.
TaskSpec default_task();

/// Trials x T x channels binary rasters plus labels.
class StimulusSet {
 public:
  StimulusSet() = default;
  StimulusSet(int n_trials, int T, int n_channels, std::uint64_t seed);

  int size() const { return static_cast<int>(labels_.size()); }
  int steps() const { return T_; }
  int channels() const { return n_channels_; }
  std::uint64_t seed() const { return seed_; }

  std::span<const std::uint8_t> trial(int i) const;
  std::span<std::uint8_t> trial(int i);
  std::span<const std::uint8_t> spikes() const { return spikes_; }
  std::span<std::uint8_t> spikes() { return spikes_; }

  int label(int i) const { return labels_[i]; }
  const std::vector<int>& labels() const { return labels_; }
  std::vector<int>& labels() { return labels_; }

  /// Copy of one trial as a [T x channels] raster.
  SpikeRaster raster(int i) const;

  friend bool operator==(const StimulusSet&, const StimulusSet&) = default;

 private:
  int T_ = 0;
  int n_channels_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<std::uint8_t> spikes_;
  std::vector<int> labels_;
};

struct DatasetSplits {
  StimulusSet train;
  StimulusSet val;
  StimulusSet test;
  /// Trials dropped per split because the requested count was not divisible
  /// by the number of classes.
  Split shortfall{0, 0, 0};
};

/// Draws one stimulus into `out` ([T x n_channels], row-major).
void sample_stimulus(const ClassSpec& spec, const TaskSpec& task, Rng& rng,
                     std::span<std::uint8_t> out);

SpikeRaster sample_stimulus(const ClassSpec& spec, const TaskSpec& task, Rng& rng);

/// Closed-form expected spike probability per channel-step for a class.
double expected_spike_probability(const ClassSpec& spec, double burst_gain);

/// Generates one split. Trial i has label i % n_classes and its raster is drawn
/// from the (seed, tag, i) sub-stream.
StimulusSet make_split(const TaskSpec& task, std::uint64_t seed, StreamTag tag, int n_trials);

DatasetSplits make_dataset(const TaskSpec& task, std::uint64_t seed);

/// Class k of n interpolates linearly from the friendly endpoint (k = 0) to
/// the threat endpoint (k = n - 1). Split is 200/50/50 trials per class.
TaskSpec make_evolution_task(int n_classes);

}  // namespace venlane::stimgen
