#pragma once

#include "venlane/bptt.hpp"
#include "venlane/circuit.hpp"
#include "venlane/stimgen.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace venlane::trainer {

struct TrainConfig {
  int epochs = 30;
  double lr_max = 1e-3;
  double weight_decay = 1e-5;
  int batch_size = 64;
  double clip_norm = 1.0;
  std::uint64_t seed = 0;
  /// false: L2 term added to the gradient before the moment updates.
  bool decoupled_weight_decay = false;
  double surrogate_alpha = 2.0;

  void validate() const;
  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

struct OptimizerState {
  static constexpr double beta1 = 0.9;
  static constexpr double beta2 = 0.999;
  static constexpr double eps = 1e-8;

  snn::Weights<float> m;
  snn::Weights<float> v;
  std::int64_t step = 0;

  static OptimizerState for_params(const snn::CircuitParams& params);
};

struct EpochRecord {
  int epoch = 0;  // 1-indexed
  double train_loss = 0.0;
  double val_accuracy = 0.0;
  double lr = 0.0;
};

struct TrainHistory {
  std::vector<EpochRecord> epochs;
  int plateau_epoch = 0;

  double final_val_accuracy() const { return epochs.empty() ? 0.0 : epochs.back().val_accuracy; }
};

struct TrainResult {
  snn::CircuitParams params;
  TrainHistory history;
};

class TrainingDiverged : public std::runtime_error {
 public:
  TrainingDiverged(std::int64_t step, const std::string& what)
      : std::runtime_error("training diverged at step " + std::to_string(step) + ": " + what), step_(step) {}
  std::int64_t step() const { return step_; }

 private:
  std::int64_t step_;
};

struct LossWithGrad {
  double loss = 0.0;
  std::vector<double> grad;  // d loss / d counts
};

/// -log softmax(counts)[label].
LossWithGrad cross_entropy_on_counts(std::span<const double> counts, int label);

/// lr_max (1 + cos(pi e / epochs)) / 2, floored at 0.
double cosine_lr(int epoch, const TrainConfig& config);

/// Scales `grads` so their joint L2 norm is at most `max_norm`. Returns the
/// norm before clipping.
double clip_global_norm(snn::Weights<float>& grads, double max_norm);

double global_norm(const snn::Weights<float>& grads);

/// One Adam update; masks are re-applied afterwards.
void adam_step(snn::CircuitParams& params, const snn::Weights<float>& grads, OptimizerState& state, double lr,
               double weight_decay, bool decoupled = false);

/// Fraction of trials whose full-window spike-count class matches the label.
double accuracy(const snn::CircuitParams& params, const stimgen::StimulusSet& set);

/// Gradient of the mean batch loss for trials `indices` of `set`.
autodiff::BatchGradients<float> batch_gradients(const snn::CircuitParams& params, const stimgen::StimulusSet& set,
                                                std::span<const int> indices, double surrogate_alpha);

/// First epoch (1-indexed) whose validation accuracy is within 0.2 percentage
/// points of the final epoch's.
int plateau_epoch(const std::vector<EpochRecord>& epochs);

using EpochCallback = std::function<void(const EpochRecord&)>;

TrainResult train(const snn::CircuitConfig& config, const TrainConfig& tconfig, const stimgen::StimulusSet& train_set,
                  const stimgen::StimulusSet& val_set, const EpochCallback& on_epoch = {});

}  // namespace venlane::trainer
