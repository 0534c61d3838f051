#pragma once

#include "venlane/autodiff.hpp"
#include "venlane/circuit.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace venlane::autodiff {

enum class Mode {
  hard,  // Heaviside spikes, surrogate backward, detached reset
  soft,  // arctan spikes and reset gate in the forward pass; exact gradients
};

template <typename Scalar>
struct BatchGradients {
  Scalar loss{};
  snn::Weights<Scalar> grads;
  Mat<Scalar> counts;  // [batch x n_classes] summed output spikes
};

/// Records the T-step unroll of the circuit for a batch on `tape`.
template <typename Scalar>
class CircuitGraph {
 public:
  CircuitGraph(Tape<Scalar>& tape, const snn::CircuitConfig& config, const snn::Weights<Scalar>& weights,
               const snn::Masks& masks, bool ven_ablated, Mode mode, SurrogateSpec surrogate);

  /// Runs the unroll; each trial is a [T x n_channels] {0,1} raster.
  /// Returns the [batch x n_classes] spike-count node.
  Var run(std::span<const std::span<const std::uint8_t>> trials);

  snn::Weights<Scalar> gradients() const;

  std::vector<Var> pyr_spikes, ven_spikes, out_spikes;  // one node per step
  std::vector<Var> h_pyr, h_ven, h_out;

 private:
  Tape<Scalar>& tape_;
  snn::CircuitConfig config_;
  const snn::Weights<Scalar>& weights_;
  Mat<Scalar> mask_in_pyr_, mask_rec_, mask_in_ven_;
  bool use_ven_;
  Mode mode_;
  SurrogateSpec surrogate_;
  std::vector<Var> leaves_;
};

/// Loss (mean cross-entropy on summed output spikes) and its gradient with
/// respect to every trainable tensor.
template <typename Scalar>
BatchGradients<Scalar> loss_and_gradients(const snn::CircuitConfig& config,
                                          const snn::Weights<Scalar>& weights, const snn::Masks& masks,
                                          bool ven_ablated,
                                          std::span<const std::span<const std::uint8_t>> trials,
                                          std::span<const int> labels, Mode mode,
                                          SurrogateSpec surrogate = {});

/// Loss only, no backward. Used for finite-difference checks.
template <typename Scalar>
Scalar batch_loss(const snn::CircuitConfig& config, const snn::Weights<Scalar>& weights,
                  const snn::Masks& masks, bool ven_ablated,
                  std::span<const std::span<const std::uint8_t>> trials, std::span<const int> labels,
                  Mode mode, SurrogateSpec surrogate = {});

/// Soft-spike trace of one stimulus: arctan spikes per step, [T x n] each.
struct SoftTrace {
  Mat<double> pyr, ven, out;
  Mat<double> counts;  // [1 x n_classes]
};

SoftTrace soft_forward(const snn::CircuitParams& params, const SpikeRaster& stimulus,
                       SurrogateSpec surrogate = {});

/// Hard-mode unroll on the tape, returned as a SimTrace (spikes only).
snn::SimTrace tape_forward(const snn::CircuitParams& params, const SpikeRaster& stimulus);

}  // namespace venlane::autodiff
