#pragma once

#include "venlane/stimgen.hpp"
#include "venlane/tensor.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace venlane::snn {

/// Shape and dynamics constants of the pyramidal + VEN + readout circuit.
struct CircuitConfig {
  int n_pyr = 2000;
  double f_ven = 0.02;
  double tau_pyr = 20.0;
  double tau_ven = 5.0;
  /// Readout time constant. Not part of the published constant set; see README.
  double tau_out = 2.0;
  double v_th = 0.5;
  double v_reset = 0.0;
  double v_th_out = 0.1;
  int fan_in_pyr = 80;
  int fan_in_ven = 8;
  double rec_prob = 0.15;
  double rec_scale_numerator = 0.1;
  int n_channels = 100;
  int n_classes = 2;
  int T = 50;

  /// floor(n_pyr * f_ven), robust to the fraction not being exactly representable.
  int n_ven() const;
  void validate() const;
  friend bool operator==(const CircuitConfig&, const CircuitConfig&) = default;
};

/// Closed-form number of trainable parameters (weights and biases, not masks).
std::int64_t count_params(const CircuitConfig& config);

/// All trainable tensors of the circuit, templated on scalar type so the same
/// layout serves float training and double-precision gradient checks.
template <typename Scalar>
struct Weights {
  Mat<Scalar> in_pyr;        // [n_channels x n_pyr]
  Mat<Scalar> pyr_bias;      // [1 x n_pyr]
  Mat<Scalar> rec;           // [n_pyr x n_pyr]
  Mat<Scalar> out_pyr;       // [n_pyr x n_classes]
  Mat<Scalar> out_pyr_bias;  // [1 x n_classes]
  Mat<Scalar> in_ven;        // [n_channels x n_ven]
  Mat<Scalar> ven_bias;      // [1 x n_ven]
  Mat<Scalar> out_ven;       // [n_ven x n_classes]
  Mat<Scalar> out_ven_bias;  // [1 x n_classes], or [1 x 0] without VENs

  using Field = Mat<Scalar> Weights::*;

  /// (name, member) pairs in the canonical checkpoint order.
  static constexpr std::array<std::pair<std::string_view, Field>, 9> fields() {
    return {{{"w_in_pyr", &Weights::in_pyr},
             {"b_pyr", &Weights::pyr_bias},
             {"w_rec", &Weights::rec},
             {"w_out_pyr", &Weights::out_pyr},
             {"b_out_pyr", &Weights::out_pyr_bias},
             {"w_in_ven", &Weights::in_ven},
             {"b_ven", &Weights::ven_bias},
             {"w_out_ven", &Weights::out_ven},
             {"b_out_ven", &Weights::out_ven_bias}}};
  }

  template <typename F>
  void for_each(F&& f) {
    for (const auto& [name, field] : fields()) f(name, this->*field);
  }
  template <typename F>
  void for_each(F&& f) const {
    for (const auto& [name, field] : fields()) f(name, this->*field);
  }

  template <typename Other>
  Weights<Other> cast() const {
    Weights<Other> out;
    const auto src = fields();
    const auto dst = Weights<Other>::fields();
    for (std::size_t i = 0; i < src.size(); ++i)
      out.*(dst[i].second) = (this->*(src[i].second)).template cast<Other>();
    return out;
  }

  /// Same shapes, all zeros.
  Weights zeros_like() const {
    Weights out;
    for (const auto& [name, field] : fields())
      out.*field = Mat<Scalar>::Zero((this->*field).rows(), (this->*field).cols());
    return out;
  }

  std::int64_t size() const {
    std::int64_t n = 0;
    for (const auto& [name, field] : fields()) n += (this->*field).size();
    return n;
  }

  friend bool operator==(const Weights& a, const Weights& b) {
    for (const auto& [name, field] : fields()) {
      const auto& x = a.*field;
      const auto& y = b.*field;
      if (x.rows() != y.rows() || x.cols() != y.cols() || x != y) return false;
    }
    return true;
  }
};

/// Fixed {0,1} connectivity masks (stored as float for direct use in products).
struct Masks {
  Matrix in_pyr;  // exactly fan_in_pyr ones per column
  Matrix rec;     // Bernoulli(rec_prob), zero diagonal
  Matrix in_ven;  // exactly fan_in_ven ones per column

  /// Mask constraining the named weight tensor, or nullptr if unconstrained.
  const Matrix* for_tensor(std::string_view name) const;

  template <typename F>
  void for_each(F&& f) const {
    f(std::string_view{"mask_in_pyr"}, in_pyr);
    f(std::string_view{"mask_rec"}, rec);
    f(std::string_view{"mask_in_ven"}, in_ven);
  }
  friend bool operator==(const Masks& a, const Masks& b);
};

struct CircuitParams {
  CircuitConfig config;
  Weights<float> weights;
  Masks masks;
  bool ven_ablated = false;

  int n_ven() const { return static_cast<int>(weights.ven_bias.cols()); }
  std::int64_t parameter_count() const { return weights.size(); }

  /// Zeroes every masked-out weight entry.
  void apply_masks();
  /// Largest |w| over masked-out entries; 0 when the mask invariant holds.
  float mask_leakage() const;

  friend bool operator==(const CircuitParams&, const CircuitParams&) = default;
};

struct SimTrace {
  SpikeRaster spikes_pyr;
  SpikeRaster spikes_ven;  // empty when ablated or n_ven == 0
  SpikeRaster spikes_out;
  /// Pre-reset membrane potentials [T x n], filled only on request.
  Matrix h_pyr, h_ven, h_out;
};

struct DecisionOutcome {
  int predicted_class = 0;
  int rt_ms = 0;
  bool crossed = false;
  friend bool operator==(const DecisionOutcome&, const DecisionOutcome&) = default;
};

struct LifStep {
  std::vector<std::uint8_t> spikes;
  std::vector<float> v_next;
};

/// Decay-toward-reset charge: h = v + (x - (v - v_reset)) / tau.
template <typename Scalar>
inline Scalar lif_charge(Scalar v, Scalar x, Scalar tau, Scalar v_reset) {
  return v + (x - (v - v_reset)) / tau;
}

/// One discrete LIF update with hard reset.
LifStep lif_step(std::span<const float> v, std::span<const float> input_current, float tau,
                 float v_th, float v_reset);

CircuitParams init_params(const CircuitConfig& config, std::uint64_t seed);

/// Copy of `params` with the VEN population and its readout projection disabled.
CircuitParams ablate_vens(const CircuitParams& params);

struct ForwardOptions {
  bool record_membranes = false;
};

SimTrace forward(const CircuitParams& params, const SpikeRaster& stimulus,
                 const ForwardOptions& options = {});

/// Simulates trials [first, first + count) of `stimuli`. Per-trial results do
/// not depend on `count` or on the worker count.
std::vector<SimTrace> forward_batch(const CircuitParams& params, const stimgen::StimulusSet& stimuli,
                                    int first, int count, const ForwardOptions& options = {});

/// Total output spikes per class.
std::vector<int> output_counts(const SimTrace& trace);

int classify_by_count(const SimTrace& trace);

DecisionOutcome decide_fixed(const SimTrace& trace, int theta);

/// Threshold theta0 + delta * (t - 1) at 1-indexed step t.
DecisionOutcome decide_adaptive(const SimTrace& trace, int theta0, int delta);

}  // namespace venlane::snn
