#pragma once

#include "venlane/tensor.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace venlane::autodiff {

/// Arctan surrogate: s(x) = atan(pi * alpha * x / 2) / pi + 1/2.
struct SurrogateSpec {
  double alpha = 2.0;
  void validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("SurrogateSpec: alpha must be positive");
  }
};

/// ds/dx of the arctan surrogate: alpha / (2 (1 + (pi alpha x / 2)^2)).
template <typename Scalar>
Scalar surrogate_grad(Scalar x, Scalar alpha) {
  const Scalar z = std::numbers::pi_v<Scalar> * alpha * x / Scalar(2);
  return alpha / (Scalar(2) * (Scalar(1) + z * z));
}

template <typename Scalar>
Scalar soft_spike(Scalar x, Scalar alpha) {
  return std::atan(std::numbers::pi_v<Scalar> * alpha * x / Scalar(2)) / std::numbers::pi_v<Scalar> +
         Scalar(0.5);
}

enum class Op {
  leaf,
  constant,
  mask,
  matmul,
  spike_matmul,
  add,
  add_bias,
  lif_charge,
  threshold,
  reset,
  sum,
  softmax_xent,
};

struct Var {
  std::int32_t id = -1;
  bool valid() const { return id >= 0; }
};

/// Raised when backward meets a non-finite gradient.
class NonFiniteGradient : public std::runtime_error {
 public:
  explicit NonFiniteGradient(const std::string& what) : std::runtime_error(what) {}
};

/// Reverse-mode tape over matrix-valued nodes. Nodes only reference earlier
/// nodes, so creation order is a topological order and backward is a single
/// reverse sweep.
template <typename Scalar>
class Tape {
 public:
  using M = Mat<Scalar>;

  Tape() { nodes_.reserve(1024); }

  /// Trainable input. `value` is borrowed and must outlive the tape.
  Var leaf(const M& value, std::string name);
  Var constant(M value);
  /// Borrowed constant.
  Var constant_ref(const M& value);

  /// w * mask elementwise; `mask` is borrowed.
  Var mask(Var w, const M& mask);
  Var matmul(Var a, Var b);
  /// Product with a {0,1}-valued left operand, summed row by row in ascending
  /// index order.
  Var spike_matmul(Var spikes, Var w);
  Var add(Var a, Var b);
  /// a + bias broadcast over rows; bias is [1 x cols].
  Var add_bias(Var a, Var bias);
  /// h = v + (x - (v - v_reset)) / tau.
  Var lif_charge(Var v, Var x, Scalar tau, Scalar v_reset);
  /// Heaviside(h - v_th) (hard) or its arctan relaxation (soft); backward
  /// uses the surrogate derivative in both cases.
  Var threshold(Var h, Scalar v_th, SurrogateSpec surrogate, bool soft);
  /// v = h (1 - s) + v_reset s. With `detach`, s is treated as a constant.
  Var reset(Var h, Var s, Scalar v_reset, bool detach);
  Var sum(std::span<const Var> terms);
  /// Mean over rows of -log softmax(logits)[label].
  Var softmax_cross_entropy(Var logits, std::span<const int> labels);

  const M& value(Var v) const;
  Scalar scalar(Var v) const { return value(v)(0, 0); }
  Op op(Var v) const { return node(v).op; }
  const std::string& name(Var v) const { return node(v).name; }
  std::size_t size() const { return nodes_.size(); }

  /// Gradient of the last backward's loss w.r.t. a leaf (zeros if unreached).
  const M& grad(Var v) const;

  /// Propagates d loss / d node for every node, visiting each exactly once.
  /// A tape supports one backward pass.
  void backward(Var loss);

 private:
  struct Node {
    Op op = Op::constant;
    int a = -1;
    int b = -1;
    std::vector<int> terms;
    M value;
    const M* borrowed = nullptr;
    const M* aux = nullptr;
    Scalar p0{};
    Scalar p1{};
    bool flag = false;
    bool requires_grad = false;
    std::string name;
    std::vector<int> labels;
    std::vector<std::vector<int>> active;
    M grad;
    bool has_grad = false;
  };

  const Node& node(Var v) const {
    if (v.id < 0 || static_cast<std::size_t>(v.id) >= nodes_.size())
      throw std::out_of_range("Tape: invalid variable");
    return nodes_[static_cast<std::size_t>(v.id)];
  }
  const M& val(int id) const {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    return n.borrowed ? *n.borrowed : n.value;
  }
  bool needs(int id) const { return id >= 0 && nodes_[static_cast<std::size_t>(id)].requires_grad; }
  Var push(Node n);
  template <typename Expr>
  void accumulate(int id, const Expr& g);
  void propagate(Node& n);

  std::vector<Node> nodes_;
  bool backward_done_ = false;
  M empty_;
};

extern template class Tape<float>;
extern template class Tape<double>;

}  // namespace venlane::autodiff
