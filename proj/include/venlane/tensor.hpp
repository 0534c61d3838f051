#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace venlane {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Matrix = Mat<float>;

/// Dense {0,1} raster, row-major [steps x units].
class SpikeRaster {
 public:
  SpikeRaster() = default;
  SpikeRaster(int steps, int units)
      : steps_(steps), units_(units), bits_(static_cast<std::size_t>(steps) * units, 0) {}

  int steps() const { return steps_; }
  int units() const { return units_; }
  bool empty() const { return bits_.empty(); }

  std::uint8_t at(int t, int unit) const {
    return bits_[static_cast<std::size_t>(t) * units_ + unit];
  }
  void set(int t, int unit, std::uint8_t value) {
    bits_[static_cast<std::size_t>(t) * units_ + unit] = value;
  }

  std::span<const std::uint8_t> step(int t) const {
    return {bits_.data() + static_cast<std::size_t>(t) * units_, static_cast<std::size_t>(units_)};
  }
  std::span<std::uint8_t> step(int t) {
    return {bits_.data() + static_cast<std::size_t>(t) * units_, static_cast<std::size_t>(units_)};
  }

  std::span<const std::uint8_t> data() const { return bits_; }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto b : bits_) n += b;
    return n;
  }

  friend bool operator==(const SpikeRaster&, const SpikeRaster&) = default;

 private:
  int steps_ = 0;
  int units_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace venlane
