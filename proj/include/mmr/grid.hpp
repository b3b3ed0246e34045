#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mmr {

// Row-major 2-D grid. ImagePlane and HoleMask are the two instantiations the
// library uses.
template <typename T>
class Grid {
 public:
  using value_type = T;

  Grid() = default;
  Grid(std::size_t width, std::size_t height, T fill = T{})
      : width_(width), height_(height), data_(width * height, fill) {}
  Grid(std::size_t width, std::size_t height, std::vector<T> data)
      : width_(width), height_(height), data_(std::move(data)) {
    assert(data_.size() == width_ * height_);
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool square() const noexcept { return width_ == height_; }

  T& operator()(std::size_t row, std::size_t col) noexcept {
    assert(row < height_ && col < width_);
    return data_[row * width_ + col];
  }
  const T& operator()(std::size_t row, std::size_t col) const noexcept {
    assert(row < height_ && col < width_);
    return data_[row * width_ + col];
  }

  std::span<T> row(std::size_t r) & noexcept {
    return {data_.data() + r * width_, width_};
  }
  std::span<const T> row(std::size_t r) const& noexcept {
    return {data_.data() + r * width_, width_};
  }
  void row(std::size_t) && = delete;

  // Views into a temporary would dangle, so rvalue access is deleted.
  std::span<T> values() & noexcept { return data_; }
  std::span<const T> values() const& noexcept { return data_; }
  void values() && = delete;

  bool same_shape(const auto& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<T> data_;
};

using ImagePlane = Grid<double>;

// true (1) marks a position created by the zero-insertion expander.
using HoleMask = Grid<std::uint8_t>;

inline double min_value(const ImagePlane& p) {
  return *std::min_element(p.values().begin(), p.values().end());
}
inline double max_value(const ImagePlane& p) {
  return *std::max_element(p.values().begin(), p.values().end());
}

}  // namespace mmr
