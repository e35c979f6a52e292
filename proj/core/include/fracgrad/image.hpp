#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace fracgrad {

/// Single-channel grid of finite real samples, row-major, 0-based (x, y).
class ImagePlane {
 public:
  ImagePlane() = default;
  ImagePlane(std::size_t width, std::size_t height, double fill = 0.0);
  /// Throws ContractError if samples.size() != width * height or any sample
  /// is non-finite.
  ImagePlane(std::size_t width, std::size_t height, std::vector<double> samples);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  double operator()(std::size_t x, std::size_t y) const { return samples_[y * width_ + x]; }
  double& operator()(std::size_t x, std::size_t y) { return samples_[y * width_ + x]; }

  std::span<const double> samples() const noexcept { return samples_; }
  std::span<double> samples() noexcept { return samples_; }
  std::span<const double> row(std::size_t y) const {
    return std::span<const double>(samples_).subspan(y * width_, width_);
  }
  std::span<double> row(std::size_t y) {
    return std::span<double>(samples_).subspan(y * width_, width_);
  }

  bool same_shape(const ImagePlane& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }
  ImagePlane transposed() const;

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<double> samples_;
};

/// True when both planes have the same shape and every sample has the same
/// bit pattern (distinguishes -0.0 from +0.0, unlike operator==).
bool bit_identical(const ImagePlane& a, const ImagePlane& b) noexcept;

enum class ChannelSemantics { grayscale, rgb, rgba };

std::string_view to_string(ChannelSemantics semantics) noexcept;
std::size_t planes_for(ChannelSemantics semantics) noexcept;

/// 1, 3 or 4 planes of identical dimensions. Alpha (when present) is always
/// the last plane.
class MultiChannelImage {
 public:
  MultiChannelImage() = default;
  /// Throws ContractError when the plane count does not match `semantics`,
  /// planes are empty, or dimensions differ.
  MultiChannelImage(std::vector<ImagePlane> channels, ChannelSemantics semantics);

  ChannelSemantics semantics() const noexcept { return semantics_; }
  std::size_t channel_count() const noexcept { return channels_.size(); }
  /// Channels that carry intensity (alpha excluded).
  std::size_t color_channel_count() const noexcept {
    return semantics_ == ChannelSemantics::rgba ? 3 : channels_.size();
  }
  bool has_alpha() const noexcept { return semantics_ == ChannelSemantics::rgba; }

  std::size_t width() const noexcept { return channels_.empty() ? 0 : channels_.front().width(); }
  std::size_t height() const noexcept { return channels_.empty() ? 0 : channels_.front().height(); }
  bool empty() const noexcept { return channels_.empty(); }

  const ImagePlane& channel(std::size_t c) const { return channels_.at(c); }
  std::span<const ImagePlane> channels() const noexcept { return channels_; }

  friend bool operator==(const MultiChannelImage&, const MultiChannelImage&) = default;

 private:
  std::vector<ImagePlane> channels_;
  ChannelSemantics semantics_ = ChannelSemantics::grayscale;
};

/// Semantics implied by a plane count: 1 -> grayscale, 3 -> rgb, 4 -> rgba.
/// Throws ContractError otherwise.
ChannelSemantics semantics_for_count(std::size_t channels);

}  // namespace fracgrad
