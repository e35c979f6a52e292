#include "fracgrad/image.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "fracgrad/errors.hpp"

namespace fracgrad {

ImagePlane::ImagePlane(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), samples_(width * height, fill) {
  if (!std::isfinite(fill)) throw ContractError("ImagePlane: fill value must be finite");
}

ImagePlane::ImagePlane(std::size_t width, std::size_t height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (samples_.size() != width_ * height_) {
    throw ContractError("ImagePlane: expected " + std::to_string(width_ * height_) +
                        " samples, got " + std::to_string(samples_.size()));
  }
  for (double v : samples_) {
    if (!std::isfinite(v)) throw ContractError("ImagePlane: samples must be finite");
  }
}

ImagePlane ImagePlane::transposed() const {
  ImagePlane out(height_, width_);
  for (std::size_t y = 0; y < height_; ++y) {
    for (std::size_t x = 0; x < width_; ++x) out(y, x) = (*this)(x, y);
  }
  return out;
}

bool bit_identical(const ImagePlane& a, const ImagePlane& b) noexcept {
  if (!a.same_shape(b)) return false;
  const auto sa = a.samples();
  const auto sb = b.samples();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(sa[i]) != std::bit_cast<std::uint64_t>(sb[i])) return false;
  }
  return true;
}

std::string_view to_string(ChannelSemantics semantics) noexcept {
  switch (semantics) {
    case ChannelSemantics::grayscale: return "grayscale";
    case ChannelSemantics::rgb: return "rgb";
    case ChannelSemantics::rgba: return "rgba";
  }
  return "unknown";
}

std::size_t planes_for(ChannelSemantics semantics) noexcept {
  switch (semantics) {
    case ChannelSemantics::grayscale: return 1;
    case ChannelSemantics::rgb: return 3;
    case ChannelSemantics::rgba: return 4;
  }
  return 0;
}

ChannelSemantics semantics_for_count(std::size_t channels) {
  switch (channels) {
    case 1: return ChannelSemantics::grayscale;
    case 3: return ChannelSemantics::rgb;
    case 4: return ChannelSemantics::rgba;
    default:
      throw ContractError("unsupported channel count " + std::to_string(channels) +
                          " (expected 1, 3 or 4)");
  }
}

MultiChannelImage::MultiChannelImage(std::vector<ImagePlane> channels, ChannelSemantics semantics)
    : channels_(std::move(channels)), semantics_(semantics) {
  if (channels_.size() != planes_for(semantics_)) {
    throw ContractError("MultiChannelImage: " + std::string(to_string(semantics_)) + " needs " +
                        std::to_string(planes_for(semantics_)) + " planes, got " +
                        std::to_string(channels_.size()));
  }
  for (const auto& plane : channels_) {
    if (plane.empty()) throw ContractError("MultiChannelImage: zero-dimension plane");
    if (!plane.same_shape(channels_.front())) {
      throw ContractError("MultiChannelImage: channel planes differ in dimensions");
    }
  }
}

}  // namespace fracgrad
