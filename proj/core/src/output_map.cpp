#include "fracgrad/output_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracgrad/errors.hpp"

namespace fracgrad {

std::string_view to_string(Rounding rounding) noexcept {
  switch (rounding) {
    case Rounding::nearest: return "nearest";
    case Rounding::floor: return "floor";
  }
  return "unknown";
}

double quantize(double value, Rounding rounding) noexcept {
  return rounding == Rounding::nearest ? std::round(value) : std::floor(value);
}

void validate(const VisibilityConfig& config) {
  if (!std::isfinite(config.alpha) || config.alpha <= 0.0) {
    throw DomainError("visibility exponent alpha must be finite and > 0, got " +
                      std::to_string(config.alpha));
  }
}

void validate(const AdjustConfig& config) {
  if (!std::isfinite(config.brightness_offset)) {
    throw DomainError("brightness offset must be finite");
  }
  if (!std::isfinite(config.contrast_gain) || config.contrast_gain <= 0.0) {
    throw DomainError("contrast gain must be finite and > 0, got " +
                      std::to_string(config.contrast_gain));
  }
}

double channel_maximum(const ImagePlane& magnitudes) {
  double maximum = 0.0;
  for (double g : magnitudes.samples()) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
      throw ContractError("normalize_map: magnitude samples must be finite and >= 0, got " +
                          std::to_string(g));
    }
    maximum = std::max(maximum, g);
  }
  return maximum;
}

ImagePlane normalize_plane(const ImagePlane& magnitudes, const VisibilityConfig& config) {
  validate(config);
  const double maximum = channel_maximum(magnitudes);
  ImagePlane out(magnitudes.width(), magnitudes.height());
  if (maximum == 0.0) return out;
  const auto in = magnitudes.samples();
  auto dst = out.samples();
  for (std::size_t i = 0; i < in.size(); ++i) {
    dst[i] = quantize(255.0 * std::pow(in[i] / maximum, config.alpha), config.rounding);
  }
  return out;
}

MultiChannelImage normalize_map(std::span<const ImagePlane> magnitudes,
                                const VisibilityConfig& config) {
  const ChannelSemantics semantics = semantics_for_count(magnitudes.size());
  std::vector<ImagePlane> planes;
  planes.reserve(magnitudes.size());
  for (const auto& plane : magnitudes) planes.push_back(normalize_plane(plane, config));
  return MultiChannelImage(std::move(planes), semantics);
}

MultiChannelImage adjust_brightness_contrast(const MultiChannelImage& image,
                                             const AdjustConfig& config, Rounding rounding) {
  validate(config);
  std::vector<ImagePlane> planes(image.channels().begin(), image.channels().end());
  for (std::size_t c = 0; c < image.color_channel_count(); ++c) {
    for (double& v : planes[c].samples()) {
      if (!(v >= 0.0 && v <= 255.0)) {
        throw ContractError("adjust_brightness_contrast: sample " + std::to_string(v) +
                            " outside [0, 255]");
      }
      const double adjusted =
          config.contrast_gain * (v - kMidGray) + kMidGray + config.brightness_offset;
      v = quantize(std::clamp(adjusted, 0.0, 255.0), rounding);
    }
  }
  return MultiChannelImage(std::move(planes), image.semantics());
}

}  // namespace fracgrad
