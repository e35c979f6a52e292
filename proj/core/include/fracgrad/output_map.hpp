#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fracgrad/image.hpp"

namespace fracgrad {

enum class Rounding { nearest, floor };

std::string_view to_string(Rounding rounding) noexcept;

/// nearest rounds half away from zero (127.5 -> 128).
double quantize(double value, Rounding rounding) noexcept;

/// Power-law visibility mapping b = 255 * (g / G_max)^alpha, then quantized.
struct VisibilityConfig {
  double alpha = 1.0;
  Rounding rounding = Rounding::nearest;
};

/// Linear contrast gain about mid-gray 127.5 followed by an additive offset in
/// code-value units; the result is clamped to [0, 255].
struct AdjustConfig {
  double brightness_offset = 0.0;
  double contrast_gain = 1.0;
};

inline constexpr double kMidGray = 127.5;

/// Throws DomainError unless alpha is finite and positive.
void validate(const VisibilityConfig& config);
/// Throws DomainError unless the offset is finite and the gain finite and positive.
void validate(const AdjustConfig& config);

/// Largest sample of a magnitude plane (G_max for that channel). Throws
/// ContractError on negative or non-finite samples.
double channel_maximum(const ImagePlane& magnitudes);

/// Maps one magnitude plane to integral codes in [0, 255]. A channel whose
/// maximum is 0 maps to all zeros.
ImagePlane normalize_plane(const ImagePlane& magnitudes, const VisibilityConfig& config);

/// Per-channel normalize_plane; each channel uses its own maximum. The
/// semantics follow the plane count (1 gray, 3 rgb, 4 rgba).
MultiChannelImage normalize_map(std::span<const ImagePlane> magnitudes,
                                const VisibilityConfig& config);

/// Applies AdjustConfig to every color channel; alpha passes through. Throws
/// ContractError if a color sample lies outside [0, 255].
MultiChannelImage adjust_brightness_contrast(const MultiChannelImage& image,
                                             const AdjustConfig& config,
                                             Rounding rounding = Rounding::nearest);

}  // namespace fracgrad
