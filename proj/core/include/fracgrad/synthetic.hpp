#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fracgrad/image.hpp"

namespace fracgrad {

/// Synthetic grayscale scenes used by the tests and the reproduction recipes.
///   step           left half 64, right half 192 (edge at column width / 2)
///   ramp           horizontal ramp round(255 * x / (width - 1))
///   disk           192 disk of radius min(w, h) / 4 centred on 64
///   impulse_grid   255 at every (x, y) with x % 5 == 0 and y % 5 == 0, else 0
///   gaussian_spots star field: faint point sources on a smooth glow, see
///                  generate_spot_field()
enum class TestImageKind { step, ramp, disk, impulse_grid, gaussian_spots };

std::string_view to_string(TestImageKind kind) noexcept;
/// Throws DomainError for an unknown name.
TestImageKind parse_test_image_kind(std::string_view name);

inline constexpr std::size_t kImpulseGridStride = 5;

/// One planted point source. Centre in pixel coordinates; amplitude in code
/// values above the local background.
struct Spot {
  std::size_t x = 0;
  std::size_t y = 0;
  double amplitude = 0.0;
};

struct SpotField {
  MultiChannelImage image;
  std::vector<Spot> spots;  // brightest first
};

/// Star field on a 60-code pedestal plus a broad 60-code glow (sigma
/// 0.2 * sqrt(w * h), centred at (0.35 w, 0.4 h)). Five Gaussian sources (sigma
/// 1 px, amplitudes 120, 90, 70, 55, 45): the brightest sits on the glow
/// centre, the four satellites at seeded positions at least 2.5 glow sigmas
/// from it, 15 px apart and 10 px from the border, fainter ones farther out.
/// Samples are rounded to integral codes. Deterministic for a given seed on
/// every platform. Both dimensions must be at least 80; the faint-object
/// property is tuned for aspect ratios up to 2:1.
SpotField generate_spot_field(std::size_t width, std::size_t height, std::uint64_t seed);

/// Throws DomainError for zero dimensions (or gaussian_spots below 80 px).
MultiChannelImage generate_test_image(TestImageKind kind, std::size_t width, std::size_t height,
                                      std::uint64_t seed = 0);

}  // namespace fracgrad
