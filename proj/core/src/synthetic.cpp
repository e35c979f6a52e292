#include "fracgrad/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "fracgrad/errors.hpp"

namespace fracgrad {
namespace {

constexpr double kPedestal = 60.0;
constexpr double kGlowAmplitude = 60.0;
constexpr double kGlowSigmaFraction = 0.2;
constexpr double kSpotSigma = 1.0;
constexpr double kSpotAmplitudes[] = {120.0, 90.0, 70.0, 55.0, 45.0};
constexpr std::size_t kSpotMargin = 10;
constexpr std::size_t kSpotSeparation = 15;
constexpr std::size_t kMinSpotFieldSize = 80;
// Satellites keep clear of the glow core (distance in glow sigmas).
constexpr double kSatelliteClearance = 2.5;

MultiChannelImage gray(ImagePlane plane) {
  std::vector<ImagePlane> planes;
  planes.push_back(std::move(plane));
  return MultiChannelImage(std::move(planes), ChannelSemantics::grayscale);
}

std::size_t chebyshev(const Spot& a, const Spot& b) {
  const std::size_t dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const std::size_t dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return std::max(dx, dy);
}

}  // namespace

std::string_view to_string(TestImageKind kind) noexcept {
  switch (kind) {
    case TestImageKind::step: return "step";
    case TestImageKind::ramp: return "ramp";
    case TestImageKind::disk: return "disk";
    case TestImageKind::impulse_grid: return "impulse_grid";
    case TestImageKind::gaussian_spots: return "gaussian_spots";
  }
  return "unknown";
}

TestImageKind parse_test_image_kind(std::string_view name) {
  for (auto kind : {TestImageKind::step, TestImageKind::ramp, TestImageKind::disk,
                    TestImageKind::impulse_grid, TestImageKind::gaussian_spots}) {
    if (name == to_string(kind)) return kind;
  }
  throw DomainError("unknown test image kind '" + std::string(name) +
                    "' (expected step, ramp, disk, impulse_grid or gaussian_spots)");
}

SpotField generate_spot_field(std::size_t width, std::size_t height, std::uint64_t seed) {
  if (width < kMinSpotFieldSize || height < kMinSpotFieldSize) {
    throw DomainError("gaussian_spots needs at least " + std::to_string(kMinSpotFieldSize) +
                      "x" + std::to_string(kMinSpotFieldSize) + " pixels");
  }
  const double cx = 0.35 * static_cast<double>(width);
  const double cy = 0.40 * static_cast<double>(height);
  const double glow_sigma =
      kGlowSigmaFraction * std::sqrt(static_cast<double>(width) * static_cast<double>(height));
  const double clearance2 =
      (kSatelliteClearance * glow_sigma) * (kSatelliteClearance * glow_sigma);
  // The brightest source sits on the glow centre; the rest are scattered.
  std::vector<Spot> spots;
  spots.push_back(Spot{static_cast<std::size_t>(std::lround(cx)),
                       static_cast<std::size_t>(std::lround(cy)), 0.0});

  // Raw engine output only: std distributions are not specified bit-exactly.
  std::mt19937_64 rng(seed);
  const std::size_t span_x = width - 2 * kSpotMargin;
  const std::size_t span_y = height - 2 * kSpotMargin;
  constexpr std::size_t kSpotCount = std::size(kSpotAmplitudes);
  for (std::size_t attempt = 0; spots.size() < kSpotCount; ++attempt) {
    if (attempt > 100000) throw DomainError("gaussian_spots: cannot place sources");
    Spot candidate;
    candidate.x = kSpotMargin + static_cast<std::size_t>(rng() % span_x);
    candidate.y = kSpotMargin + static_cast<std::size_t>(rng() % span_y);
    const double dx = static_cast<double>(candidate.x) - cx;
    const double dy = static_cast<double>(candidate.y) - cy;
    const bool clear = dx * dx + dy * dy >= clearance2 &&
                       std::all_of(spots.begin(), spots.end(), [&](const Spot& s) {
                         return chebyshev(s, candidate) >= kSpotSeparation;
                       });
    if (clear) spots.push_back(candidate);
  }

  auto distance2 = [&](const Spot& s) {
    const double dx = static_cast<double>(s.x) - cx;
    const double dy = static_cast<double>(s.y) - cy;
    return dx * dx + dy * dy;
  };
  std::stable_sort(spots.begin() + 1, spots.end(),
                   [&](const Spot& a, const Spot& b) { return distance2(a) < distance2(b); });
  for (std::size_t i = 0; i < kSpotCount; ++i) spots[i].amplitude = kSpotAmplitudes[i];

  ImagePlane plane(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double dx = static_cast<double>(x) - cx;
      const double dy = static_cast<double>(y) - cy;
      double v = kPedestal +
                 kGlowAmplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * glow_sigma * glow_sigma));
      for (const Spot& s : spots) {
        const double sx = static_cast<double>(x) - static_cast<double>(s.x);
        const double sy = static_cast<double>(y) - static_cast<double>(s.y);
        v += s.amplitude * std::exp(-(sx * sx + sy * sy) / (2.0 * kSpotSigma * kSpotSigma));
      }
      plane(x, y) = std::clamp(std::round(v), 0.0, 255.0);
    }
  }
  return SpotField{gray(std::move(plane)), std::move(spots)};
}

MultiChannelImage generate_test_image(TestImageKind kind, std::size_t width, std::size_t height,
                                      std::uint64_t seed) {
  if (width == 0 || height == 0) {
    throw DomainError("generate_test_image: dimensions must be positive");
  }
  ImagePlane plane(width, height);
  switch (kind) {
    case TestImageKind::step:
      for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) plane(x, y) = x < width / 2 ? 64.0 : 192.0;
      }
      break;
    case TestImageKind::ramp:
      for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
          plane(x, y) = width == 1 ? 0.0
                                   : std::round(255.0 * static_cast<double>(x) /
                                                static_cast<double>(width - 1));
        }
      }
      break;
    case TestImageKind::disk: {
      const double cx = (static_cast<double>(width) - 1.0) / 2.0;
      const double cy = (static_cast<double>(height) - 1.0) / 2.0;
      const double r = static_cast<double>(std::min(width, height)) / 4.0;
      for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
          const double dx = static_cast<double>(x) - cx;
          const double dy = static_cast<double>(y) - cy;
          plane(x, y) = dx * dx + dy * dy <= r * r ? 192.0 : 64.0;
        }
      }
      break;
    }
    case TestImageKind::impulse_grid:
      for (std::size_t y = 0; y < height; y += kImpulseGridStride) {
        for (std::size_t x = 0; x < width; x += kImpulseGridStride) plane(x, y) = 255.0;
      }
      break;
    case TestImageKind::gaussian_spots:
      return generate_spot_field(width, height, seed).image;
  }
  return gray(std::move(plane));
}

}  // namespace fracgrad
