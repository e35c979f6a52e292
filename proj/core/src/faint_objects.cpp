#include "fracgrad/faint_objects.hpp"

#include <algorithm>
#include <cmath>

#include "fracgrad/errors.hpp"

namespace fracgrad {
namespace {

constexpr double kMadToSigma = 1.4826;

std::size_t distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

bool SpotDetectionReport::all_detected() const noexcept {
  return std::all_of(spots.begin(), spots.end(), [](const auto& s) { return s.detected; });
}

std::size_t SpotDetectionReport::detected_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(spots.begin(), spots.end(), [](const auto& s) { return s.detected; }));
}

double median(std::vector<double> values) {
  if (values.empty()) throw ContractError("median of an empty sample");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower =
      *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

SpotDetectionReport evaluate_spot_detection(const ImagePlane& map, std::span<const Spot> spots,
                                            const SpotDetectionConfig& config) {
  if (map.empty()) throw ContractError("evaluate_spot_detection: empty map");
  std::vector<double> background;
  background.reserve(map.size());
  for (std::size_t y = 0; y < map.height(); ++y) {
    for (std::size_t x = 0; x < map.width(); ++x) {
      const bool near_spot = std::any_of(spots.begin(), spots.end(), [&](const Spot& s) {
        return distance(x, s.x) <= config.exclusion_radius &&
               distance(y, s.y) <= config.exclusion_radius;
      });
      if (!near_spot) background.push_back(map(x, y));
    }
  }
  if (background.empty()) throw ContractError("evaluate_spot_detection: no background pixels");

  SpotDetectionReport report;
  report.background_median = median(background);
  for (double& v : background) v = std::fabs(v - report.background_median);
  report.background_deviation = kMadToSigma * median(std::move(background));
  report.threshold =
      report.background_median + config.threshold_sigmas * report.background_deviation;

  for (const Spot& s : spots) {
    if (s.x >= map.width() || s.y >= map.height()) {
      throw ContractError("evaluate_spot_detection: spot outside the map");
    }
    SpotMeasurement m;
    m.spot = s;
    const std::size_t x0 = s.x >= config.peak_radius ? s.x - config.peak_radius : 0;
    const std::size_t y0 = s.y >= config.peak_radius ? s.y - config.peak_radius : 0;
    const std::size_t x1 = std::min(map.width() - 1, s.x + config.peak_radius);
    const std::size_t y1 = std::min(map.height() - 1, s.y + config.peak_radius);
    m.peak = map(s.x, s.y);
    for (std::size_t y = y0; y <= y1; ++y) {
      for (std::size_t x = x0; x <= x1; ++x) m.peak = std::max(m.peak, map(x, y));
    }
    m.contrast = m.peak - report.background_median;
    m.detected = m.contrast > 0.0 &&
                 m.contrast > config.threshold_sigmas * report.background_deviation;
    report.spots.push_back(m);
  }
  return report;
}

ImagePlane linear_stretch(const ImagePlane& plane, Rounding rounding) {
  ImagePlane out(plane.width(), plane.height());
  if (plane.empty()) return out;
  const auto [lo, hi] = std::minmax_element(plane.samples().begin(), plane.samples().end());
  const double low = *lo;
  const double range = *hi - low;
  if (range == 0.0) return out;
  const auto in = plane.samples();
  auto dst = out.samples();
  for (std::size_t i = 0; i < in.size(); ++i) {
    dst[i] = quantize(255.0 * (in[i] - low) / range, rounding);
  }
  return out;
}

}  // namespace fracgrad
