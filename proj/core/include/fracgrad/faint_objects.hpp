#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracgrad/image.hpp"
#include "fracgrad/output_map.hpp"
#include "fracgrad/synthetic.hpp"

namespace fracgrad {

/// Detection rule for planted point sources in a rendered map.
///
/// Background = every pixel farther than `exclusion_radius` (Chebyshev) from
/// all spot centres. A spot's contrast is the peak inside the
/// (2 * peak_radius + 1)^2 window around its centre minus the background
/// median; it is detected when the contrast is positive and exceeds
/// threshold_sigmas * 1.4826 * MAD(background).
struct SpotDetectionConfig {
  std::size_t exclusion_radius = 4;
  std::size_t peak_radius = 1;
  double threshold_sigmas = 5.0;
};

struct SpotMeasurement {
  Spot spot;
  double peak = 0.0;
  double contrast = 0.0;
  bool detected = false;
};

struct SpotDetectionReport {
  double background_median = 0.0;
  double background_deviation = 0.0;  // 1.4826 * MAD
  double threshold = 0.0;             // median + threshold_sigmas * deviation
  std::vector<SpotMeasurement> spots;

  bool all_detected() const noexcept;
  std::size_t detected_count() const noexcept;
};

SpotDetectionReport evaluate_spot_detection(const ImagePlane& map, std::span<const Spot> spots,
                                            const SpotDetectionConfig& config = {});

/// Plain min/max contrast stretch to [0, 255], the comparator for the
/// fractional map. A constant plane maps to 0.
ImagePlane linear_stretch(const ImagePlane& plane, Rounding rounding = Rounding::nearest);

/// Median of a sample set (mean of the two central values for even counts).
double median(std::vector<double> values);

}  // namespace fracgrad
