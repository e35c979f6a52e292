#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fracgrad/coefficients.hpp"
#include "fracgrad/derivative.hpp"
#include "fracgrad/image.hpp"
#include "fracgrad/parallel.hpp"

namespace fracgrad {

enum class MagnitudeConvention {
  euclidean,     // sqrt(gx^2 + gy^2)
  absolute_sum,  // |gx| + |gy|
};

std::string_view to_string(MagnitudeConvention convention) noexcept;

inline double gradient_magnitude(double gx, double gy, MagnitudeConvention convention) noexcept {
  return convention == MagnitudeConvention::euclidean ? std::sqrt(gx * gx + gy * gy)
                                                      : std::fabs(gx) + std::fabs(gy);
}

/// Fractional gradient of one plane: the x and y components and their
/// magnitude. `valid` holds 1 where both components have full tap support
/// (all ones unless the boundary policy is skip).
struct GradientField {
  ImagePlane gx;
  ImagePlane gy;
  ImagePlane magnitude;
  MagnitudeConvention convention = MagnitudeConvention::euclidean;
  std::vector<std::uint8_t> valid;
};

GradientField fractional_gradient(const ImagePlane& plane, const CoefficientSeries& coeffs,
                                  BoundaryPolicy boundary = BoundaryPolicy::replicate,
                                  MagnitudeConvention convention = MagnitudeConvention::euclidean,
                                  Parallelism parallelism = {});

GradientField fractional_gradient(const ImagePlane& plane, double order,
                                  std::size_t terms = kDefaultTerms,
                                  BoundaryPolicy boundary = BoundaryPolicy::replicate,
                                  MagnitudeConvention convention = MagnitudeConvention::euclidean,
                                  Parallelism parallelism = {});

}  // namespace fracgrad
