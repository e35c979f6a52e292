#include "fracgrad/gradient.hpp"

namespace fracgrad {

std::string_view to_string(MagnitudeConvention convention) noexcept {
  switch (convention) {
    case MagnitudeConvention::euclidean: return "euclidean";
    case MagnitudeConvention::absolute_sum: return "abs-sum";
  }
  return "unknown";
}

GradientField fractional_gradient(const ImagePlane& plane, const CoefficientSeries& coeffs,
                                  BoundaryPolicy boundary, MagnitudeConvention convention,
                                  Parallelism parallelism) {
  GradientField field;
  field.convention = convention;
  field.gx = derivative_x(plane, coeffs, boundary, parallelism);
  field.gy = derivative_y(plane, coeffs, boundary, parallelism);

  const std::size_t width = plane.width();
  const std::size_t terms = coeffs.length();
  field.magnitude = ImagePlane(width, plane.height());
  field.valid.assign(plane.size(), 1);
  parallel_for(plane.height(), parallelism, [&](std::size_t begin, std::size_t end) {
    for (std::size_t y = begin; y < end; ++y) {
      const auto gx = field.gx.row(y);
      const auto gy = field.gy.row(y);
      auto mag = field.magnitude.row(y);
      for (std::size_t x = 0; x < width; ++x) {
        mag[x] = gradient_magnitude(gx[x], gy[x], convention);
      }
      if (boundary == BoundaryPolicy::skip) {
        for (std::size_t x = 0; x < width; ++x) {
          field.valid[y * width + x] = has_full_support(x, terms) && has_full_support(y, terms);
        }
      }
    }
  });
  return field;
}

GradientField fractional_gradient(const ImagePlane& plane, double order, std::size_t terms,
                                  BoundaryPolicy boundary, MagnitudeConvention convention,
                                  Parallelism parallelism) {
  return fractional_gradient(plane, generate_coefficients(order, terms), boundary, convention,
                             parallelism);
}

}  // namespace fracgrad
