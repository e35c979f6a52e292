#include "fracgrad/derivative.hpp"

#include <algorithm>

#include "fracgrad/errors.hpp"

namespace fracgrad {
namespace {

// dst must already be sized like src. Outer loop over taps keeps each
// sample's additions in increasing k while letting the inner loop vectorize.
void differentiate_row(std::span<const double> src, std::span<double> dst,
                       const CoefficientSeries& coeffs, BoundaryPolicy boundary) {
  const std::size_t n = src.size();
  const std::size_t terms = coeffs.length();
  std::fill(dst.begin(), dst.end(), 0.0);
  const double edge = boundary == BoundaryPolicy::replicate ? src[0] : 0.0;
  for (std::size_t k = 0; k < terms; ++k) {
    const double c = coeffs[k];
    const std::size_t band = std::min(k, n);
    for (std::size_t x = 0; x < band; ++x) dst[x] += c * edge;
    const double* in = src.data();
    double* out = dst.data();
    for (std::size_t x = band; x < n; ++x) out[x] += c * in[x - k];
  }
  if (boundary == BoundaryPolicy::skip) {
    const std::size_t band = std::min(terms - 1, n);
    std::fill(dst.begin(), dst.begin() + static_cast<std::ptrdiff_t>(band), 0.0);
  }
}

void require_non_empty(const ImagePlane& plane, const char* op) {
  if (plane.empty()) throw DomainError(std::string(op) + ": plane is empty");
}

}  // namespace

std::string_view to_string(BoundaryPolicy policy) noexcept {
  switch (policy) {
    case BoundaryPolicy::replicate: return "replicate";
    case BoundaryPolicy::zero: return "zero";
    case BoundaryPolicy::skip: return "skip";
  }
  return "unknown";
}

std::vector<double> derivative_1d(std::span<const double> signal, const CoefficientSeries& coeffs,
                                  BoundaryPolicy boundary) {
  if (signal.empty()) throw DomainError("derivative_1d: signal is empty");
  std::vector<double> out(signal.size());
  differentiate_row(signal, out, coeffs, boundary);
  return out;
}

ImagePlane derivative_x(const ImagePlane& plane, const CoefficientSeries& coeffs,
                        BoundaryPolicy boundary, Parallelism parallelism) {
  require_non_empty(plane, "derivative_x");
  ImagePlane out(plane.width(), plane.height());
  parallel_for(plane.height(), parallelism, [&](std::size_t begin, std::size_t end) {
    for (std::size_t y = begin; y < end; ++y) {
      differentiate_row(plane.row(y), out.row(y), coeffs, boundary);
    }
  });
  return out;
}

ImagePlane derivative_y(const ImagePlane& plane, const CoefficientSeries& coeffs,
                        BoundaryPolicy boundary, Parallelism parallelism) {
  require_non_empty(plane, "derivative_y");
  const std::size_t width = plane.width();
  const std::size_t terms = coeffs.length();
  ImagePlane out(width, plane.height());
  parallel_for(plane.height(), parallelism, [&](std::size_t begin, std::size_t end) {
    for (std::size_t y = begin; y < end; ++y) {
      double* dst = out.row(y).data();
      if (boundary == BoundaryPolicy::skip && !has_full_support(y, terms)) {
        continue;  // rows already 0
      }
      for (std::size_t k = 0; k < terms; ++k) {
        const double c = coeffs[k];
        if (k <= y) {
          const double* src = plane.row(y - k).data();
          for (std::size_t x = 0; x < width; ++x) dst[x] += c * src[x];
        } else if (boundary == BoundaryPolicy::replicate) {
          const double* src = plane.row(0).data();
          for (std::size_t x = 0; x < width; ++x) dst[x] += c * src[x];
        } else {
          for (std::size_t x = 0; x < width; ++x) dst[x] += c * 0.0;
        }
      }
    }
  });
  return out;
}

}  // namespace fracgrad
