#include "fracgrad/blur.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracgrad/errors.hpp"

namespace fracgrad {
namespace {

void validate_sigma(double sigma) {
  if (!std::isfinite(sigma) || sigma <= 0.0) {
    throw DomainError("gaussian_blur: sigma must be finite and > 0, got " + std::to_string(sigma));
  }
}

std::size_t clamp_index(std::ptrdiff_t i, std::size_t n) {
  if (i < 0) return 0;
  if (static_cast<std::size_t>(i) >= n) return n - 1;
  return static_cast<std::size_t>(i);
}

}  // namespace

std::size_t gaussian_radius(double sigma) {
  validate_sigma(sigma);
  return static_cast<std::size_t>(std::ceil(3.0 * sigma));
}

std::vector<double> gaussian_kernel(double sigma) {
  const std::size_t radius = gaussian_radius(sigma);
  std::vector<double> kernel(2 * radius + 1);
  double total = 0.0;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    const double d = static_cast<double>(i) - static_cast<double>(radius);
    kernel[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    total += kernel[i];
  }
  for (double& w : kernel) w /= total;
  return kernel;
}

ImagePlane gaussian_blur(const ImagePlane& plane, double sigma, Parallelism parallelism) {
  const std::vector<double> kernel = gaussian_kernel(sigma);
  if (plane.empty()) return plane;
  const auto radius = static_cast<std::ptrdiff_t>(kernel.size() / 2);
  const std::size_t width = plane.width();
  const std::size_t height = plane.height();

  ImagePlane horizontal(width, height);
  parallel_for(height, parallelism, [&](std::size_t begin, std::size_t end) {
    for (std::size_t y = begin; y < end; ++y) {
      const auto src = plane.row(y);
      auto dst = horizontal.row(y);
      for (std::size_t x = 0; x < width; ++x) {
        double acc = 0.0;
        for (std::ptrdiff_t j = -radius; j <= radius; ++j) {
          acc += kernel[static_cast<std::size_t>(j + radius)] *
                 src[clamp_index(static_cast<std::ptrdiff_t>(x) + j, width)];
        }
        dst[x] = acc;
      }
    }
  });

  ImagePlane out(width, height);
  parallel_for(height, parallelism, [&](std::size_t begin, std::size_t end) {
    for (std::size_t y = begin; y < end; ++y) {
      auto dst = out.row(y);
      for (std::ptrdiff_t j = -radius; j <= radius; ++j) {
        const double w = kernel[static_cast<std::size_t>(j + radius)];
        const auto src = horizontal.row(clamp_index(static_cast<std::ptrdiff_t>(y) + j, height));
        for (std::size_t x = 0; x < width; ++x) dst[x] += w * src[x];
      }
    }
  });
  return out;
}

}  // namespace fracgrad
