#pragma once

#include <cstddef>
#include <vector>

#include "fracgrad/image.hpp"
#include "fracgrad/parallel.hpp"

namespace fracgrad {

/// Radius ceil(3 * sigma).
std::size_t gaussian_radius(double sigma);

/// Sampled Gaussian of length 2 * radius + 1, renormalized to sum 1.
/// Throws DomainError unless sigma is finite and > 0.
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian blur (rows, then columns) with replicate boundary.
ImagePlane gaussian_blur(const ImagePlane& plane, double sigma, Parallelism parallelism = {});

}  // namespace fracgrad
