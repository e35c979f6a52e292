#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fracgrad/coefficients.hpp"
#include "fracgrad/image.hpp"
#include "fracgrad/parallel.hpp"

namespace fracgrad {

/// Resolution of taps s(t - k) with t - k < 0.
///   replicate: read the first in-range sample
///   zero:      read 0
///   skip:      output is defined only where all K taps are in range; the first
///              K - 1 positions along the operator axis are written as 0 and
///              reported invalid by has_full_support()
enum class BoundaryPolicy { replicate, zero, skip };

std::string_view to_string(BoundaryPolicy policy) noexcept;

/// True when position `index` along the operator axis has all `terms` taps
/// inside the signal.
constexpr bool has_full_support(std::size_t index, std::size_t terms) noexcept {
  return index + 1 >= terms;
}

/// Backward (causal) truncated fractional derivative of a 1-D signal:
///   out[t] = sum_{k=0}^{K-1} c_k * s[t - k]
/// Every output sample is accumulated from 0.0 in increasing k, which fixes
/// the floating-point result independently of how the work is scheduled.
/// Throws DomainError for an empty signal.
std::vector<double> derivative_1d(std::span<const double> signal, const CoefficientSeries& coeffs,
                                  BoundaryPolicy boundary = BoundaryPolicy::replicate);

/// Applies derivative_1d along every row (taps at s(x - k, y)). Rows run in
/// parallel; the result is bit-identical for any thread count.
ImagePlane derivative_x(const ImagePlane& plane, const CoefficientSeries& coeffs,
                        BoundaryPolicy boundary = BoundaryPolicy::replicate,
                        Parallelism parallelism = {});

/// Same operator along columns (taps at s(x, y - k)). Equal to
/// derivative_x(plane.transposed()).transposed() bit for bit.
ImagePlane derivative_y(const ImagePlane& plane, const CoefficientSeries& coeffs,
                        BoundaryPolicy boundary = BoundaryPolicy::replicate,
                        Parallelism parallelism = {});

}  // namespace fracgrad
