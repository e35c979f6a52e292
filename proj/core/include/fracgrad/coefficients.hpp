#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracgrad {

inline constexpr std::size_t kDefaultTerms = 4;

/// Truncated Grünwald–Letnikov series for fractional order `order`:
/// c_0 = 1, c_k = c_{k-1} * (k - 1 - order) / k, i.e. (-1)^k * binom(order, k).
///
/// Immutable once produced by generate_coefficients().
class CoefficientSeries {
 public:
  double order() const noexcept { return order_; }
  std::size_t length() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }

  /// Sum of the retained terms, accumulated from k = 0 upward. This is the
  /// operator's response to a constant signal.
  double sum() const noexcept;

 private:
  CoefficientSeries(double order, std::vector<double> values)
      : order_(order), values_(std::move(values)) {}

  friend CoefficientSeries generate_coefficients(double order, std::size_t length);

  double order_ = 0.0;
  std::vector<double> values_;
};

/// Throws DomainError for a non-finite order or length == 0.
CoefficientSeries generate_coefficients(double order, std::size_t length = kDefaultTerms);

}  // namespace fracgrad
