#include "fracgrad/coefficients.hpp"

#include <cmath>

#include "fracgrad/errors.hpp"

namespace fracgrad {

double CoefficientSeries::sum() const noexcept {
  double total = 0.0;
  for (double v : values_) total += v;
  return total;
}

CoefficientSeries generate_coefficients(double order, std::size_t length) {
  if (!std::isfinite(order)) {
    throw DomainError("generate_coefficients: fractional order must be finite");
  }
  if (length == 0) {
    throw DomainError("generate_coefficients: truncation length must be at least 1");
  }
  std::vector<double> values(length);
  values[0] = 1.0;
  for (std::size_t k = 1; k < length; ++k) {
    const double kk = static_cast<double>(k);
    values[k] = values[k - 1] * (kk - 1.0 - order) / kk;
  }
  return CoefficientSeries(order, std::move(values));
}

}  // namespace fracgrad
