#include "self_test.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fracgrad/coefficients.hpp"
#include "fracgrad/derivative.hpp"
#include "fracgrad/image_io.hpp"
#include "fracgrad/output_map.hpp"
#include "fracgrad/pipeline.hpp"
#include "fracgrad/synthetic.hpp"

namespace fracgrad::tools {
namespace {

bool series_matches(double nu, const std::vector<double>& expected) {
  const auto s = generate_coefficients(nu, expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (std::fabs(s[k] - expected[k]) > 1e-15) return false;
  }
  return true;
}

bool first_order_step_localized() {
  PipelineConfig config;
  config.order = 1.0;
  config.alpha = 0.4;
  const auto step = generate_test_image(TestImageKind::step, 16, 8);
  const auto out = process_image(step, config).output.channel(0);
  for (std::size_t y = 0; y < 8; ++y) {
    for (std::size_t x = 0; x < 16; ++x) {
      if (out(x, y) != (x == 8 ? 255.0 : 0.0)) return false;
    }
  }
  return true;
}

bool zero_order_is_identity() {
  const auto img = generate_test_image(TestImageKind::disk, 13, 11);
  const auto& plane = img.channel(0);
  const auto coeffs = generate_coefficients(0.0, 4);
  return bit_identical(derivative_x(plane, coeffs), plane) &&
         bit_identical(derivative_y(plane, coeffs), plane);
}

bool visibility_worked_value() {
  const ImagePlane g(2, 1, std::vector<double>{1.0, 4.0});
  const auto out = normalize_plane(g, {0.4, Rounding::nearest});
  return out(0, 0) == 146.0 && out(1, 0) == 255.0;
}

bool png_round_trip() {
  const auto img = generate_spot_field(96, 96, 7).image;
  return decode_image(encode_image(img, RasterFormat::png)) == img;
}

}  // namespace

int run_self_test(std::ostream& out) {
  const std::vector<std::pair<std::string, std::function<bool()>>> checks{
      {"coefficients nu=0.5 K=4", [] { return series_matches(0.5, {1, -0.5, -0.125, -0.0625}); }},
      {"coefficients nu=0.7 K=4", [] { return series_matches(0.7, {1, -0.7, -0.105, -0.0455}); }},
      {"coefficients nu=1 K=4", [] { return series_matches(1.0, {1, -1, 0, 0}); }},
      {"nu=0 operators are identities", zero_order_is_identity},
      {"nu=1 step edge localized", first_order_step_localized},
      {"g/M=0.25 alpha=0.4 -> 146", visibility_worked_value},
      {"PNG round trip", png_round_trip},
  };
  int failures = 0;
  for (const auto& [name, check] : checks) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      out << "  exception: " << e.what() << "\n";
    }
    out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    failures += ok ? 0 : 1;
  }
  out << "self-test: " << (checks.size() - static_cast<std::size_t>(failures)) << "/"
      << checks.size() << " checks passed\n";
  return failures;
}

}  // namespace fracgrad::tools
