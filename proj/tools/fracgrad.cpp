// fracgrad: render fractional gradient-magnitude maps of raster images.
//
//   fracgrad --nu 0.7 --alpha 0.4 input.png output.png
//   fracgrad --self-test

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "fracgrad/errors.hpp"
#include "fracgrad/pipeline.hpp"
#include "self_test.hpp"

namespace {

using fracgrad::ExitCode;

int fail(ExitCode code, const std::string& message) {
  std::cerr << "fracgrad: " << message << "\n";
  return static_cast<int>(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional-order gradient magnitude maps for raster images (PNG, PGM, PPM)",
               "fracgrad"};

  fracgrad::PipelineConfig config;
  std::optional<double> nu;
  std::optional<double> blur_sigma;
  std::optional<double> brightness;
  std::optional<double> contrast;
  std::optional<std::string> manifest;
  std::string input;
  std::string output;
  bool self_test = false;

  const std::map<std::string, fracgrad::MagnitudeConvention> conventions{
      {"euclidean", fracgrad::MagnitudeConvention::euclidean},
      {"abs-sum", fracgrad::MagnitudeConvention::absolute_sum}};
  const std::map<std::string, fracgrad::BoundaryPolicy> boundaries{
      {"replicate", fracgrad::BoundaryPolicy::replicate},
      {"zero", fracgrad::BoundaryPolicy::zero},
      {"skip", fracgrad::BoundaryPolicy::skip}};
  const std::map<std::string, fracgrad::Rounding> roundings{
      {"nearest", fracgrad::Rounding::nearest}, {"floor", fracgrad::Rounding::floor}};

  app.add_option("--nu", nu, "Fractional order (required; tested range [0, 1])");
  app.add_option("--alpha", config.alpha, "Visibility exponent, > 0")->capture_default_str();
  app.add_option("--terms", config.terms, "Number of series terms K")->capture_default_str();
  std::string magnitude = "euclidean";
  std::string boundary = "replicate";
  std::string rounding = "nearest";
  app.add_option("--magnitude", magnitude, "Gradient magnitude convention")
      ->check(CLI::IsMember(conventions))
      ->capture_default_str();
  app.add_option("--boundary", boundary, "Handling of taps outside the image")
      ->check(CLI::IsMember(boundaries))
      ->capture_default_str();
  app.add_flag("--grayscale", config.grayscale, "Average color channels before processing");
  app.add_option("--blur-sigma", blur_sigma, "Gaussian pre-blur sigma in pixels");
  app.add_option("--brightness", brightness, "Post-adjustment offset in code values");
  app.add_option("--contrast", contrast, "Post-adjustment gain about mid-gray");
  app.add_option("--rounding", rounding, "Quantization to 8-bit codes")
      ->check(CLI::IsMember(roundings))
      ->capture_default_str();
  app.add_option("--manifest", manifest, "Manifest path (default: <output>.manifest)");
  app.add_flag("--self-test", self_test, "Run built-in checks and exit");
  app.add_option("input", input, "Input raster (.png, .pgm, .ppm)");
  app.add_option("output", output, "Output raster (.png, .pgm, .ppm)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(ExitCode::usage, e.what());
  }

  if (self_test) {
    return fracgrad::tools::run_self_test(std::cout) == 0 ? 0
                                                          : static_cast<int>(ExitCode::numeric);
  }
  if (!nu) return fail(ExitCode::usage, "--nu is required");
  if (input.empty() || output.empty()) {
    return fail(ExitCode::usage, "expected positional arguments: input output");
  }

  config.order = *nu;
  config.convention = conventions.at(magnitude);
  config.boundary = boundaries.at(boundary);
  config.rounding = roundings.at(rounding);
  config.blur_sigma = blur_sigma;
  if (brightness || contrast) {
    config.adjust = fracgrad::AdjustConfig{brightness.value_or(0.0), contrast.value_or(1.0)};
  }

  try {
    if (auto threads = fracgrad::threads_from_environment()) config.parallelism.threads = *threads;
  } catch (const fracgrad::DomainError& e) {
    return fail(ExitCode::usage, e.what());
  }

  fracgrad::PipelinePaths paths{input, output, std::nullopt};
  if (manifest) paths.manifest = *manifest;

  try {
    fracgrad::run_pipeline(config, paths);
  } catch (const fracgrad::DomainError& e) {
    return fail(ExitCode::numeric, e.what());
  } catch (const fracgrad::ContractError& e) {
    return fail(ExitCode::numeric, e.what());
  } catch (const fracgrad::DecodeError& e) {
    return fail(ExitCode::io, e.what());
  } catch (const fracgrad::IoError& e) {
    return fail(ExitCode::io, e.what());
  } catch (const std::exception& e) {
    return fail(ExitCode::io, e.what());
  }
  return 0;
}
