#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fracgrad/coefficients.hpp"
#include "fracgrad/derivative.hpp"
#include "fracgrad/gradient.hpp"
#include "fracgrad/image.hpp"
#include "fracgrad/output_map.hpp"
#include "fracgrad/parallel.hpp"

namespace fracgrad {

/// Process exit codes of the fracgrad CLI.
enum class ExitCode : int { ok = 0, usage = 1, io = 2, numeric = 3 };

struct PipelineConfig {
  double order = 1.0;  // nu
  double alpha = 1.0;
  std::size_t terms = kDefaultTerms;
  MagnitudeConvention convention = MagnitudeConvention::euclidean;
  BoundaryPolicy boundary = BoundaryPolicy::replicate;
  bool grayscale = false;
  std::optional<double> blur_sigma;
  std::optional<AdjustConfig> adjust;
  Rounding rounding = Rounding::nearest;
  Parallelism parallelism;
};

/// Throws DomainError on any non-finite or out-of-domain field.
void validate(const PipelineConfig& config);

/// Channel average (r + g + b) / 3 in real arithmetic, unquantized. Alpha is
/// dropped; grayscale input is returned unchanged.
MultiChannelImage to_grayscale(const MultiChannelImage& image);

struct PipelineResult {
  MultiChannelImage output;
  std::vector<double> channel_max;  // G_max per processed channel
  unsigned threads = 1;
};

/// decode-free core of the batch pipeline:
///   [grayscale] -> [blur] -> fractional gradient per color channel ->
///   power-law normalization -> [brightness/contrast]
/// Alpha is copied through unchanged.
PipelineResult process_image(const MultiChannelImage& input, const PipelineConfig& config);

struct PipelinePaths {
  std::filesystem::path input;
  std::filesystem::path output;
  std::optional<std::filesystem::path> manifest;  // default: <output>.manifest
};

std::filesystem::path manifest_path(const PipelinePaths& paths);

/// Key=value text, one entry per line, recording every effective parameter
/// and the per-channel G_max.
std::string format_manifest(const PipelineConfig& config, const PipelineResult& result,
                            const PipelinePaths& paths);

/// Reads the input, runs process_image, writes the output raster and the
/// manifest. Propagates DomainError / ContractError / DecodeError / IoError.
PipelineResult run_pipeline(const PipelineConfig& config, const PipelinePaths& paths);

}  // namespace fracgrad
