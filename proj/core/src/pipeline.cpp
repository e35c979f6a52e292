#include "fracgrad/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <string_view>

#include "fracgrad/blur.hpp"
#include "fracgrad/errors.hpp"
#include "fracgrad/image_io.hpp"

namespace fracgrad {
namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void require_finite(double v, std::string_view name) {
  if (!std::isfinite(v)) throw DomainError(std::string(name) + " must be finite");
}

}  // namespace

void validate(const PipelineConfig& config) {
  require_finite(config.order, "nu");
  validate(VisibilityConfig{config.alpha, config.rounding});
  if (config.terms == 0) throw DomainError("terms must be at least 1");
  if (config.blur_sigma) {
    if (!std::isfinite(*config.blur_sigma) || *config.blur_sigma <= 0.0) {
      throw DomainError("blur sigma must be finite and > 0");
    }
  }
  if (config.adjust) validate(*config.adjust);
}

MultiChannelImage to_grayscale(const MultiChannelImage& image) {
  if (image.semantics() == ChannelSemantics::grayscale) return image;
  const auto r = image.channel(0).samples();
  const auto g = image.channel(1).samples();
  const auto b = image.channel(2).samples();
  ImagePlane out(image.width(), image.height());
  auto dst = out.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = (r[i] + g[i] + b[i]) / 3.0;
  std::vector<ImagePlane> planes;
  planes.push_back(std::move(out));
  return MultiChannelImage(std::move(planes), ChannelSemantics::grayscale);
}

PipelineResult process_image(const MultiChannelImage& input, const PipelineConfig& config) {
  validate(config);
  if (input.empty()) throw ContractError("process_image: empty input image");
  const MultiChannelImage source = config.grayscale ? to_grayscale(input) : input;
  const CoefficientSeries coeffs = generate_coefficients(config.order, config.terms);

  PipelineResult result;
  result.threads = resolve_thread_count(config.parallelism);
  const Parallelism parallelism{result.threads};

  std::vector<ImagePlane> magnitudes;
  for (std::size_t c = 0; c < source.color_channel_count(); ++c) {
    ImagePlane plane = source.channel(c);
    if (config.blur_sigma) plane = gaussian_blur(plane, *config.blur_sigma, parallelism);
    GradientField field =
        fractional_gradient(plane, coeffs, config.boundary, config.convention, parallelism);
    result.channel_max.push_back(channel_maximum(field.magnitude));
    magnitudes.push_back(std::move(field.magnitude));
  }

  const VisibilityConfig visibility{config.alpha, config.rounding};
  std::vector<ImagePlane> planes;
  for (const auto& m : magnitudes) planes.push_back(normalize_plane(m, visibility));
  if (source.has_alpha()) planes.push_back(source.channel(3));
  MultiChannelImage rendered(std::move(planes), source.semantics());

  if (config.adjust) rendered = adjust_brightness_contrast(rendered, *config.adjust, config.rounding);
  result.output = std::move(rendered);
  return result;
}

std::filesystem::path manifest_path(const PipelinePaths& paths) {
  if (paths.manifest) return *paths.manifest;
  std::filesystem::path p = paths.output;
  p += ".manifest";
  return p;
}

std::string format_manifest(const PipelineConfig& config, const PipelineResult& result,
                            const PipelinePaths& paths) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out.append(key).append("=").append(value).append("\n");
  };
  line("format", "fracgrad-manifest-1");
  line("input", paths.input.string());
  line("output", paths.output.string());
  line("nu", format_real(config.order));
  line("alpha", format_real(config.alpha));
  line("terms", std::to_string(config.terms));
  line("magnitude", std::string(to_string(config.convention)));
  line("boundary", std::string(to_string(config.boundary)));
  line("rounding", std::string(to_string(config.rounding)));
  line("grayscale", config.grayscale ? "true" : "false");
  line("blur_sigma", config.blur_sigma ? format_real(*config.blur_sigma) : "none");
  line("brightness", config.adjust ? format_real(config.adjust->brightness_offset) : "none");
  line("contrast", config.adjust ? format_real(config.adjust->contrast_gain) : "none");
  line("threads", std::to_string(result.threads));
  line("width", std::to_string(result.output.width()));
  line("height", std::to_string(result.output.height()));
  line("semantics", std::string(to_string(result.output.semantics())));
  line("channels", std::to_string(result.channel_max.size()));
  for (std::size_t c = 0; c < result.channel_max.size(); ++c) {
    line("gmax." + std::to_string(c), format_real(result.channel_max[c]));
  }
  return out;
}

PipelineResult run_pipeline(const PipelineConfig& config, const PipelinePaths& paths) {
  validate(config);
  // Fail on an unusable output extension before doing any work.
  const RasterFormat format = format_from_path(paths.output);
  const MultiChannelImage input = read_image(paths.input);
  PipelineResult result = process_image(input, config);
  write_file_bytes(paths.output, encode_image(result.output, format));
  const std::string manifest = format_manifest(config, result, paths);
  write_file_bytes(manifest_path(paths),
                   std::span(reinterpret_cast<const std::uint8_t*>(manifest.data()),
                             manifest.size()));
  return result;
}

}  // namespace fracgrad
