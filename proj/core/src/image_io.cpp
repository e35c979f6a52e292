#include "fracgrad/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "fracgrad/errors.hpp"

namespace fracgrad {
namespace {

constexpr std::uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};

// ---------------------------------------------------------------------------
// libpng glue. Errors longjmp back to the frame that called setjmp; every
// object with a destructor in that frame is constructed before setjmp.

struct PngErrorSink {
  char message[256] = {};
};

void png_error_callback(png_structp png, png_const_charp msg) {
  auto* sink = static_cast<PngErrorSink*>(png_get_error_ptr(png));
  std::snprintf(sink->message, sizeof(sink->message), "%s", msg ? msg : "libpng error");
  std::longjmp(png_jmpbuf(png), 1);
}

void png_warning_callback(png_structp, png_const_charp) {}

struct PngSource {
  std::span<const std::uint8_t> bytes;
  std::size_t offset = 0;
};

void png_read_callback(png_structp png, png_bytep out, png_size_t count) {
  auto* src = static_cast<PngSource*>(png_get_io_ptr(png));
  if (src->bytes.size() - src->offset < count) {
    png_error(png, "truncated PNG data");
  }
  std::memcpy(out, src->bytes.data() + src->offset, count);
  src->offset += count;
}

void png_write_callback(png_structp png, png_bytep data, png_size_t count) {
  auto* sink = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  sink->insert(sink->end(), data, data + count);
}

void png_flush_callback(png_structp) {}

MultiChannelImage planes_from_interleaved(std::span<const std::uint8_t> pixels, std::size_t width,
                                          std::size_t height, std::size_t channels) {
  std::vector<std::vector<double>> samples(channels, std::vector<double>(width * height));
  for (std::size_t i = 0; i < width * height; ++i) {
    for (std::size_t c = 0; c < channels; ++c) {
      samples[c][i] = static_cast<double>(pixels[i * channels + c]);
    }
  }
  std::vector<ImagePlane> planes;
  planes.reserve(channels);
  for (auto& s : samples) planes.emplace_back(width, height, std::move(s));
  return MultiChannelImage(std::move(planes), semantics_for_count(channels));
}

std::vector<std::uint8_t> interleave(const MultiChannelImage& image) {
  const std::size_t n = image.width() * image.height();
  const std::size_t channels = image.channel_count();
  std::vector<std::uint8_t> out(n * channels);
  for (std::size_t c = 0; c < channels; ++c) {
    const auto samples = image.channel(c).samples();
    for (std::size_t i = 0; i < n; ++i) {
      const double v = samples[i];
      if (!(v >= 0.0 && v <= 255.0) || std::floor(v) != v) {
        throw ContractError("encode_image: sample " + std::to_string(v) + " in channel " +
                            std::to_string(c) +
                            " is not an integral code value in [0, 255]; quantize first");
      }
      out[i * channels + c] = static_cast<std::uint8_t>(v);
    }
  }
  return out;
}

MultiChannelImage decode_png(std::span<const std::uint8_t> bytes) {
  PngErrorSink sink;
  PngSource source{bytes, 0};
  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
  volatile png_uint_32 out_width = 0;
  volatile png_uint_32 out_height = 0;
  volatile std::size_t channels = 0;

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &sink, png_error_callback,
                                           png_warning_callback);
  if (!png) throw DecodeError("PNG: cannot allocate decoder");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw DecodeError("PNG: cannot allocate decoder");
  }
  // 0 = ok, 1 = libpng error, 2 = unsupported layout
  volatile int status = 0;
  char reason[128] = {};
  if (setjmp(png_jmpbuf(png))) {
    status = 1;
  } else {
    png_set_read_fn(png, &source, png_read_callback);
    png_read_info(png, info);
    png_uint_32 width = 0;
    png_uint_32 height = 0;
    int bit_depth = 0;
    int color_type = 0;
    png_get_IHDR(png, info, &width, &height, &bit_depth, &color_type, nullptr, nullptr, nullptr);
    if (bit_depth == 16) {
      status = 2;
      std::snprintf(reason, sizeof(reason), "16-bit samples are not supported");
    } else if (color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
      status = 2;
      std::snprintf(reason, sizeof(reason), "gray+alpha images are not supported");
    } else {
      if (color_type == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
        if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
      }
      if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
      }
      png_set_interlace_handling(png);
      png_read_update_info(png, info);
      channels = png_get_channels(png, info);
      const std::size_t row_bytes = png_get_rowbytes(png, info);
      if (width == 0 || height == 0 || row_bytes != width * channels) {
        status = 2;
        std::snprintf(reason, sizeof(reason), "unexpected row layout");
      } else {
        out_width = width;
        out_height = height;
        pixels.resize(row_bytes * height);
        rows.resize(height);
        for (png_uint_32 y = 0; y < height; ++y) rows[y] = pixels.data() + y * row_bytes;
        png_read_image(png, rows.data());
        png_read_end(png, nullptr);
      }
    }
  }
  png_destroy_read_struct(&png, &info, nullptr);
  if (status == 1) throw DecodeError(std::string("PNG: ") + sink.message);
  if (status == 2) throw DecodeError(std::string("PNG: ") + reason);
  const std::size_t planes = channels;
  if (planes != 1 && planes != 3 && planes != 4) {
    throw DecodeError("PNG: unsupported channel count " + std::to_string(planes));
  }
  return planes_from_interleaved(pixels, out_width, out_height, planes);
}

std::vector<std::uint8_t> encode_png(const MultiChannelImage& image) {
  const std::vector<std::uint8_t> pixels = interleave(image);
  const std::size_t channels = image.channel_count();
  const std::size_t width = image.width();
  const std::size_t height = image.height();
  int color_type = PNG_COLOR_TYPE_GRAY;
  if (channels == 3) color_type = PNG_COLOR_TYPE_RGB;
  if (channels == 4) color_type = PNG_COLOR_TYPE_RGB_ALPHA;

  PngErrorSink sink;
  std::vector<std::uint8_t> out;
  std::vector<png_bytep> rows(height);
  for (std::size_t y = 0; y < height; ++y) {
    rows[y] = const_cast<png_bytep>(pixels.data() + y * width * channels);
  }

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &sink, png_error_callback,
                                            png_warning_callback);
  if (!png) throw IoError("PNG: cannot allocate encoder");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("PNG: cannot allocate encoder");
  }
  volatile bool failed = false;
  if (setjmp(png_jmpbuf(png))) {
    failed = true;
  } else {
    png_set_write_fn(png, &out, png_write_callback, png_flush_callback);
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                 color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
  }
  png_destroy_write_struct(&png, &info);
  if (failed) throw IoError(std::string("PNG: ") + sink.message);
  return out;
}

// ---------------------------------------------------------------------------
// Binary PNM (P5 / P6, maxval 255).

class PnmHeaderReader {
 public:
  explicit PnmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes), pos_(2) {}

  unsigned long next_number(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw DecodeError(std::string("PNM: missing or malformed ") + what + " in header");
    }
    unsigned long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000UL) throw DecodeError(std::string("PNM: ") + what + " too large");
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw DecodeError("PNM: header not terminated by whitespace");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_;
};

MultiChannelImage decode_pnm(std::span<const std::uint8_t> bytes) {
  const std::size_t channels = bytes[1] == '5' ? 1 : 3;
  PnmHeaderReader header(bytes);
  const auto width = header.next_number("width");
  const auto height = header.next_number("height");
  const auto maxval = header.next_number("maxval");
  if (width == 0 || height == 0) {
    throw DecodeError("PNM: zero-dimension image (" + std::to_string(width) + "x" +
                      std::to_string(height) + ")");
  }
  if (maxval != 255) {
    throw DecodeError("PNM: maxval " + std::to_string(maxval) + " unsupported (only 255)");
  }
  const std::size_t offset = header.raster_offset();
  const std::size_t expected = width * height * channels;
  if (bytes.size() < offset || bytes.size() - offset < expected) {
    throw DecodeError("PNM: truncated raster, expected " + std::to_string(expected) +
                      " bytes, found " +
                      std::to_string(bytes.size() > offset ? bytes.size() - offset : 0));
  }
  return planes_from_interleaved(bytes.subspan(offset, expected), width, height, channels);
}

std::vector<std::uint8_t> encode_pnm(const MultiChannelImage& image, RasterFormat format) {
  const std::vector<std::uint8_t> pixels = interleave(image);
  const std::string header = std::string(format == RasterFormat::pgm ? "P5" : "P6") + "\n" +
                             std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), pixels.begin(), pixels.end());
  return out;
}

}  // namespace

std::string_view to_string(RasterFormat format) noexcept {
  switch (format) {
    case RasterFormat::png: return "png";
    case RasterFormat::pgm: return "pgm";
    case RasterFormat::ppm: return "ppm";
  }
  return "unknown";
}

RasterFormat format_from_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (ext == ".png") return RasterFormat::png;
  if (ext == ".pgm") return RasterFormat::pgm;
  if (ext == ".ppm") return RasterFormat::ppm;
  throw IoError("unsupported raster extension '" + ext + "' for " + path.string() +
                " (expected .png, .pgm or .ppm)");
}

MultiChannelImage decode_image(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= sizeof(kPngSignature) &&
      std::equal(std::begin(kPngSignature), std::end(kPngSignature), bytes.begin())) {
    return decode_png(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P') {
    if (bytes[1] == '5' || bytes[1] == '6') return decode_pnm(bytes);
    if (bytes[1] >= '1' && bytes[1] <= '4') {
      throw DecodeError(std::string("PNM: variant P") + static_cast<char>(bytes[1]) +
                        " unsupported (only binary P5/P6)");
    }
  }
  throw DecodeError("unrecognized raster data (" + std::to_string(bytes.size()) +
                    " bytes): expected PNG signature or P5/P6 magic");
}

std::vector<std::uint8_t> encode_image(const MultiChannelImage& image, RasterFormat format) {
  if (image.empty() || image.width() == 0 || image.height() == 0) {
    throw ContractError("encode_image: image has zero dimensions");
  }
  switch (format) {
    case RasterFormat::png:
      return encode_png(image);
    case RasterFormat::pgm:
      if (image.semantics() != ChannelSemantics::grayscale) {
        throw IoError("PGM holds grayscale only; image is " +
                      std::string(to_string(image.semantics())));
      }
      return encode_pnm(image, format);
    case RasterFormat::ppm:
      if (image.semantics() != ChannelSemantics::rgb) {
        throw IoError("PPM holds RGB only; image is " + std::string(to_string(image.semantics())));
      }
      return encode_pnm(image, format);
  }
  throw IoError("encode_image: unknown format");
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for " + path.string());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

MultiChannelImage read_image(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  try {
    return decode_image(bytes);
  } catch (const DecodeError& e) {
    throw DecodeError(path.string() + ": " + e.what());
  }
}

void write_image(const MultiChannelImage& image, const std::filesystem::path& path) {
  const RasterFormat format = format_from_path(path);
  write_file_bytes(path, encode_image(image, format));
}

}  // namespace fracgrad
