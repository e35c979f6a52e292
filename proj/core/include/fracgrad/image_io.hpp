#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "fracgrad/image.hpp"

namespace fracgrad {

/// Lossless 8-bit raster formats. PNG carries gray, RGB or RGBA; PGM (P5) is
/// gray only and PPM (P6) is RGB only, both with maxval 255.
enum class RasterFormat { png, pgm, ppm };

std::string_view to_string(RasterFormat format) noexcept;

/// Chooses the format from a file extension (case-insensitive .png, .pgm,
/// .ppm). Throws IoError for anything else.
RasterFormat format_from_path(const std::filesystem::path& path);

/// Decodes PNG or binary PGM/PPM (detected from the leading bytes). Each
/// 8-bit code value v becomes the real sample v. Palette PNGs expand to RGB
/// (RGBA when a tRNS chunk is present); gray below 8 bits expands to 8 bits.
/// Throws DecodeError for unsupported layouts, truncation or zero dimensions.
MultiChannelImage decode_image(std::span<const std::uint8_t> bytes);

/// Requires every sample integral and within [0, 255] (ContractError
/// otherwise) and a channel layout the format can hold (IoError otherwise).
std::vector<std::uint8_t> encode_image(const MultiChannelImage& image, RasterFormat format);

MultiChannelImage read_image(const std::filesystem::path& path);
void write_image(const MultiChannelImage& image, const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace fracgrad
