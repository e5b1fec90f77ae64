#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frontgate {

/// Shortest round-trip-safe decimal rendering (17 significant digits, '.' separator).
std::string format_double(double value);

/// Comma-separated row of numbers rendered with format_double.
std::string csv_row(std::span<const double> values);

/// Lower-case hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Binary portable graymap (P5), one byte per pixel, values in [0, 1] mapped to [0, 255].
/// `rows` are image rows (top to bottom); all rows must have `width` entries.
/// `comment` goes on a '#' line after the magic number.
std::string encode_pgm(const std::vector<std::vector<double>>& rows, std::string_view comment);

/// Writes `contents` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace frontgate
