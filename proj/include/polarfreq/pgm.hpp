#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "polarfreq/image.hpp"

namespace polarfreq {

/// A decoded portable graymap together with its declared maxval.
struct Graymap {
  GrayImage image;
  int maxval = 255;
};

enum class PgmEncoding { binary, ascii };  // P5, P2

/// Parses a P5 or P2 graymap held in memory. Comments ('#' to end of
/// line) are allowed between header tokens. Throws ParseError with the
/// byte offset of the problem.
Graymap parse_graymap(std::string_view bytes);

Graymap read_graymap(const std::filesystem::path& path);

/// Convenience wrapper returning only the pixels.
GrayImage load_pgm(const std::filesystem::path& path);

/// Intensities are rounded and clamped to [0, maxval]. maxval > 255 uses
/// two big-endian bytes per sample in the binary encoding.
void write_pgm(std::ostream& out, const GrayImage& image, int maxval = 255,
               PgmEncoding encoding = PgmEncoding::binary);

/// Writes through a temporary file and renames it into place.
void save_pgm(const std::filesystem::path& path, const GrayImage& image,
              int maxval = 255, PgmEncoding encoding = PgmEncoding::binary);

}  // namespace polarfreq
