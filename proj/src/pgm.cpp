#include "polarfreq/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

#include "polarfreq/error.hpp"
#include "polarfreq/file_util.hpp"

namespace polarfreq {

namespace {

class HeaderReader {
public:
  HeaderReader(std::string_view bytes, std::size_t start) : bytes_(bytes), pos_(start) {}

  std::size_t offset() const noexcept { return pos_; }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = static_cast<unsigned char>(bytes_[pos_]);
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long read_unsigned(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < bytes_.size() &&
           std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000L) throw ParseError(std::string(what) + " is too large", start);
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(std::string("expected ") + what + " at byte " + std::to_string(start),
                       start);
    }
    return value;
  }

  void expect_single_whitespace() {
    if (pos_ >= bytes_.size() ||
        !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw ParseError("expected whitespace after maxval at byte " + std::to_string(pos_),
                       pos_);
    }
    ++pos_;
  }

private:
  std::string_view bytes_;
  std::size_t pos_;
};

}  // namespace

Graymap parse_graymap(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
    throw ParseError("unsupported magic number (expected P5 or P2)", 0);
  }
  const bool binary = bytes[1] == '5';
  HeaderReader header(bytes, 2);
  const long width = header.read_unsigned("width");
  const long height = header.read_unsigned("height");
  header.skip_space_and_comments();
  const std::size_t maxval_offset = header.offset();
  const long maxval = header.read_unsigned("maxval");
  if (maxval < 1 || maxval > 65535) {
    throw ParseError("maxval " + std::to_string(maxval) + " outside [1, 65535]",
                     maxval_offset);
  }
  if (width < 2 || height < 2) {
    throw ParseError("image must be at least 2x2, header says " + std::to_string(width) +
                         "x" + std::to_string(height),
                     2);
  }

  const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<double> pixels(count);

  if (binary) {
    header.expect_single_whitespace();
    const std::size_t start = header.offset();
    const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
    const std::size_t expected = count * sample_bytes;
    const std::size_t available = bytes.size() - start;
    if (available < expected) {
      throw ParseError("truncated payload: expected " + std::to_string(expected) +
                           " bytes, found " + std::to_string(available),
                       start + available);
    }
    for (std::size_t k = 0; k < count; ++k) {
      unsigned value;
      if (sample_bytes == 1) {
        value = static_cast<unsigned char>(bytes[start + k]);
      } else {
        value = (static_cast<unsigned>(static_cast<unsigned char>(bytes[start + 2 * k])) << 8) |
                static_cast<unsigned char>(bytes[start + 2 * k + 1]);
      }
      if (value > static_cast<unsigned>(maxval)) {
        throw ParseError("sample exceeds maxval", start + k * sample_bytes);
      }
      pixels[k] = value;
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      header.skip_space_and_comments();
      const std::size_t at = header.offset();
      if (at >= bytes.size()) {
        throw ParseError("truncated payload: expected " + std::to_string(count) +
                             " samples, found " + std::to_string(k),
                         at);
      }
      const long value = header.read_unsigned("sample");
      if (value > maxval) throw ParseError("sample exceeds maxval", at);
      pixels[k] = static_cast<double>(value);
    }
  }

  return {GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels)),
          static_cast<int>(maxval)};
}

Graymap read_graymap(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return parse_graymap(bytes);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.position());
  }
}

GrayImage load_pgm(const std::filesystem::path& path) {
  return read_graymap(path).image;
}

void write_pgm(std::ostream& out, const GrayImage& image, int maxval,
               PgmEncoding encoding) {
  if (maxval < 1 || maxval > 65535) throw ConfigError("maxval outside [1, 65535]");
  const bool binary = encoding == PgmEncoding::binary;
  out << (binary ? "P5" : "P2") << '\n'
      << image.width() << ' ' << image.height() << '\n'
      << maxval << '\n';

  auto quantize = [maxval](double v) {
    return static_cast<unsigned>(std::clamp(std::lround(v), 0L, static_cast<long>(maxval)));
  };

  if (binary) {
    std::string payload;
    payload.reserve(image.pixels().size() * (maxval > 255 ? 2 : 1));
    for (double v : image.pixels()) {
      const unsigned q = quantize(v);
      if (maxval > 255) payload.push_back(static_cast<char>(q >> 8));
      payload.push_back(static_cast<char>(q & 0xFF));
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  } else {
    for (int y = 0; y < image.height(); ++y) {
      for (int x = 0; x < image.width(); ++x) {
        out << (x ? " " : "") << quantize(image.at(x, y));
      }
      out << '\n';
    }
  }
}

void save_pgm(const std::filesystem::path& path, const GrayImage& image, int maxval,
              PgmEncoding encoding) {
  std::ostringstream buffer(std::ios::binary);
  write_pgm(buffer, image, maxval, encoding);
  write_file_atomic(path, buffer.str());
}

}  // namespace polarfreq
