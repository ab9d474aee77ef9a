#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "facereview/error.hpp"
#include "facereview/image.hpp"

namespace facereview {
namespace {

class Scanner {
 public:
  explicit Scanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] static void fail_at(std::size_t offset, const std::string& what) {
    throw ParseError("pgm: " + what + " at byte offset " + std::to_string(offset));
  }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Header and ASCII-raster integers. Comments are only legal in the header.
  long long read_uint(const char* field, bool allow_comments) {
    if (allow_comments) {
      skip_space_and_comments();
    } else {
      while (pos_ < bytes_.size() && std::isspace(bytes_[pos_])) ++pos_;
    }
    if (pos_ >= bytes_.size()) fail(std::string("unexpected end of data reading ") + field);
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) fail_at(start, std::string(field) + " too large");
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected unsigned integer for ") + field);
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }
  std::uint8_t byte_at(std::size_t i) const { return bytes_[i]; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  Scanner s(bytes);
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    Scanner::fail_at(0, "expected magic P2 or P5");
  }
  const bool binary = bytes[1] == '5';
  s.advance(2);

  const std::size_t width_at = s.pos();
  const long long width = s.read_uint("width", true);
  if (width <= 0) Scanner::fail_at(width_at, "width must be positive");
  const std::size_t height_at = s.pos();
  const long long height = s.read_uint("height", true);
  if (height <= 0) Scanner::fail_at(height_at, "height must be positive");
  const std::size_t maxval_at = s.pos();
  const long long maxval = s.read_uint("maxval", true);
  if (maxval <= 0 || maxval > 255) Scanner::fail_at(maxval_at, "maxval must be in [1, 255]");

  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<double> pixels;
  pixels.reserve(count);

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (s.remaining() == 0 || !std::isspace(s.peek())) s.fail("missing whitespace before raster");
    s.advance(1);
    if (s.remaining() < count) {
      s.fail("truncated pixel data: need " + std::to_string(count) + " bytes, have " +
             std::to_string(s.remaining()));
    }
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t at = s.pos() + i;
      const auto v = s.byte_at(at);
      if (v > maxval) Scanner::fail_at(at, "sample exceeds maxval");
      pixels.push_back(static_cast<double>(v));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t at = s.pos();
      const long long v = s.read_uint("sample", false);
      if (v > maxval) Scanner::fail_at(at, "sample exceeds maxval");
      pixels.push_back(static_cast<double>(v));
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

GrayImage load_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return load_pgm(bytes);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img, PgmEncoding encoding) {
  const std::string header = std::string(encoding == PgmEncoding::Binary ? "P5" : "P2") + "\n" +
                             std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto quantize = [](double v) {
    return static_cast<int>(std::lround(std::min(255.0, std::max(0.0, v))));
  };
  if (encoding == PgmEncoding::Binary) {
    for (double v : img.pixels()) out.push_back(static_cast<std::uint8_t>(quantize(v)));
  } else {
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        const std::string token = std::to_string(quantize(img.at(x, y)));
        out.insert(out.end(), token.begin(), token.end());
        out.push_back(x + 1 == img.width() ? '\n' : ' ');
      }
    }
  }
  return out;
}

void save_pgm_file(const GrayImage& img, const std::filesystem::path& path, PgmEncoding encoding) {
  const auto bytes = save_pgm(img, encoding);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write image '" + path.string() + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace facereview
