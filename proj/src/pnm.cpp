#include "slidebin/pnm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>

namespace slidebin {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
          ++pos_;
        }
      } else if (std::isspace(ch) != 0) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Non-negative decimal token; nullopt when absent, non-numeric or too large.
  std::optional<std::size_t> number() {
    skip_space_and_comments();
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_]) != 0) {
      if (value > (std::numeric_limits<std::size_t>::max() - 9) / 10) {
        return std::nullopt;
      }
      value = value * 10 + (bytes_[pos_] - '0');
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      return std::nullopt;
    }
    if (pos_ < bytes_.size() && std::isspace(bytes_[pos_]) == 0 && bytes_[pos_] != '#') {
      return std::nullopt;
    }
    return value;
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t n) noexcept { pos_ += n; }
  bool at_end() const noexcept { return pos_ >= bytes_.size(); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct PnmHeader {
  char format;
  std::size_t width;
  std::size_t height;
  std::size_t maxval;
};

std::size_t require_dimension(HeaderReader& reader, const char* name) {
  const auto value = reader.number();
  if (!value || *value == 0) {
    throw PnmError(PnmErrorKind::malformed_header, std::string("PNM header: invalid ") + name);
  }
  return *value;
}

PnmHeader read_header(HeaderReader& reader, std::span<const std::uint8_t> bytes, bool bitmap) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw PnmError(PnmErrorKind::bad_magic, "not a PNM file");
  }
  const char format = static_cast<char>(bytes[1]);
  const bool known = bitmap ? format == '4' : (format == '2' || format == '5');
  if (!known) {
    throw PnmError(PnmErrorKind::bad_magic,
                   std::string("unsupported PNM magic P") + static_cast<char>(bytes[1]));
  }
  reader.advance(2);
  PnmHeader header{format, 0, 0, 1};
  header.width = require_dimension(reader, "width");
  header.height = require_dimension(reader, "height");
  if (header.width > std::numeric_limits<std::size_t>::max() / header.height) {
    throw PnmError(PnmErrorKind::malformed_header, "PNM header: image too large");
  }
  if (!bitmap) {
    const auto maxval = reader.number();
    if (!maxval || *maxval == 0) {
      throw PnmError(PnmErrorKind::malformed_header, "PGM header: invalid maxval");
    }
    if (*maxval > 255) {
      throw PnmError(PnmErrorKind::unsupported_maxval,
                     "PGM maxval " + std::to_string(*maxval) + " exceeds 255");
    }
    header.maxval = *maxval;
  }
  // Exactly one whitespace byte separates the header from a binary raster.
  if (format == '5' || format == '4') {
    if (reader.at_end()) {
      throw PnmError(PnmErrorKind::truncated_data, "PNM: no pixel data");
    }
    reader.advance(1);
  }
  return header;
}

void put_header(std::vector<std::uint8_t>& out, const std::string& header) {
  out.insert(out.end(), header.begin(), header.end());
}

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  HeaderReader reader(bytes);
  const PnmHeader header = read_header(reader, bytes, false);
  const std::size_t count = header.width * header.height;
  std::vector<std::uint8_t> pixels;
  pixels.reserve(count);

  if (header.format == '5') {
    if (bytes.size() - reader.pos() < count) {
      throw PnmError(PnmErrorKind::truncated_data,
                     "PGM: expected " + std::to_string(count) + " samples, found " +
                         std::to_string(bytes.size() - reader.pos()));
    }
    auto raster = bytes.subspan(reader.pos(), count);
    for (const auto sample : raster) {
      if (sample > header.maxval) {
        throw PnmError(PnmErrorKind::bad_sample, "PGM: sample exceeds maxval");
      }
    }
    pixels.assign(raster.begin(), raster.end());
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      reader.skip_space_and_comments();
      if (reader.at_end()) {
        throw PnmError(PnmErrorKind::truncated_data,
                       "PGM: expected " + std::to_string(count) + " samples, found " +
                           std::to_string(k));
      }
      const auto sample = reader.number();
      if (!sample || *sample > header.maxval) {
        throw PnmError(PnmErrorKind::bad_sample, "PGM: invalid ASCII sample");
      }
      pixels.push_back(static_cast<std::uint8_t>(*sample));
    }
  }
  return GrayImage(header.height, header.width, std::move(pixels));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
  std::vector<std::uint8_t> out;
  put_header(out, "P5\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) +
                      "\n255\n");
  out.insert(out.end(), image.pixels().begin(), image.pixels().end());
  return out;
}

std::vector<std::uint8_t> write_pbm(const BinaryImage& image) {
  std::vector<std::uint8_t> out;
  put_header(out, "P4\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) +
                      "\n");
  const std::size_t row_bytes = (image.width() + 7) / 8;
  const std::size_t header_size = out.size();
  out.resize(header_size + row_bytes * image.height(), 0);
  for (std::size_t i = 0; i < image.height(); ++i) {
    std::uint8_t* row = out.data() + header_size + i * row_bytes;
    for (std::size_t j = 0; j < image.width(); ++j) {
      if (image.at(i, j) == Label::foreground) {
        row[j / 8] |= static_cast<std::uint8_t>(0x80u >> (j % 8));
      }
    }
  }
  return out;
}

BinaryImage read_pbm(std::span<const std::uint8_t> bytes) {
  HeaderReader reader(bytes);
  const PnmHeader header = read_header(reader, bytes, true);
  const std::size_t row_bytes = (header.width + 7) / 8;
  if (bytes.size() - reader.pos() < row_bytes * header.height) {
    throw PnmError(PnmErrorKind::truncated_data, "PBM: raster truncated");
  }
  BinaryImage image(header.height, header.width);
  const std::uint8_t* raster = bytes.data() + reader.pos();
  for (std::size_t i = 0; i < header.height; ++i) {
    for (std::size_t j = 0; j < header.width; ++j) {
      const bool ink = (raster[i * row_bytes + j / 8] & (0x80u >> (j % 8))) != 0;
      image.set(i, j, ink ? Label::foreground : Label::background);
    }
  }
  return image;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("error reading " + path.string());
  }
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("error writing " + path.string());
  }
}

}  // namespace slidebin
