#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "slidebin/image.hpp"

namespace slidebin {

enum class PnmErrorKind {
  bad_magic,          // not "P2" or "P5"
  malformed_header,   // missing, non-numeric or zero dimension / maxval tokens
  unsupported_maxval, // maxval above 255
  truncated_data,     // fewer pixel samples than the header promises
  bad_sample,         // a sample above maxval or an unparsable ASCII sample
};

class PnmError : public std::runtime_error {
 public:
  PnmError(PnmErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  PnmErrorKind kind() const noexcept { return kind_; }

 private:
  PnmErrorKind kind_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes a binary (P5) or ASCII (P2) PGM with maxval <= 255. Gray levels
/// are kept as stored, without rescaling to 255. '#' comments are accepted
/// anywhere whitespace is allowed in the header.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Binary PGM, maxval 255.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

/// Binary PBM. Foreground is a 1 (black) bit, rows are padded to whole bytes.
std::vector<std::uint8_t> write_pbm(const BinaryImage& image);

/// Decodes a binary PBM produced by write_pbm.
BinaryImage read_pbm(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace slidebin
