#include <doctest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "slidebin/pnm.hpp"

using namespace slidebin;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& header, std::vector<std::uint8_t> raster = {}) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), raster.begin(), raster.end());
  return out;
}

PnmErrorKind error_kind(const std::vector<std::uint8_t>& bytes) {
  try {
    (void)read_pgm(bytes);
  } catch (const PnmError& e) {
    return e.kind();
  }
  FAIL("expected a PnmError");
  return PnmErrorKind::bad_magic;
}

}  // namespace

TEST_CASE("GrayImage rejects inconsistent shapes") {
  CHECK_THROWS_AS(GrayImage(0, 3, std::vector<std::uint8_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(GrayImage(2, 2, std::vector<std::uint8_t>(3)), std::invalid_argument);
  CHECK_THROWS_AS(BinaryImage(1, 0), std::invalid_argument);
}

TEST_CASE("read_pgm decodes binary rasters row-major") {
  const auto image = read_pgm(bytes_of("P5 2 2 255\n", {0, 255, 128, 64}));
  REQUIRE(image.height() == 2);
  REQUIRE(image.width() == 2);
  CHECK(image.at(0, 0) == 0);
  CHECK(image.at(0, 1) == 255);
  CHECK(image.at(1, 0) == 128);
  CHECK(image.at(1, 1) == 64);

  const auto tiny = read_pgm(bytes_of("P5 1 1 255\n", {7}));
  CHECK(tiny.height() == 1);
  CHECK(tiny.width() == 1);
  CHECK(tiny.at(0, 0) == 7);
}

TEST_CASE("read_pgm keeps width before height") {
  const auto image = read_pgm(bytes_of("P5\n3 1\n255\n", {1, 2, 3}));
  CHECK(image.height() == 1);
  CHECK(image.width() == 3);
  CHECK(image.at(0, 2) == 3);
}

TEST_CASE("read_pgm accepts ASCII rasters and header comments") {
  const auto image = read_pgm(bytes_of("P2\n# made by hand\n3 2 # dims\n# depth next\n200\n"
                                       "0 10 20\n# a comment in the raster\n30 40 200\n"));
  REQUIRE(image.height() == 2);
  REQUIRE(image.width() == 3);
  CHECK(image.at(0, 1) == 10);
  CHECK(image.at(1, 2) == 200);

  const auto binary = read_pgm(bytes_of("P5 # comment\n2 1\n255\n", {9, 8}));
  CHECK(binary.at(0, 0) == 9);
}

TEST_CASE("read_pgm binary raster may start with a byte that looks like whitespace") {
  const auto image = read_pgm(bytes_of("P5 2 1 255\n", {'\n', ' '}));
  CHECK(image.at(0, 0) == '\n');
  CHECK(image.at(0, 1) == ' ');
}

TEST_CASE("read_pgm reports each failure distinctly") {
  CHECK(error_kind(bytes_of("P6 1 1 255\n", {0, 0, 0})) == PnmErrorKind::bad_magic);
  CHECK(error_kind(bytes_of("hello")) == PnmErrorKind::bad_magic);
  CHECK(error_kind(bytes_of("P5 x 1 255\n", {0})) == PnmErrorKind::malformed_header);
  CHECK(error_kind(bytes_of("P5 0 1 255\n")) == PnmErrorKind::malformed_header);
  CHECK(error_kind(bytes_of("P5 1 1\n")) == PnmErrorKind::malformed_header);
  CHECK(error_kind(bytes_of("P5 1 1 65535\n", {0, 0})) == PnmErrorKind::unsupported_maxval);
  CHECK(error_kind(bytes_of("P5 3 3 255\n", std::vector<std::uint8_t>(8, 1))) ==
        PnmErrorKind::truncated_data);
  CHECK(error_kind(bytes_of("P2 2 2 255\n1 2 3")) == PnmErrorKind::truncated_data);
  CHECK(error_kind(bytes_of("P5 1 1 100\n", {101})) == PnmErrorKind::bad_sample);
  CHECK(error_kind(bytes_of("P2 1 1 255\n300")) == PnmErrorKind::bad_sample);
}

TEST_CASE("write_pbm packs foreground as set bits") {
  BinaryImage single(1, 1);
  single.set(0, 0, Label::foreground);
  CHECK(write_pbm(single) == bytes_of("P4\n1 1\n", {0b10000000}));

  const BinaryImage blank(1, 8);
  CHECK(write_pbm(blank) == bytes_of("P4\n8 1\n", {0x00}));

  BinaryImage diagonal(2, 2);
  diagonal.set(0, 0, Label::foreground);
  diagonal.set(1, 1, Label::foreground);
  CHECK(write_pbm(diagonal) == bytes_of("P4\n2 2\n", {0x80, 0x40}));
}

TEST_CASE("write_pbm pads each row to a whole byte") {
  BinaryImage image(2, 9);
  image.set(0, 8, Label::foreground);
  image.set(1, 0, Label::foreground);
  CHECK(write_pbm(image) == bytes_of("P4\n9 2\n", {0x00, 0x80, 0x80, 0x00}));
}

TEST_CASE("PGM and PBM encoders round-trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> side(1, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const auto image = oracle::random_image(rng, side(rng), side(rng));
    CHECK(read_pgm(write_pgm(image)) == image);

    std::vector<Label> labels(image.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
      labels[k] = image.pixels()[k] < 128 ? Label::foreground : Label::background;
    }
    const BinaryImage binary(image.height(), image.width(), std::move(labels));
    CHECK(read_pbm(write_pbm(binary)) == binary);
  }
}
