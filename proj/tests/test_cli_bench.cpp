#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slidebin/cli.hpp"
#include "slidebin/pnm.hpp"

using namespace slidebin;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("slidebin-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  args.insert(args.begin(), "slidebin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return status;
}

}  // namespace

TEST_CASE("binarize subcommand writes the same PBM for every engine") {
  TempDir dir;
  std::mt19937_64 rng(10);
  const auto image = oracle::random_image(rng, 45, 70);
  const auto input = dir.path / "in.pgm";
  write_file(input, write_pgm(image));

  std::vector<std::vector<std::uint8_t>> outputs;
  for (const std::string engine : {"naive", "integral", "sliding"}) {
    const auto output = dir.path / (engine + ".pbm");
    REQUIRE(run_cli({"binarize", input.string(), output.string(), "--rule", "sauvola",
                     "--engine", engine, "-k", "0.5", "-R", "128", "-w", "32", "-h", "32"}) ==
            cli::kOk);
    outputs.push_back(read_file(output));
  }
  CHECK(outputs[0] == outputs[1]);
  CHECK(outputs[0] == outputs[2]);
  CHECK(read_pbm(outputs[2]) ==
        binarize_naive(image, WindowSpec(32, 32), RuleKind::sauvola, RuleParams{}));

  const auto column = dir.path / "column.pbm";
  REQUIRE(run_cli({"binarize", input.string(), column.string(), "--axis", "row"}) == cli::kOk);
  CHECK(read_file(column) == outputs[2]);
}

TEST_CASE("binarize subcommand with otsu ignores the window") {
  TempDir dir;
  std::mt19937_64 rng(3);
  const auto image = oracle::random_image(rng, 20, 20);
  const auto input = dir.path / "in.pgm";
  write_file(input, write_pgm(image));
  const auto a = dir.path / "a.pbm";
  const auto b = dir.path / "b.pbm";
  REQUIRE(run_cli({"binarize", input.string(), a.string(), "--rule", "otsu", "-w", "3"}) ==
          cli::kOk);
  REQUIRE(run_cli({"binarize", input.string(), b.string(), "--rule", "otsu", "-w", "1000",
                   "-h", "1000"}) == cli::kOk);
  CHECK(read_file(a) == read_file(b));
  CHECK(read_pbm(read_file(a)) == apply_global_threshold(image, otsu_threshold(image)));
}

TEST_CASE("binarize subcommand exit statuses") {
  TempDir dir;
  const auto input = dir.path / "in.pgm";
  write_file(input, write_pgm(GrayImage(5, 5, 50)));
  const auto output = (dir.path / "out.pbm").string();

  CHECK(run_cli({"binarize", input.string(), output, "--engine", "integral", "--rule",
                 "bernsen"}) == cli::kUnsupported);
  CHECK(run_cli({"binarize", (dir.path / "missing.pgm").string(), output}) == cli::kIoError);
  CHECK(run_cli({"binarize", input.string(), (dir.path / "no/such/dir.pbm").string()}) ==
        cli::kIoError);

  const auto broken = dir.path / "broken.pgm";
  write_file(broken, std::vector<std::uint8_t>{'P', '5', ' ', '3', ' ', '3', ' ', '2', '5', '5',
                                               '\n', 1, 2});
  CHECK(run_cli({"binarize", broken.string(), output}) == cli::kIoError);

  CHECK(run_cli({"binarize", input.string(), output, "--rule", "gatos"}) == cli::kUsage);
  CHECK(run_cli({"binarize", input.string(), output, "--engine", "gpu"}) == cli::kUsage);
  CHECK(run_cli({"binarize", input.string(), output, "-k", "-1"}) == cli::kUsage);
  CHECK(run_cli({"binarize", input.string(), output, "-w", "300"}) == cli::kUsage);
  CHECK(run_cli({"binarize", input.string(), output, "-w", "300", "--max-window-side",
                 "300"}) == cli::kOk);
  CHECK(run_cli({"binarize", input.string()}) == cli::kUsage);
  CHECK(run_cli({}) == cli::kUsage);
  CHECK(run_cli({"--help"}) == cli::kOk);
}

TEST_CASE("bench CSV schema and determinism") {
  BenchConfig config;
  config.sizes = {{40, 60}, {30, 30}};
  config.windows = {WindowSpec(3, 3), WindowSpec(15, 15)};
  config.engines = {BenchEngine::naive, BenchEngine::integral, BenchEngine::sliding,
                    BenchEngine::otsu};
  config.rules = {RuleKind::sauvola, RuleKind::bernsen};
  config.repeats = 3;
  config.seed = 5;

  const auto first = run_bench(config);
  const auto second = run_bench(config);
  REQUIRE(first.size() == second.size());
  // Per image: naive 2 rules x 2 windows, integral 1 x 2, sliding 2 x 2, otsu 1.
  CHECK(first.size() == 2 * (4 + 2 + 4 + 1));
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(first[k].engine == second[k].engine);
    CHECK(first[k].rule == second[k].rule);
    CHECK(first[k].window_height == second[k].window_height);
    CHECK(first[k].peak_aux_slots == second[k].peak_aux_slots);
    CHECK(first[k].wall_time_s > 0.0);
    const auto& r = first[k];
    if (r.engine == BenchEngine::sliding && r.rule == RuleKind::sauvola) {
      CHECK(r.peak_aux_slots == 2 * std::min(r.height, r.width));
    }
    if (r.engine == BenchEngine::integral) {
      CHECK(r.peak_aux_slots == 2 * r.height * r.width);
    }
    if (r.engine == BenchEngine::naive && r.rule == RuleKind::sauvola) {
      CHECK(r.peak_aux_slots == 0);
    }
  }
  CHECK(random_image(8, 8, 42) == random_image(8, 8, 42));
  CHECK_FALSE(random_image(8, 8, 42) == random_image(8, 8, 43));

  std::ostringstream csv;
  write_bench_csv(csv, first);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "engine,rule,H,W,h,w,wall_time_s,peak_aux_slots");
  std::string row;
  std::getline(lines, row);
  CHECK(row.rfind("naive,sauvola,40,60,3,3,", 0) == 0);

  config.repeats = 2;
  CHECK_THROWS_AS(run_bench(config), std::invalid_argument);
}

TEST_CASE("bench subcommand") {
  std::string out, err;
  REQUIRE(run_cli({"bench", "--sizes", "20x30", "--windows", "3,5x7", "--engines",
                   "sliding,otsu", "--rules", "niblack", "--repeats", "3", "-k", "-0.2"},
                  &out, &err) == cli::kOk);
  CHECK(out.rfind("engine,rule,H,W,h,w,wall_time_s,peak_aux_slots\n", 0) == 0);
  CHECK(out.find("sliding,niblack,20,30,5,7,") != std::string::npos);
  CHECK(out.find("otsu,otsu,20,30,0,0,") != std::string::npos);
  CHECK(err.find("sliding/otsu") != std::string::npos);

  CHECK(run_cli({"bench", "--repeats", "1"}) == cli::kUsage);
  CHECK(run_cli({"bench", "--engines", "quantum"}) == cli::kUsage);
}
