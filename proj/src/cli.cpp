#include "slidebin/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slidebin/pnm.hpp"

namespace slidebin::cli {

int run_binarize(const BinarizeRequest& request, std::ostream& err) {
  if (!engine_supports(request.engine, request.rule)) {
    err << "error: engine '" << engine_name(request.engine) << "' does not support rule '"
        << rule_name(request.rule) << "'\n";
    return kUnsupported;
  }
  try {
    validate_params(request.rule, request.params);
    if (request.rule != RuleKind::otsu) {
      check_sweep_window(request.window, request.sweep);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::vector<std::uint8_t> bytes;
  try {
    bytes = read_file(request.input);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  try {
    const GrayImage image = read_pgm(bytes);
    const BinaryImage out =
        binarize(request.engine, image, request.window, request.rule, request.params,
                 request.sweep);
    write_file(request.output, write_pbm(out));
  } catch (const PnmError& e) {
    err << "error: " << request.input.string() << ": " << e.what() << '\n';
    return kIoError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const UnsupportedRule& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

int run_bench_command(const BenchConfig& config, std::ostream& csv, std::ostream& err) {
  std::vector<BenchRecord> records;
  try {
    records = run_bench(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  write_bench_csv(csv, records);
  write_bench_summary(err, records);
  return kOk;
}

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

// Options shared by both subcommands.
struct RuleOptions {
  RuleParams params;

  void attach(CLI::App& app) {
    app.add_option("-k", params.k, "Rule weight k")->capture_default_str();
    app.add_option("-R,--range", params.range, "Dynamic range of the standard deviation")
        ->capture_default_str();
    app.add_option("--phansalkar-p", params.phansalkar_p,
                   "Phansalkar p (library default, not a published value)")
        ->capture_default_str();
    app.add_option("--phansalkar-q", params.phansalkar_q,
                   "Phansalkar q per gray level (library default, not a published value)")
        ->capture_default_str();
    app.add_option("--feng-alpha1", params.feng_alpha1, "Feng alpha1 (library default)")
        ->capture_default_str();
    app.add_option("--feng-k1", params.feng_k1, "Feng k1 (library default)")
        ->capture_default_str();
    app.add_option("--feng-k2", params.feng_k2, "Feng k2 (library default)")
        ->capture_default_str();
    app.add_option("--feng-gamma", params.feng_gamma, "Feng gamma (library default)")
        ->capture_default_str();
    app.add_flag("--khurshid-clamped-count", params.khurshid_clamped_count,
                 "Khurshid: use the clamped window count instead of h*w");
    app.add_option("--contrast", params.contrast, "bernsen-contrast minimum max-min range")
        ->capture_default_str();
    app.add_flag("--wolf-adaptive-range", params.wolf_adaptive_range,
                 "Wolf: use the largest window standard deviation as R");
  }
};

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local adaptive binarization with sliding column accumulators", "slidebin"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  // binarize
  auto* bin = app.add_subcommand("binarize", "Binarize a PGM image into a PBM image");
  bin->set_help_flag("--help", "Print this help message and exit");
  BinarizeRequest request;
  RuleOptions bin_rule;
  std::string engine = "sliding";
  std::string rule = "sauvola";
  std::string axis;
  std::size_t window_height = 32;
  std::size_t window_width = 32;
  bin->add_option("input", request.input, "Input PGM (P2 or P5)")->required();
  bin->add_option("output", request.output, "Output PBM (P4)")->required();
  bin->add_option("--rule", rule, "Threshold rule")->capture_default_str();
  bin->add_option("--engine", engine, "naive, integral or sliding")->capture_default_str();
  bin->add_option("-h,--window-height", window_height, "Window height")->capture_default_str();
  bin->add_option("-w,--window-width", window_width, "Window width")->capture_default_str();
  bin->add_option("--axis", axis, "Force the sweep axis: row or column");
  bin->add_option("--max-window-side", request.sweep.max_window_side,
                  "Largest window side the accumulators are sized for")
      ->capture_default_str();
  bin_rule.attach(*bin);

  // bench
  auto* bench = app.add_subcommand("bench", "Time the engines and print CSV records");
  bench->set_help_flag("--help", "Print this help message and exit");
  BenchConfig config;
  RuleOptions bench_rule;
  std::string sizes = "512x512";
  std::string windows = "15,31,63,127";
  std::string engines = "naive,integral,sliding,otsu";
  std::string rules = "sauvola";
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path csv_path;
  bench->add_option("--sizes", sizes, "Comma-separated HxW image sizes")->capture_default_str();
  bench->add_option("--windows", windows, "Comma-separated window sides or HxW")
      ->capture_default_str();
  bench->add_option("--engines", engines, "Comma-separated engines")->capture_default_str();
  bench->add_option("--rules", rules, "Comma-separated rules")->capture_default_str();
  bench->add_option("--repeats", config.repeats, "Timed runs per combination (>= 3)")
      ->capture_default_str();
  bench->add_option("--seed", config.seed, "Seed of the random images")->capture_default_str();
  bench->add_option("--input", inputs, "Additional PGM images to time");
  bench->add_option("--out", csv_path, "Write CSV here instead of standard output");
  bench_rule.attach(*bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (bin->parsed()) {
      const auto parsed_engine = parse_engine(engine);
      if (!parsed_engine) {
        err << "error: unknown engine '" << engine << "'\n";
        return kUsage;
      }
      request.engine = *parsed_engine;
      request.rule = rule_from_name(rule);
      request.window = WindowSpec(window_height, window_width);
      request.params = bin_rule.params;
      if (!axis.empty()) {
        request.sweep.axis = parse_sweep_axis(axis);
        if (!request.sweep.axis) {
          err << "error: unknown axis '" << axis << "'\n";
          return kUsage;
        }
      }
      return run_binarize(request, err);
    }

    for (const auto& item : split_list(sizes)) config.sizes.push_back(parse_image_size(item));
    for (const auto& item : split_list(windows)) config.windows.push_back(parse_window(item));
    for (const auto& item : split_list(engines)) {
      const auto parsed = parse_bench_engine(item);
      if (!parsed) {
        err << "error: unknown engine '" << item << "'\n";
        return kUsage;
      }
      config.engines.push_back(*parsed);
    }
    for (const auto& item : split_list(rules)) config.rules.push_back(rule_from_name(item));
    config.params = bench_rule.params;
    for (const auto& path : inputs) {
      try {
        config.images.push_back(read_pgm(read_file(path)));
      } catch (const std::runtime_error& e) {
        err << "error: " << path.string() << ": " << e.what() << '\n';
        return kIoError;
      }
    }
    if (csv_path.empty()) {
      return run_bench_command(config, out, err);
    }
    std::ofstream csv(csv_path);
    if (!csv) {
      err << "error: cannot open " << csv_path.string() << " for writing\n";
      return kIoError;
    }
    return run_bench_command(config, csv, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace slidebin::cli
