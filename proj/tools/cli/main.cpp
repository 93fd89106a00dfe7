#include <CLI11.hpp>
#include <cstdio>
#include <fmt/format.h>

#include "commands.hpp"
#include "punctnet/error.hpp"
#include "punctnet/version.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitData = 2;

void add_common(CLI::App* cmd, punctnet::cli::Options& opt, bool with_inputs) {
  if (with_inputs) cmd->add_option("inputs", opt.inputs, "Text files, or one .tokens file");
  cmd->add_option("--config", opt.config, "Experiment manifest (key = value)");
  cmd->add_option("--seed", opt.seed, "Base seed");
  cmd->add_option("--out", opt.out, "Run directory");
  cmd->add_option("--threads", opt.threads, "Worker threads, 0 = all cores");
  cmd->add_option("--cleaning", opt.cleaning, "Cleaning rules (JSON)");
  cmd->add_option("--fs-mode", opt.fs_mode, "Merge sentence-ending marks into #fs (off unless given; bare flag means true)")
      ->expected(0, 1)
      ->default_str("true");
  auto* punct = cmd->add_flag_function(
      "--include-punct", [&opt](std::int64_t) { opt.include_punct = true; },
      "Keep punctuation tokens");
  cmd->add_flag_function(
         "--no-punct", [&opt](std::int64_t) { opt.include_punct = false; },
         "Drop punctuation tokens")
      ->excludes(punct);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Punctuation-aware rank statistics and word-adjacency networks", "punctnet"};
  app.set_version_flag("--version", std::string(punctnet::kVersion));
  app.require_subcommand(1);
  punctnet::cli::Options opt;

  auto* tokenize = app.add_subcommand("tokenize", "Clean and tokenize raw text files");
  add_common(tokenize, opt, true);
  tokenize->add_option("--language", opt.language, "Language tag");

  auto* zipf = app.add_subcommand("zipf", "Rank-frequency table and Zipf-Mandelbrot fits");
  add_common(zipf, opt, true);
  zipf->add_option("--r-min", opt.r_min, "First rank of the fit range")->capture_default_str();
  zipf->add_option("--r-max", opt.r_max, "Last rank of the fit range, 0 = all")
      ->capture_default_str();
  zipf->add_option("--c-max", opt.c_max, "Upper bound of the c search")->capture_default_str();
  zipf->add_option("--pl-min", opt.pl_min, "First rank of the power-law fit")
      ->capture_default_str();
  zipf->add_option("--pl-max", opt.pl_max, "Last rank of the power-law fit")
      ->capture_default_str();

  auto* network = app.add_subcommand("network", "Adjacency network, metrics and Heaps curve");
  add_common(network, opt, true);
  network->add_flag("--looped", opt.looped, "Link the last token back to the first");
  network->add_option("--aspl-nodes", opt.aspl_nodes, "Most frequent nodes given l_i")
      ->capture_default_str();

  auto* experiment = app.add_subcommand("experiment", "Sampling, null model and removal sweep");
  add_common(experiment, opt, false);
  experiment->add_option("--sizes", opt.sizes, "Sample sizes, comma separated");
  experiment->add_option("--realizations", opt.realizations, "Null-model realizations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*tokenize) return punctnet::cli::cmd_tokenize(opt);
    if (*zipf) return punctnet::cli::cmd_zipf(opt);
    if (*network) return punctnet::cli::cmd_network(opt);
    if (*experiment) return punctnet::cli::cmd_experiment(opt);
  } catch (const punctnet::ConfigError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitConfig;
  } catch (const punctnet::DataError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitData;
  }
  return kExitConfig;
}
