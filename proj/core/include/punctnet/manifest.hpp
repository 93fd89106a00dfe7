#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "punctnet/harness.hpp"

namespace punctnet {

/// Experiment manifest. Text format, one `key = value` per line; blank lines
/// and lines starting with '#' are ignored. List values are comma separated.
///
///   corpus            raw text file; repeat the key or list several
///   tokens            pre-tokenized corpus (alternative to `corpus`)
///   language          language tag (default "en")
///   cleaning_config   JSON cleaning rules (default: built-in English rules)
///   seed              required
///   sizes             sample sizes s (default 1000,3162,10000,31623,100000)
///   m                 windows per size (default 100)
///   scatter_size      s for the empirical/null scatter (default 10000)
///   targets           tracked items (default: ten top-ranked)
///   null_realizations shuffled corpora for the scatter (default 20)
///   removal           on/off (default on)
///   removal_realizations shuffled corpora per removal (default 100)
///   max_rank          removals R = 1..max_rank (default 10)
///   include_punct     keep marks in the sequence (default true)
///   fs_mode           merge sentence-ending marks into #fs (default false)
///   exact_budget      node count up to which L is exact (default 20000)
///   sample_sources    BFS sources for sampled L (default 1000)
///   threads           worker threads, 0 = all cores (default 0)
///   output            run directory (default "run")
///
/// Relative paths are resolved against the manifest's directory.
struct ExperimentConfig {
  std::vector<std::filesystem::path> corpora;
  std::optional<std::filesystem::path> tokens;
  std::string language = "en";
  std::optional<std::filesystem::path> cleaning_config;
  std::optional<std::uint64_t> seed;
  SamplingPlan plan;
  std::size_t null_realizations = 20;
  bool removal = true;
  std::size_t removal_realizations = 100;
  std::size_t max_rank = 10;
  bool include_punct = true;
  bool fs_mode = false;
  std::size_t exact_budget = 20000;
  std::size_t sample_sources = 1000;
  unsigned threads = 0;
  std::filesystem::path output = "run";

  /// Throws ConfigError when the seed or inputs are missing, or a referenced
  /// file does not exist.
  void validate() const;

  /// Canonical `key = value` form; equal configs give equal text.
  std::string canonical() const;
  /// FNV-1a of canonical(), as 16 hex digits.
  std::string hash() const;
};

/// Parses manifest text. Does not validate; `base` anchors relative paths.
ExperimentConfig parse_manifest(std::string_view text, const std::filesystem::path& base = {});
ExperimentConfig load_manifest(const std::filesystem::path& path);

/// Comma separated list of sizes; throws ConfigError on malformed input.
std::vector<std::size_t> parse_size_list(std::string_view text);

}  // namespace punctnet
