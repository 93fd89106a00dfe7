#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "punctnet/manifest.hpp"

namespace punctnet::cli {

/// Settings shared by every subcommand after manifest and flags are merged.
struct Options {
  std::optional<std::filesystem::path> config;
  std::vector<std::filesystem::path> inputs;
  std::optional<std::uint64_t> seed;
  std::optional<bool> include_punct;
  std::optional<bool> fs_mode;
  std::optional<std::string> sizes;
  std::optional<std::size_t> realizations;
  std::optional<std::filesystem::path> out;
  std::optional<unsigned> threads;

  // tokenize
  std::optional<std::string> language;
  std::optional<std::filesystem::path> cleaning;

  // zipf
  std::size_t r_min = 1;
  std::size_t r_max = 0;
  double c_max = 100.0;
  std::size_t pl_min = 10;
  std::size_t pl_max = 10000;

  // network
  bool looped = false;
  std::size_t aspl_nodes = 10;
};

int cmd_tokenize(const Options& opt);
int cmd_zipf(const Options& opt);
int cmd_network(const Options& opt);
int cmd_experiment(const Options& opt);

}  // namespace punctnet::cli
