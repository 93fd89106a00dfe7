#include "punctnet/manifest.hpp"

#include <charconv>
#include <fmt/format.h>
#include <set>

#include "punctnet/corpus_io.hpp"
#include "punctnet/error.hpp"

namespace punctnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string_view::npos ? s.size() : comma;
    const auto item = trim(s.substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty())
    throw ConfigError(fmt::format("manifest key '{}': '{}' is not a non-negative integer", key,
                                  value));
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "on" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "off" || value == "no" || value == "0") return false;
  throw ConfigError(fmt::format("manifest key '{}': '{}' is not a boolean", key, value));
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path p{std::string(value)};
  return p.is_absolute() || base.empty() ? p : base / p;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out;
}

}  // namespace

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text))
    out.push_back(static_cast<std::size_t>(parse_unsigned("sizes", item)));
  if (out.empty()) throw ConfigError("empty size list");
  return out;
}

ExperimentConfig parse_manifest(std::string_view text, const std::filesystem::path& base) {
  ExperimentConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto line = trim(raw);
    if (!line.empty() && line.back() == '\r') line = trim(line.substr(0, line.size() - 1));
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(fmt::format("manifest line {}: expected 'key = value'", line_no));
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));
    if (key != "corpus" && !seen.insert(key).second)
      throw ConfigError(fmt::format("manifest line {}: duplicate key '{}'", line_no, key));

    if (key == "corpus") {
      for (const auto& item : split_list(value)) cfg.corpora.push_back(resolve(base, item));
    } else if (key == "tokens") {
      cfg.tokens = resolve(base, value);
    } else if (key == "language") {
      cfg.language = std::string(value);
    } else if (key == "cleaning_config") {
      cfg.cleaning_config = resolve(base, value);
    } else if (key == "seed") {
      cfg.seed = parse_unsigned(key, value);
    } else if (key == "sizes") {
      cfg.plan.sizes = parse_size_list(value);
    } else if (key == "m") {
      cfg.plan.m = parse_unsigned(key, value);
    } else if (key == "scatter_size") {
      cfg.plan.scatter_size = parse_unsigned(key, value);
    } else if (key == "targets") {
      cfg.plan.targets = split_list(value);
    } else if (key == "null_realizations") {
      cfg.null_realizations = parse_unsigned(key, value);
    } else if (key == "removal") {
      cfg.removal = parse_bool(key, value);
    } else if (key == "removal_realizations") {
      cfg.removal_realizations = parse_unsigned(key, value);
    } else if (key == "max_rank") {
      cfg.max_rank = parse_unsigned(key, value);
    } else if (key == "include_punct") {
      cfg.include_punct = parse_bool(key, value);
    } else if (key == "fs_mode") {
      cfg.fs_mode = parse_bool(key, value);
    } else if (key == "exact_budget") {
      cfg.exact_budget = parse_unsigned(key, value);
    } else if (key == "sample_sources") {
      cfg.sample_sources = parse_unsigned(key, value);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(parse_unsigned(key, value));
    } else if (key == "output") {
      cfg.output = resolve(base, value);
    } else {
      throw ConfigError(fmt::format("manifest line {}: unknown key '{}'", line_no, key));
    }
  }
  return cfg;
}

ExperimentConfig load_manifest(const std::filesystem::path& path) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const DataError& e) {
    throw ConfigError(e.what());
  }
  return parse_manifest(text, path.parent_path());
}

void ExperimentConfig::validate() const {
  if (!seed) throw ConfigError("manifest has no seed");
  if (corpora.empty() && !tokens) throw ConfigError("manifest names no corpus or tokens file");
  if (!corpora.empty() && tokens) throw ConfigError("manifest names both corpus and tokens");
  auto require = [](const std::filesystem::path& p) {
    if (!std::filesystem::exists(p)) throw ConfigError("file not found: " + p.string());
  };
  for (const auto& p : corpora) require(p);
  if (tokens) require(*tokens);
  if (cleaning_config) require(*cleaning_config);
  if (plan.m < 2) throw ConfigError("m must be at least 2");
  if (plan.sizes.empty()) throw ConfigError("no sample sizes");
  if (null_realizations < 2) throw ConfigError("null_realizations must be at least 2");
  if (removal && removal_realizations < 1)
    throw ConfigError("removal_realizations must be at least 1");
  if (removal && max_rank < 1) throw ConfigError("max_rank must be at least 1");
  if (sample_sources < 1) throw ConfigError("sample_sources must be at least 1");
}

std::string ExperimentConfig::canonical() const {
  std::vector<std::string> corpus_list;
  for (const auto& p : corpora) corpus_list.push_back(p.generic_string());
  std::vector<std::string> size_list;
  for (auto s : plan.sizes) size_list.push_back(std::to_string(s));
  std::string out;
  auto put = [&](std::string_view k, const std::string& v) { out += fmt::format("{} = {}\n", k, v); };
  put("corpus", join(corpus_list));
  put("tokens", tokens ? tokens->generic_string() : "");
  put("language", language);
  put("cleaning_config", cleaning_config ? cleaning_config->generic_string() : "");
  put("seed", seed ? std::to_string(*seed) : "");
  put("sizes", join(size_list));
  put("m", std::to_string(plan.m));
  put("scatter_size", std::to_string(plan.scatter_size));
  put("targets", join(plan.targets));
  put("null_realizations", std::to_string(null_realizations));
  put("removal", removal ? "on" : "off");
  put("removal_realizations", std::to_string(removal_realizations));
  put("max_rank", std::to_string(max_rank));
  put("include_punct", include_punct ? "true" : "false");
  put("fs_mode", fs_mode ? "true" : "false");
  put("exact_budget", std::to_string(exact_budget));
  put("sample_sources", std::to_string(sample_sources));
  put("output", output.generic_string());
  return out;
}

std::string ExperimentConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

}  // namespace punctnet
