#include "punctnet/corpus_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "punctnet/error.hpp"
#include "punctnet/utf8.hpp"

namespace punctnet::io {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

std::string format_tokens(const Corpus& corpus) {
  std::string out;
  std::size_t bytes = 0;
  for (const auto& t : corpus.tokens) bytes += t.surface.size() + 1;
  out.reserve(bytes);
  for (const auto& t : corpus.tokens) {
    out.append(t.surface);
    out.push_back('\n');
  }
  return out;
}

void write_tokens(const std::filesystem::path& path, const Corpus& corpus) {
  write_file(path, format_tokens(corpus));
}

Corpus parse_tokens(std::string_view text, std::string title, std::string language) {
  try {
    utf8::validate(text);
  } catch (const DecodeError& e) {
    throw DecodeError(e.offset(), "token stream " + (title.empty() ? std::string("<memory>") : title) +
                                      ": invalid UTF-8");
  }
  Corpus corpus;
  corpus.language = std::move(language);
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) corpus.tokens.push_back({std::string(line), kind_of_surface(line)});
    start = nl + 1;
  }
  corpus.sources.push_back({std::move(title), 0, corpus.tokens.size()});
  return corpus;
}

Corpus read_tokens(const std::filesystem::path& path, std::string language) {
  return parse_tokens(read_file(path), path.stem().string(), std::move(language));
}

std::string corpus_metadata_json(const Corpus& corpus, std::string_view title) {
  ordered_json j;
  j["title"] = title;
  j["language"] = corpus.language;
  j["token_count"] = corpus.size();
  j["dropped_symbols"] = corpus.dropped_symbols;
  ordered_json counts = ordered_json::object();
  const auto kc = corpus.kind_counts();
  for (auto kind : kAllTokenKinds) counts[std::string(kind_name(kind))] = kc[static_cast<std::size_t>(kind)];
  j["kind_counts"] = counts;
  ordered_json sources = ordered_json::array();
  for (const auto& s : corpus.sources)
    sources.push_back({{"title", s.title}, {"begin", s.begin}, {"end", s.end}});
  j["sources"] = sources;
  return j.dump(2) + "\n";
}

void apply_metadata_json(Corpus& corpus, std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DataError(std::string("corpus metadata is not valid JSON: ") + e.what());
  }
  if (j.contains("language")) corpus.language = j["language"].get<std::string>();
  if (j.contains("dropped_symbols")) corpus.dropped_symbols = j["dropped_symbols"].get<std::size_t>();
  if (j.contains("sources")) {
    std::vector<SourceRange> sources;
    for (const auto& s : j["sources"])
      sources.push_back({s.value("title", std::string{}), s.at("begin").get<std::size_t>(),
                         s.at("end").get<std::size_t>()});
    std::swap(corpus.sources, sources);
    try {
      corpus.check_invariants();
    } catch (const DataError&) {
      std::swap(corpus.sources, sources);
      throw DataError("corpus metadata source ranges do not match the token stream");
    }
  }
}

CleaningConfig load_cleaning_config(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ConfigError("cleaning config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  CleaningConfig cfg = CleaningConfig::english();
  try {
    auto strings = [&](const char* key, std::vector<std::string>& out) {
      if (j.contains(key)) out = j[key].get<std::vector<std::string>>();
    };
    if (j.contains("language")) cfg.language = j["language"].get<std::string>();
    strings("abbreviations", cfg.abbreviations);
    strings("chapter_patterns", cfg.chapter_patterns);
    strings("drop_line_patterns", cfg.drop_line_patterns);
    strings("inline_drop_patterns", cfg.inline_drop_patterns);
    strings("strip", cfg.strip);
    strings("dashes", cfg.dashes);
    if (j.contains("body_start_pattern")) cfg.body_start_pattern = j["body_start_pattern"].get<std::string>();
    if (j.contains("body_end_pattern")) cfg.body_end_pattern = j["body_end_pattern"].get<std::string>();
    if (j.contains("keep_dashes")) cfg.keep_dashes = j["keep_dashes"].get<bool>();
  } catch (const json::exception& e) {
    throw ConfigError("cleaning config '" + path.string() + "': " + e.what());
  }
  cfg.validate();
  return cfg;
}

std::string cleaning_config_json(const CleaningConfig& cfg) {
  ordered_json j;
  j["language"] = cfg.language;
  j["abbreviations"] = cfg.abbreviations;
  j["chapter_patterns"] = cfg.chapter_patterns;
  j["drop_line_patterns"] = cfg.drop_line_patterns;
  j["inline_drop_patterns"] = cfg.inline_drop_patterns;
  j["body_start_pattern"] = cfg.body_start_pattern;
  j["body_end_pattern"] = cfg.body_end_pattern;
  j["strip"] = cfg.strip;
  j["dashes"] = cfg.dashes;
  j["keep_dashes"] = cfg.keep_dashes;
  return j.dump(2) + "\n";
}

Corpus load_corpus(const std::filesystem::path& path) {
  Corpus corpus = read_tokens(path);
  auto sidecar = path;
  sidecar += ".json";
  if (std::filesystem::exists(sidecar)) apply_metadata_json(corpus, read_file(sidecar));
  return corpus;
}

}  // namespace punctnet::io
