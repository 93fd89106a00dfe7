#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "punctnet/ingest.hpp"

namespace punctnet::io {

/// Reads a whole file; throws DataError naming the path on failure.
std::string read_file(const std::filesystem::path& path);

/// Writes `content` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, std::string_view content);

/// One token per line; marks keep their "#"-prefixed canonical surface.
std::string format_tokens(const Corpus& corpus);
void write_tokens(const std::filesystem::path& path, const Corpus& corpus);

/// Parses a token stream. Kinds are recovered from canonical surfaces.
Corpus parse_tokens(std::string_view text, std::string title = {}, std::string language = {});
Corpus read_tokens(const std::filesystem::path& path, std::string language = {});

/// JSON sidecar: title, language, token count, per-kind counts, sources.
std::string corpus_metadata_json(const Corpus& corpus, std::string_view title);

/// Restores source ranges and language from a sidecar written by
/// corpus_metadata_json(); ranges must match the token count.
void apply_metadata_json(Corpus& corpus, std::string_view json_text);

/// Cleaning rules from a JSON file. Missing keys keep the English defaults.
CleaningConfig load_cleaning_config(const std::filesystem::path& path);
std::string cleaning_config_json(const CleaningConfig& cfg);

/// Loads a token stream, picking up `<path>.json` metadata when present.
Corpus load_corpus(const std::filesystem::path& path);

}  // namespace punctnet::io
