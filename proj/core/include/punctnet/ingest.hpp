#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "punctnet/token.hpp"

namespace punctnet {

/// Line that clean_text() puts where a chapter heading was; tokenize() turns
/// it into a #chap token. It is the private-use code point U+E000.
inline constexpr std::string_view kChapterSentinel = "\xEE\x80\x80";

/// Per-language cleaning rules. Patterns use ECMAScript regex syntax and are
/// matched against a whole line with surrounding whitespace trimmed.
struct CleaningConfig {
  std::string language = "en";
  /// Abbreviations whose dots are removed, e.g. "Mrs." -> "Mrs". Matched
  /// case-insensitively at word starts; every entry must end with '.'.
  std::vector<std::string> abbreviations;
  /// Heading lines replaced by the chapter sentinel.
  std::vector<std::string> chapter_patterns;
  /// Lines deleted outright (page numbers, footnote bodies, part titles).
  std::vector<std::string> drop_line_patterns;
  /// Regex matches deleted from inside lines (footnote references, ...).
  std::vector<std::string> inline_drop_patterns;
  /// When set, everything up to and including the first matching line is dropped.
  std::string body_start_pattern;
  /// When set, the first matching line and everything after it is dropped.
  std::string body_end_pattern;
  /// Typographic marks deleted from the text (quotes, brackets, ...).
  std::vector<std::string> strip;
  /// Dash marks replaced by a space unless keep_dashes is set.
  std::vector<std::string> dashes;
  bool keep_dashes = false;

  /// Default rules for English narrative prose.
  static CleaningConfig english();

  /// Throws ConfigError on duplicate abbreviations, entries not ending in
  /// '.', empty strip entries or patterns that do not compile.
  void validate() const;
};

struct SourceRange {
  std::string title;
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const SourceRange&, const SourceRange&) = default;
};

/// Ordered token sequence plus provenance.
struct Corpus {
  std::vector<Token> tokens;
  /// Partition of [0, tokens.size()) by constituent text.
  std::vector<SourceRange> sources;
  std::string language;
  /// Characters tokenize() could not classify and dropped.
  std::size_t dropped_symbols = 0;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  std::array<std::size_t, kTokenKindCount> kind_counts() const;

  /// Throws DataError when the source ranges do not partition the tokens.
  void check_invariants() const;
};

/// Removes typographic noise: strip-list marks, dashes, abbreviation dots,
/// dropped lines; replaces chapter headings with kChapterSentinel.
/// Throws DecodeError on malformed UTF-8.
std::string clean_text(std::string_view raw, const CleaningConfig& cfg);

/// Splits cleaned text into lowercased words and punctuation tokens.
Corpus tokenize(std::string_view cleaned, std::string title = {}, std::string language = {});

/// clean_text() followed by tokenize().
Corpus ingest_text(std::string_view raw, const CleaningConfig& cfg, std::string title = {});

/// Replaces #dot, #qu, #ex and #ell with #fs. Idempotent; length preserved.
Corpus aggregate_fullstops(Corpus corpus);

/// Concatenates corpora of one language, recording each constituent range.
Corpus merge_corpora(std::span<const Corpus> parts);

}  // namespace punctnet
