#include "punctnet/ingest.hpp"

#include <algorithm>
#include <optional>
#include <regex>
#include <unordered_set>

#include "punctnet/error.hpp"
#include "punctnet/utf8.hpp"

namespace punctnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

std::regex compile(const std::string& pattern) {
  try {
    return std::regex(pattern, std::regex::ECMAScript | std::regex::optimize);
  } catch (const std::regex_error& e) {
    throw ConfigError("cleaning pattern '" + pattern + "' does not compile: " + e.what());
  }
}

std::vector<std::regex> compile_all(const std::vector<std::string>& patterns) {
  std::vector<std::regex> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(compile(p));
  return out;
}

bool any_full_match(const std::vector<std::regex>& patterns, std::string_view line) {
  const std::string_view t = trim(line);
  return std::any_of(patterns.begin(), patterns.end(), [&](const std::regex& re) {
    return std::regex_match(t.begin(), t.end(), re);
  });
}

bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c; }

/// Cleaning rules with patterns compiled and lists sorted for matching.
class Cleaner {
 public:
  explicit Cleaner(const CleaningConfig& cfg)
      : chapter_(compile_all(cfg.chapter_patterns)),
        drop_(compile_all(cfg.drop_line_patterns)),
        inline_(compile_all(cfg.inline_drop_patterns)),
        strip_(cfg.strip),
        dashes_(cfg.keep_dashes ? std::vector<std::string>{} : cfg.dashes) {
    if (!cfg.body_start_pattern.empty()) body_start_ = compile(cfg.body_start_pattern);
    if (!cfg.body_end_pattern.empty()) body_end_ = compile(cfg.body_end_pattern);
    for (const auto& a : cfg.abbreviations) {
      std::string lower;
      for (char c : a) lower.push_back(ascii_lower(c));
      longest_abbreviation_ = std::max(longest_abbreviation_, lower.size());
      abbreviations_.insert(std::move(lower));
    }
    auto longest_first = [](const std::string& a, const std::string& b) {
      return a.size() > b.size();
    };
    std::stable_sort(strip_.begin(), strip_.end(), longest_first);
    std::stable_sort(dashes_.begin(), dashes_.end(), longest_first);
    for (const auto& s : strip_) lead_byte_[static_cast<unsigned char>(s.front())] = true;
    for (const auto& s : dashes_) lead_byte_[static_cast<unsigned char>(s.front())] = true;
  }

  std::string run(std::string_view raw) const {
    std::string text;
    text.reserve(raw.size());
    for (char c : raw)
      if (c != '\r') text.push_back(c);

    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (true) {
      const auto nl = text.find('\n', start);
      if (nl == std::string::npos) {
        lines.emplace_back(std::string_view(text).substr(start));
        break;
      }
      lines.emplace_back(std::string_view(text).substr(start, nl - start));
      start = nl + 1;
    }

    std::size_t first = 0;
    std::size_t last = lines.size();
    if (body_start_) {
      for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto t = trim(lines[i]);
        if (std::regex_match(t.begin(), t.end(), *body_start_)) {
          first = i + 1;
          break;
        }
      }
    }
    if (body_end_) {
      for (std::size_t i = first; i < lines.size(); ++i) {
        const auto t = trim(lines[i]);
        if (std::regex_match(t.begin(), t.end(), *body_end_)) {
          last = i;
          break;
        }
      }
    }

    std::string out;
    out.reserve(text.size());
    bool first_line = true;
    for (std::size_t i = first; i < last; ++i) {
      const std::string_view line = lines[i];
      if (!drop_.empty() && any_full_match(drop_, line)) continue;
      if (!first_line) out.push_back('\n');
      first_line = false;
      if (!chapter_.empty() && any_full_match(chapter_, line)) {
        out.append(kChapterSentinel);
        continue;
      }
      clean_line(line, out);
    }
    return out;
  }

 private:
  void clean_line(std::string_view line, std::string& out) const {
    std::string buffer;
    if (!inline_.empty()) {
      buffer.assign(line);
      for (const auto& re : inline_) buffer = std::regex_replace(buffer, re, "");
      line = buffer;
    }
    std::string stripped;
    stripped.reserve(line.size());
    std::size_t i = 0;
    while (i < line.size()) {
      if (lead_byte_[static_cast<unsigned char>(line[i])]) {
        if (const auto n = match_any(dashes_, line, i)) {
          stripped.push_back(' ');
          i += n;
          continue;
        }
        if (const auto n = match_any(strip_, line, i)) {
          i += n;
          continue;
        }
      }
      stripped.push_back(line[i++]);
    }
    remove_abbreviation_dots(stripped, out);
  }

  static std::size_t match_any(const std::vector<std::string>& list, std::string_view s,
                               std::size_t pos) {
    for (const auto& item : list)
      if (s.compare(pos, item.size(), item) == 0) return item.size();
    return 0;
  }

  void remove_abbreviation_dots(std::string_view s, std::string& out) const {
    if (abbreviations_.empty()) {
      out.append(s);
      return;
    }
    std::size_t i = 0;
    while (i < s.size()) {
      const bool at_word_start =
          is_ascii_alpha(s[i]) &&
          (i == 0 || !(is_ascii_alpha(s[i - 1]) || is_ascii_digit(s[i - 1]) || s[i - 1] == '.' ||
                       s[i - 1] == '\'' || static_cast<unsigned char>(s[i - 1]) >= 0x80));
      if (!at_word_start) {
        out.push_back(s[i++]);
        continue;
      }
      std::size_t run = i;
      std::string lowered;
      while (run < s.size() && (is_ascii_alpha(s[run]) || s[run] == '.') &&
             lowered.size() < longest_abbreviation_) {
        lowered.push_back(ascii_lower(s[run]));
        ++run;
      }
      std::size_t matched = 0;
      for (std::size_t k = lowered.size(); k > 0; --k) {
        if (lowered[k - 1] == '.' && abbreviations_.contains(lowered.substr(0, k))) {
          matched = k;
          break;
        }
      }
      if (matched == 0) {
        out.push_back(s[i++]);
        continue;
      }
      for (std::size_t k = 0; k < matched; ++k)
        if (s[i + k] != '.') out.push_back(s[i + k]);
      i += matched;
    }
  }

  std::vector<std::regex> chapter_;
  std::vector<std::regex> drop_;
  std::vector<std::regex> inline_;
  std::optional<std::regex> body_start_;
  std::optional<std::regex> body_end_;
  std::vector<std::string> strip_;
  std::vector<std::string> dashes_;
  std::unordered_set<std::string> abbreviations_;
  std::size_t longest_abbreviation_ = 0;
  std::array<bool, 256> lead_byte_{};
};

// ---------------------------------------------------------------------------
// tokenizer

bool is_word_char(char32_t cp) {
  if (cp < 0x80)
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9');
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (cp < 0xC0 || cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // punctuation, symbols, arrows
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp >= 0xE000 && cp <= 0xF8FF) return false;  // private use (chapter sentinel)
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  if (cp == 0xFEFF || cp == 0xFFFD) return false;
  return true;
}

bool is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
         cp == 0xA0 || cp == 0x2028 || cp == 0x2029 || (cp >= 0x2000 && cp <= 0x200B) ||
         cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019 || cp == 0x02BC; }
bool is_hyphen(char32_t cp) { return cp == '-' || cp == 0x2010 || cp == 0x2011; }

constexpr char32_t kEllipsisChar = 0x2026;

bool is_sentence_end_char(char32_t cp) {
  return cp == '.' || cp == '?' || cp == '!' || cp == kEllipsisChar || cp == 0x203C ||
         cp == 0x2047 || cp == 0x2048 || cp == 0x2049;
}

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {
    std::size_t pos = 0;
    cps_.reserve(text.size());
    while (pos < text.size()) cps_.push_back(utf8::next(text, pos));
  }

  Corpus run(std::string title, std::string language) {
    Corpus corpus;
    corpus.language = std::move(language);
    std::size_t i = 0;
    while (i < cps_.size()) {
      const char32_t cp = cps_[i];
      if (is_word_char(cp)) {
        word_.push_back(cp);
        ++i;
        continue;
      }
      const char32_t next = i + 1 < cps_.size() ? cps_[i + 1] : 0;
      if (!word_.empty() && (is_apostrophe(cp) || is_hyphen(cp)) && is_word_char(next)) {
        word_.push_back(is_apostrophe(cp) ? U'\'' : U'-');
        ++i;
        continue;
      }
      if (!word_.empty() && (cp == '.' || cp == ',' || cp == ':') && is_digit(word_.back()) &&
          is_digit(next)) {
        word_.push_back(cp);
        ++i;
        continue;
      }
      flush_word(corpus);
      if (is_space(cp)) {
        ++i;
      } else if (is_sentence_end_char(cp)) {
        i = emit_sentence_end(i, corpus);
      } else if (cp == ',') {
        corpus.tokens.push_back(Token::mark(TokenKind::Comma));
        ++i;
      } else if (cp == ':') {
        corpus.tokens.push_back(Token::mark(TokenKind::Colon));
        ++i;
      } else if (cp == ';') {
        corpus.tokens.push_back(Token::mark(TokenKind::Semicolon));
        ++i;
      } else if (cp == 0xE000) {
        corpus.tokens.push_back(Token::mark(TokenKind::Chapter));
        ++i;
      } else {
        ++corpus.dropped_symbols;
        ++i;
      }
    }
    flush_word(corpus);
    corpus.sources.push_back({std::move(title), 0, corpus.tokens.size()});
    return corpus;
  }

 private:
  void flush_word(Corpus& corpus) {
    if (word_.empty()) return;
    std::string surface;
    for (char32_t cp : word_) utf8::append(surface, utf8::to_lower(cp));
    corpus.tokens.push_back(Token::word(std::move(surface)));
    word_.clear();
  }

  // A maximal run of sentence-ending characters yields one token, classed by
  // its first character; a leading run of three or more dots is an ellipsis.
  std::size_t emit_sentence_end(std::size_t i, Corpus& corpus) {
    std::size_t end = i;
    while (end < cps_.size() && is_sentence_end_char(cps_[end])) ++end;
    TokenKind kind = TokenKind::Dot;
    switch (cps_[i]) {
      case '?':
      case 0x2047:
      case 0x2048:
        kind = TokenKind::Question;
        break;
      case '!':
      case 0x203C:
      case 0x2049:
        kind = TokenKind::Exclamation;
        break;
      case kEllipsisChar:
        kind = TokenKind::Ellipsis;
        break;
      default: {
        std::size_t dots = 0;
        while (i + dots < end && cps_[i + dots] == '.') ++dots;
        const bool ellipsis_follows = i + dots < end && cps_[i + dots] == kEllipsisChar;
        kind = (dots >= 3 || ellipsis_follows) ? TokenKind::Ellipsis : TokenKind::Dot;
      }
    }
    corpus.tokens.push_back(Token::mark(kind));
    return end;
  }

  std::string_view text_;
  std::vector<char32_t> cps_;
  std::u32string word_;
};

}  // namespace

CleaningConfig CleaningConfig::english() {
  CleaningConfig cfg;
  cfg.language = "en";
  cfg.abbreviations = {"Mr.",   "Mrs.", "Ms.",  "Dr.",  "St.",     "Jr.",  "Sr.", "Prof.",
                       "Rev.",  "Capt.", "Col.", "Gen.", "Lt.",     "Sgt.", "Mt.", "Messrs.",
                       "Esq.",  "Hon.", "vs.",  "viz.", "i.e.",    "e.g."};
  cfg.chapter_patterns = {
      R"((?:CHAPTER|Chapter)\s+(?:[IVXLCDM]+|[0-9]+|[A-Za-z]+(?:-[A-Za-z]+)?)\b.*)",
      R"([IVXLC]+\.?)",
      R"((?:EPILOGUE|PROLOGUE|Epilogue|Prologue)\.?)",
  };
  cfg.drop_line_patterns = {
      R"([0-9]+)",
      R"((?:BOOK|PART|VOLUME|Book|Part|Volume)\s+(?:[IVXLCDM]+|[0-9]+|[A-Z][A-Za-z]*)\.?)",
      R"(\*(?:\s*\*)+)",
      R"(THE END\.?)",
  };
  cfg.inline_drop_patterns = {R"(\[[0-9]+\])", R"(\[Illustration[^\]]*\])"};
  cfg.body_start_pattern = R"(\*\*\*\s*START OF (?:THE|THIS) PROJECT GUTENBERG EBOOK.*)";
  cfg.body_end_pattern = R"(\*\*\*\s*END OF (?:THE|THIS) PROJECT GUTENBERG EBOOK.*)";
  cfg.strip = {"\"",           "“", "”", "„", "«", "»", "‹",
               "›",       "‘", "(",      ")",      "[",      "]",      "{",
               "}",            "*",      "_"};
  cfg.dashes = {"--", "—", "–", "―"};
  return cfg;
}

void CleaningConfig::validate() const {
  std::unordered_set<std::string> seen;
  for (const auto& a : abbreviations) {
    if (a.empty() || a.back() != '.')
      throw ConfigError("abbreviation '" + a + "' must end with '.'");
    std::string lower;
    for (char c : a) lower.push_back(ascii_lower(c));
    if (!seen.insert(lower).second) throw ConfigError("duplicate abbreviation '" + a + "'");
  }
  for (const auto& s : strip)
    if (s.empty()) throw ConfigError("empty entry in strip list");
  for (const auto& s : dashes)
    if (s.empty()) throw ConfigError("empty entry in dash list");
  compile_all(chapter_patterns);
  compile_all(drop_line_patterns);
  compile_all(inline_drop_patterns);
  if (!body_start_pattern.empty()) compile(body_start_pattern);
  if (!body_end_pattern.empty()) compile(body_end_pattern);
}

std::array<std::size_t, kTokenKindCount> Corpus::kind_counts() const {
  std::array<std::size_t, kTokenKindCount> counts{};
  for (const auto& t : tokens) ++counts[static_cast<std::size_t>(t.kind)];
  return counts;
}

void Corpus::check_invariants() const {
  std::size_t expected = 0;
  for (const auto& s : sources) {
    if (s.begin != expected || s.end < s.begin)
      throw DataError("corpus source ranges do not partition the token sequence");
    expected = s.end;
  }
  if (expected != tokens.size())
    throw DataError("corpus source ranges do not cover the token sequence");
}

std::string clean_text(std::string_view raw, const CleaningConfig& cfg) {
  utf8::validate(raw);
  if (raw.empty()) return {};
  return Cleaner(cfg).run(raw);
}

Corpus tokenize(std::string_view cleaned, std::string title, std::string language) {
  utf8::validate(cleaned);
  return Tokenizer(cleaned).run(std::move(title), std::move(language));
}

Corpus ingest_text(std::string_view raw, const CleaningConfig& cfg, std::string title) {
  return tokenize(clean_text(raw, cfg), std::move(title), cfg.language);
}

Corpus aggregate_fullstops(Corpus corpus) {
  for (auto& t : corpus.tokens) {
    if (t.kind != TokenKind::FullStop && is_sentence_end(t.kind)) t = Token::mark(TokenKind::FullStop);
  }
  return corpus;
}

Corpus merge_corpora(std::span<const Corpus> parts) {
  if (parts.empty()) throw DataError("merge_corpora: no corpora given");
  Corpus merged;
  merged.language = parts.front().language;
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.language != merged.language)
      throw DataError("merge_corpora: mixed language tags '" + merged.language + "' and '" +
                      p.language + "'");
    total += p.size();
  }
  merged.tokens.reserve(total);
  for (const auto& p : parts) {
    const std::size_t offset = merged.tokens.size();
    merged.tokens.insert(merged.tokens.end(), p.tokens.begin(), p.tokens.end());
    if (p.sources.empty()) {
      merged.sources.push_back({{}, offset, merged.tokens.size()});
    } else {
      for (const auto& s : p.sources)
        merged.sources.push_back({s.title, s.begin + offset, s.end + offset});
    }
    merged.dropped_symbols += p.dropped_symbols;
  }
  return merged;
}

}  // namespace punctnet
