#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace punctnet {

/// Class tag of a token. Every non-word kind has a fixed canonical surface.
enum class TokenKind : std::uint8_t {
  Word,
  Dot,
  Question,
  Exclamation,
  Ellipsis,
  Comma,
  Colon,
  Semicolon,
  Chapter,
  FullStop,  ///< aggregated sentence end, see aggregate_fullstops()
};

inline constexpr std::size_t kTokenKindCount = 10;

inline constexpr std::array<TokenKind, kTokenKindCount> kAllTokenKinds = {
    TokenKind::Word,  TokenKind::Dot,       TokenKind::Question, TokenKind::Exclamation,
    TokenKind::Ellipsis, TokenKind::Comma,  TokenKind::Colon,    TokenKind::Semicolon,
    TokenKind::Chapter,  TokenKind::FullStop};

/// "#dot", "#qu", ... ; empty for TokenKind::Word.
std::string_view canonical_surface(TokenKind kind);

/// Lowercase identifier used in CSV/JSON output ("word", "comma", ...).
std::string_view kind_name(TokenKind kind);

std::optional<TokenKind> kind_from_name(std::string_view name);

/// Kind of a surface read back from a token stream: marks are recognised by
/// their canonical surface, everything else is a word.
TokenKind kind_of_surface(std::string_view surface);

constexpr bool is_mark(TokenKind kind) { return kind != TokenKind::Word; }

constexpr bool is_sentence_end(TokenKind kind) {
  return kind == TokenKind::Dot || kind == TokenKind::Question ||
         kind == TokenKind::Exclamation || kind == TokenKind::Ellipsis ||
         kind == TokenKind::FullStop;
}

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::Word;

  static Token word(std::string surface) { return {std::move(surface), TokenKind::Word}; }
  static Token mark(TokenKind kind) { return {std::string(canonical_surface(kind)), kind}; }

  friend bool operator==(const Token&, const Token&) = default;
  friend auto operator<=>(const Token&, const Token&) = default;
};

}  // namespace punctnet
