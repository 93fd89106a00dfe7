#include "punctnet/token.hpp"

namespace punctnet {

namespace {

struct KindInfo {
  TokenKind kind;
  std::string_view surface;
  std::string_view name;
};

constexpr std::array<KindInfo, kTokenKindCount> kKinds = {{
    {TokenKind::Word, "", "word"},
    {TokenKind::Dot, "#dot", "dot"},
    {TokenKind::Question, "#qu", "question"},
    {TokenKind::Exclamation, "#ex", "exclamation"},
    {TokenKind::Ellipsis, "#ell", "ellipsis"},
    {TokenKind::Comma, "#com", "comma"},
    {TokenKind::Colon, "#col", "colon"},
    {TokenKind::Semicolon, "#scol", "semicolon"},
    {TokenKind::Chapter, "#chap", "chapter"},
    {TokenKind::FullStop, "#fs", "fullstop"},
}};

}  // namespace

std::string_view canonical_surface(TokenKind kind) {
  return kKinds[static_cast<std::size_t>(kind)].surface;
}

std::string_view kind_name(TokenKind kind) {
  return kKinds[static_cast<std::size_t>(kind)].name;
}

std::optional<TokenKind> kind_from_name(std::string_view name) {
  for (const auto& info : kKinds)
    if (info.name == name) return info.kind;
  return std::nullopt;
}

TokenKind kind_of_surface(std::string_view surface) {
  if (surface.empty() || surface.front() != '#') return TokenKind::Word;
  for (const auto& info : kKinds)
    if (info.kind != TokenKind::Word && info.surface == surface) return info.kind;
  return TokenKind::Word;
}

}  // namespace punctnet
