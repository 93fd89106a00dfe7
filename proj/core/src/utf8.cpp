#include "punctnet/utf8.hpp"

#include "punctnet/error.hpp"

namespace punctnet::utf8 {

namespace {

unsigned sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if (lead >= 0xC2 && lead <= 0xDF) return 2;
  if (lead >= 0xE0 && lead <= 0xEF) return 3;
  if (lead >= 0xF0 && lead <= 0xF4) return 4;
  return 0;
}

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

void validate(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto lead = static_cast<unsigned char>(text[pos]);
    const unsigned len = sequence_length(lead);
    if (len == 0) throw DecodeError(pos, "invalid UTF-8 lead byte");
    if (pos + len > text.size()) throw DecodeError(pos, "truncated UTF-8 sequence");
    for (unsigned k = 1; k < len; ++k) {
      if (!is_continuation(static_cast<unsigned char>(text[pos + k])))
        throw DecodeError(pos, "invalid UTF-8 continuation byte");
    }
    if (len == 3) {
      const auto second = static_cast<unsigned char>(text[pos + 1]);
      if (lead == 0xE0 && second < 0xA0) throw DecodeError(pos, "overlong UTF-8 sequence");
      if (lead == 0xED && second >= 0xA0) throw DecodeError(pos, "UTF-8 encoded surrogate");
    } else if (len == 4) {
      const auto second = static_cast<unsigned char>(text[pos + 1]);
      if (lead == 0xF0 && second < 0x90) throw DecodeError(pos, "overlong UTF-8 sequence");
      if (lead == 0xF4 && second >= 0x90) throw DecodeError(pos, "code point beyond U+10FFFF");
    }
    pos += len;
  }
}

char32_t next(std::string_view text, std::size_t& pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  const unsigned len = sequence_length(lead);
  char32_t cp = 0;
  switch (len) {
    case 1: cp = lead; break;
    case 2: cp = lead & 0x1F; break;
    case 3: cp = lead & 0x0F; break;
    case 4: cp = lead & 0x07; break;
    default: ++pos; return 0xFFFD;
  }
  for (unsigned k = 1; k < len; ++k)
    cp = (cp << 6) | (static_cast<unsigned char>(text[pos + k]) & 0x3F);
  pos += len;
  return cp;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

char32_t to_lower(char32_t cp) {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
  // Latin-1 supplement
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  // Latin Extended-A
  if (cp == 0x130) return U'i';
  if (cp == 0x178) return 0xFF;
  if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177))
    return (cp % 2 == 0) ? cp + 1 : cp;
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E))
    return (cp % 2 == 1) ? cp + 1 : cp;
  // Greek
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 32;
  if (cp == 0x386) return 0x3AC;
  if (cp >= 0x388 && cp <= 0x38A) return cp + 37;
  if (cp == 0x38C) return 0x3CC;
  if (cp == 0x38E || cp == 0x38F) return cp + 63;
  // Cyrillic
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  if ((cp >= 0x460 && cp <= 0x481) || (cp >= 0x48A && cp <= 0x4BF) ||
      (cp >= 0x4D0 && cp <= 0x4FF))
    return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x4C1 && cp <= 0x4CE) return (cp % 2 == 1) ? cp + 1 : cp;
  // Latin Extended Additional
  if (cp >= 0x1E00 && cp <= 0x1EFF && (cp < 0x1E96 || cp > 0x1E9F))
    return (cp % 2 == 0) ? cp + 1 : cp;
  return cp;
}

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) append(out, to_lower(next(text, pos)));
  return out;
}

}  // namespace punctnet::utf8
