#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace punctnet::utf8 {

/// Throws DecodeError pointing at the first malformed sequence.
void validate(std::string_view text);

/// Decodes the code point starting at `pos` and advances `pos` past it.
/// Input must already be valid UTF-8.
char32_t next(std::string_view text, std::size_t& pos);

void append(std::string& out, char32_t cp);

/// Simple (one-to-one) lowercase mapping for Latin, Greek and Cyrillic.
char32_t to_lower(char32_t cp);

std::string to_lower(std::string_view text);

}  // namespace punctnet::utf8
