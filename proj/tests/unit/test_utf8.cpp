#include <gtest/gtest.h>

#include "punctnet/error.hpp"
#include "punctnet/utf8.hpp"

using namespace punctnet;

TEST(Utf8, AcceptsWellFormedText) {
  EXPECT_NO_THROW(utf8::validate(""));
  EXPECT_NO_THROW(utf8::validate("plain ascii"));
  EXPECT_NO_THROW(utf8::validate("caf\xC3\xA9 \xE2\x80\xA6 \xF0\x9F\x98\x80"));
}

TEST(Utf8, ReportsByteOffsetOfBadSequence) {
  try {
    utf8::validate("abc\xFF" "def");
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
}

TEST(Utf8, RejectsOverlongSurrogateAndOutOfRange) {
  EXPECT_THROW(utf8::validate("\xC0\xAF"), DecodeError);
  EXPECT_THROW(utf8::validate("\xE0\x80\xAF"), DecodeError);
  EXPECT_THROW(utf8::validate("\xED\xA0\x80"), DecodeError);
  EXPECT_THROW(utf8::validate("\xF4\x90\x80\x80"), DecodeError);
  EXPECT_THROW(utf8::validate("\xE2\x80"), DecodeError);
}

TEST(Utf8, DecodeAndEncodeRoundTrip) {
  const std::string text = "a\xC3\xA9\xE2\x80\xA6\xF0\x9F\x98\x80";
  std::size_t pos = 0;
  std::string rebuilt;
  std::vector<char32_t> cps;
  while (pos < text.size()) {
    const char32_t cp = utf8::next(text, pos);
    cps.push_back(cp);
    utf8::append(rebuilt, cp);
  }
  EXPECT_EQ(rebuilt, text);
  EXPECT_EQ(cps, (std::vector<char32_t>{U'a', U'é', U'…', U'\U0001F600'}));
}

TEST(Utf8, LowercasesCommonScripts) {
  EXPECT_EQ(utf8::to_lower("HeLLo"), "hello");
  EXPECT_EQ(utf8::to_lower("\xC3\x89" "COLE"), "\xC3\xA9" "cole");           // ÉCOLE
  EXPECT_EQ(utf8::to_lower("\xCE\x91\xCE\x98"), "\xCE\xB1\xCE\xB8");         // ΑΘ
  EXPECT_EQ(utf8::to_lower("\xD0\x96\xD0\x98"), "\xD0\xB6\xD0\xB8");         // ЖИ
  EXPECT_EQ(utf8::to_lower("\xC5\x81\xC3\xB3" "d\xC5\xBA"), "\xC5\x82\xC3\xB3" "d\xC5\xBA");  // Łódź
  EXPECT_EQ(utf8::to_lower(U'Ӂ'), U'ӂ');
  EXPECT_EQ(utf8::to_lower(U'1'), U'1');
}
