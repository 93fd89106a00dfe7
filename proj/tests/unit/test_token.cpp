#include <gtest/gtest.h>

#include "punctnet/token.hpp"

using namespace punctnet;

TEST(Token, CanonicalSurfaces) {
  EXPECT_EQ(canonical_surface(TokenKind::Dot), "#dot");
  EXPECT_EQ(canonical_surface(TokenKind::Question), "#qu");
  EXPECT_EQ(canonical_surface(TokenKind::Exclamation), "#ex");
  EXPECT_EQ(canonical_surface(TokenKind::Ellipsis), "#ell");
  EXPECT_EQ(canonical_surface(TokenKind::Comma), "#com");
  EXPECT_EQ(canonical_surface(TokenKind::Colon), "#col");
  EXPECT_EQ(canonical_surface(TokenKind::Semicolon), "#scol");
  EXPECT_EQ(canonical_surface(TokenKind::Chapter), "#chap");
  EXPECT_EQ(canonical_surface(TokenKind::FullStop), "#fs");
  EXPECT_EQ(canonical_surface(TokenKind::Word), "");
}

TEST(Token, SurfaceAndNameRoundTrip) {
  for (TokenKind k : kAllTokenKinds) {
    EXPECT_EQ(kind_from_name(kind_name(k)), k);
    if (is_mark(k)) EXPECT_EQ(kind_of_surface(canonical_surface(k)), k);
  }
  EXPECT_EQ(kind_of_surface("comma"), TokenKind::Word);
  EXPECT_EQ(kind_of_surface("#hash"), TokenKind::Word);
  EXPECT_FALSE(kind_from_name("nonsense").has_value());
}

TEST(Token, SentenceEndClasses) {
  EXPECT_TRUE(is_sentence_end(TokenKind::Dot));
  EXPECT_TRUE(is_sentence_end(TokenKind::Ellipsis));
  EXPECT_TRUE(is_sentence_end(TokenKind::FullStop));
  EXPECT_FALSE(is_sentence_end(TokenKind::Comma));
  EXPECT_FALSE(is_sentence_end(TokenKind::Chapter));
  EXPECT_FALSE(is_mark(TokenKind::Word));
}
