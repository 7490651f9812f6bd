#ifndef NERC_UNICODE_HPP
#define NERC_UNICODE_HPP

// Small UTF-8 layer: validation/decoding is hand-rolled so parse errors can
// point at byte offsets; NFC and the White_Space property come from ICU.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "nerc/errors.hpp"

namespace nerc {

/// Decodes one UTF-8 scalar value starting at text[pos]. Advances pos past
/// the sequence. Throws ParseError on malformed input (truncated sequences,
/// overlong encodings, surrogates, out-of-range values).
inline char32_t decode_utf8(std::string_view text, std::size_t& pos) {
  auto fail = [&](const char* what) -> char32_t {
    throw ParseError(std::string("invalid UTF-8 at byte ") +
                     std::to_string(pos) + ": " + what);
  };
  const auto byte = [&](std::size_t i) -> std::uint8_t {
    return static_cast<std::uint8_t>(text[i]);
  };

  const std::uint8_t b0 = byte(pos);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }

  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return fail("stray continuation or invalid lead byte");
  }

  if (pos + static_cast<std::size_t>(len) > text.size())
    return fail("truncated sequence");
  for (int i = 1; i < len; ++i) {
    const std::uint8_t b = byte(pos + static_cast<std::size_t>(i));
    if ((b & 0xC0) != 0x80) return fail("missing continuation byte");
    cp = (cp << 6) | (b & 0x3F);
  }

  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len]) return fail("overlong encoding");
  if (cp >= 0xD800 && cp <= 0xDFFF) return fail("surrogate code point");
  if (cp > 0x10FFFF) return fail("code point out of range");

  pos += static_cast<std::size_t>(len);
  return cp;
}

/// Unicode White_Space property.
inline bool is_whitespace(char32_t cp) {
  return u_hasBinaryProperty(static_cast<UChar32>(cp), UCHAR_WHITE_SPACE);
}

/// Splits text into maximal runs of non-whitespace scalars. Validates the
/// whole input as UTF-8 as a side effect.
inline std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  std::size_t token_start = 0;
  bool in_token = false;
  while (pos < text.size()) {
    const std::size_t cp_start = pos;
    const char32_t cp = decode_utf8(text, pos);
    if (is_whitespace(cp)) {
      if (in_token) {
        tokens.emplace_back(text.substr(token_start, cp_start - token_start));
        in_token = false;
      }
    } else if (!in_token) {
      token_start = cp_start;
      in_token = true;
    }
  }
  if (in_token) tokens.emplace_back(text.substr(token_start));
  return tokens;
}

/// Canonical composition (NFC).
inline std::string nfc(std::string_view text) {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec))
    throw Error(std::string("ICU NFC unavailable: ") + u_errorName(ec));
  const icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  const icu::UnicodeString out = norm->normalize(in, ec);
  if (U_FAILURE(ec))
    throw Error(std::string("NFC normalization failed: ") + u_errorName(ec));
  std::string result;
  out.toUTF8String(result);
  return result;
}

}  // namespace nerc

#endif  // NERC_UNICODE_HPP
