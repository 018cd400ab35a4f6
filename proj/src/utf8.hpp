#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace rankvsm::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes the code point starting at `text[pos]` and advances `pos`.
/// Malformed sequences yield kReplacement and consume one byte.
char32_t decode(std::string_view text, std::size_t& pos);

void append(std::string& out, char32_t cp);

/// Letters, digits and combining marks. Outside ASCII a code point counts as
/// a word character unless it falls in a space, punctuation or symbol block.
bool is_word_char(char32_t cp);

/// Simple one-to-one lowercase mapping for ASCII, Latin-1, Latin Extended-A,
/// Greek and Cyrillic. Other code points map to themselves.
char32_t to_lower(char32_t cp);

}  // namespace rankvsm::utf8
