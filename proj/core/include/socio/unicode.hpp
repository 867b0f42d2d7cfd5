#pragma once

// Minimal UTF-8 handling and pragmatic codepoint classification. Covers
// ASCII, Latin-1, Latin Extended, Greek and Cyrillic; everything else
// (CJK, emoji, symbols) is classified as non-alphanumeric, which is the
// behaviour the feature extractors want for emoji and dingbats.

#include <cstdint>
#include <string>
#include <vector>

namespace socio::uni {

// Decodes UTF-8; invalid bytes come through as one codepoint each (their
// byte value), so malformed input degrades instead of throwing.
std::vector<char32_t> decode_utf8(const std::string& text);

std::string encode_utf8(const std::vector<char32_t>& cps);
void append_utf8(std::string& out, char32_t cp);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
inline bool is_alnum(char32_t cp) { return is_letter(cp) || is_digit(cp); }
bool is_upper(char32_t cp);
bool is_space(char32_t cp);

char32_t to_lower(char32_t cp);

}  // namespace socio::uni
