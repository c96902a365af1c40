#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tweetinfo::text {

// Strict UTF-8 validation (rejects overlongs, surrogates, > U+10FFFF).
bool is_valid_utf8(std::string_view s) noexcept;

// Decodes one code point starting at s[pos]; advances pos. Invalid bytes
// decode as U+FFFD and advance by one.
char32_t next_code_point(std::string_view s, std::size_t& pos) noexcept;

bool is_unicode_space(char32_t cp) noexcept;
bool is_punctuation(char32_t cp) noexcept;

// Splits on Unicode whitespace; empty pieces are dropped.
std::vector<std::string> split_whitespace(std::string_view s);

std::string trim(std::string_view s);

// Lowercases ASCII and the Latin-1 supplement capitals (À..Þ).
std::string to_lower(std::string_view s);

// True when the string has at least one cased letter and no lowercase ones.
bool is_all_caps(std::string_view s) noexcept;

}  // namespace tweetinfo::text
