#include "tweetinfo/text.hpp"

namespace tweetinfo::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

void append_utf8(std::string& out, char32_t cp) {
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

bool is_upper_cp(char32_t cp) noexcept {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7);
}

bool is_lower_cp(char32_t cp) noexcept {
  return (cp >= 'a' && cp <= 'z') || (cp >= 0xDF && cp <= 0xFF && cp != 0xF7);
}

}  // namespace

char32_t next_code_point(std::string_view s, std::size_t& pos) noexcept {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  const unsigned char lead = byte(pos);
  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    len = 2, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4, cp = lead & 0x07, min = 0x10000;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + len > s.size()) {
    ++pos;
    return kReplacement;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kReplacement;
  }
  pos += len;
  return cp;
}

bool is_valid_utf8(std::string_view s) noexcept {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    const char32_t cp = next_code_point(s, pos);
    // A literal U+FFFD in the input is three bytes; a decode failure is one.
    if (cp == kReplacement && pos - start != 3) return false;
  }
  return true;
}

bool is_unicode_space(char32_t cp) noexcept {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_punctuation(char32_t cp) noexcept {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xA1:  // ¡
    case 0xAB:  // «
    case 0xBB:  // »
    case 0xBF:  // ¿
      return true;
    default:
      // General Punctuation block minus the spaces and format controls.
      return cp >= 0x2010 && cp <= 0x2027;
  }
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  std::size_t start = 0;
  while (pos < s.size()) {
    const std::size_t here = pos;
    if (is_unicode_space(next_code_point(s, pos))) {
      if (here > start) out.emplace_back(s.substr(start, here - start));
      start = pos;
    }
  }
  if (s.size() > start) out.emplace_back(s.substr(start));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t pos = 0;
  std::size_t first = s.size();
  std::size_t last = 0;
  while (pos < s.size()) {
    const std::size_t here = pos;
    if (!is_unicode_space(next_code_point(s, pos))) {
      if (first == s.size()) first = here;
      last = pos;
    }
  }
  if (first == s.size()) return {};
  return std::string(s.substr(first, last - first));
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t here = pos;
    char32_t cp = next_code_point(s, pos);
    if (cp == kReplacement && pos - here == 1) {
      out.push_back(s[here]);  // keep undecodable bytes untouched
      continue;
    }
    if (is_upper_cp(cp)) cp += 0x20;
    append_utf8(out, cp);
  }
  return out;
}

bool is_all_caps(std::string_view s) noexcept {
  bool cased = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = next_code_point(s, pos);
    if (is_lower_cp(cp)) return false;
    if (is_upper_cp(cp)) cased = true;
  }
  return cased;
}

}  // namespace tweetinfo::text
