#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

#include "tweetinfo/record.hpp"

namespace tweetinfo::language {

struct StopwordSets {
  std::unordered_set<std::string> en;
  std::unordered_set<std::string> es;

  // Built-in sets; disjoint, lowercase, >= 20 words each.
  static const StopwordSets& builtin();

  // One word per line; blank lines and '#' comments ignored. Words are
  // lowercased on load.
  static std::unordered_set<std::string> load_words(const std::filesystem::path& path);
};

struct StopwordCounts {
  std::size_t en = 0;
  std::size_t es = 0;
};

StopwordCounts count_stopwords(std::string_view text, const StopwordSets& sets);

// More matches wins; no matches -> unknown; a nonzero tie -> en.
Language detect_language(std::string_view text,
                         const StopwordSets& sets = StopwordSets::builtin());

// A hint of "en" or "es" overrides detection.
Language resolve_language(std::string_view text, const std::optional<std::string>& hint,
                          const StopwordSets& sets = StopwordSets::builtin());

}  // namespace tweetinfo::language
