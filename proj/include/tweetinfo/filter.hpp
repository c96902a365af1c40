#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tweetinfo/record.hpp"

namespace tweetinfo {

enum class TriState { Any, Yes, No };
enum class SentimentFilter { Any, Positive, Neutral, Negative };
enum class LanguageFilter { Any, En, Es };

std::string_view to_string(TriState v) noexcept;
std::string_view to_string(SentimentFilter v) noexcept;
std::string_view to_string(LanguageFilter v) noexcept;
std::optional<TriState> parse_tristate(std::string_view s) noexcept;
std::optional<SentimentFilter> parse_sentiment_filter(std::string_view s) noexcept;
std::optional<LanguageFilter> parse_language_filter(std::string_view s) noexcept;

inline constexpr int kMaxPageSize = 100;
inline constexpr int kDefaultPageSize = 20;

// Defaults: the four boolean selectors exclude (no); categorical ones are any.
struct FilterQuery {
  TriState hate = TriState::No;
  TriState misinformation = TriState::No;
  TriState bot = TriState::No;
  TriState verified = TriState::No;
  SentimentFilter sentiment = SentimentFilter::Any;
  LanguageFilter language = LanguageFilter::Any;
  int page = 1;
  int page_size = kDefaultPageSize;

  bool operator==(const FilterQuery&) const = default;

  // Every selector set to any.
  static FilterQuery unrestricted();
};

// Throws Error(MutuallyExclusiveFilters), Error(InvalidFilterValue) or
// Error(InvalidPagination). Mutual exclusion is checked first.
void validate_filter(const FilterQuery& q);

bool matches(const TweetRecord& record, const FilterQuery& q) noexcept;

struct Page {
  std::vector<TweetRecord> items;
  int page = 1;
  int page_size = kDefaultPageSize;
  std::size_t total_matching = 0;

  bool operator==(const Page&) const = default;
};

// Seven-attribute projection shown in the meta pop-up.
struct MetaInfo {
  std::string tweet_id;
  bool bot = false;
  double bot_score = 0.0;
  bool hate_speech = false;
  HateSubtype hate_subtype = HateSubtype::None;
  bool misinformation = false;
  std::optional<std::string> fact_check_url;
  bool verified = false;
  SentimentLabel sentiment_label = SentimentLabel::Neutral;
  double sentiment_compound = 0.0;
  Category category = Category::Normal;
  Language language = Language::Unknown;

  bool operator==(const MetaInfo&) const = default;
};

MetaInfo meta_of(const TweetRecord& record);

}  // namespace tweetinfo
