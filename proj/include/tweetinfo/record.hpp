#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tweetinfo {

enum class SourceTag { HateDataset, MisinfoDataset };

enum class Category { HateSpeech, Misinformation, Normal };

enum class HateSubtype { Racism, Sexism, None };

enum class Language { En, Es, Unknown };

enum class SentimentLabel { Positive, Neutral, Negative };

std::string_view to_string(SourceTag v) noexcept;
std::string_view to_string(Category v) noexcept;
std::string_view to_string(HateSubtype v) noexcept;
std::string_view to_string(Language v) noexcept;
std::string_view to_string(SentimentLabel v) noexcept;

// Id prefix used when building globally unique record ids ("hate", "misinfo").
std::string_view source_prefix(SourceTag v) noexcept;

// Parsers accept exactly the to_string() spellings. Source tags also accept
// the CLI short forms "hate" and "misinfo".
std::optional<SourceTag> parse_source_tag(std::string_view s) noexcept;
std::optional<Category> parse_category(std::string_view s) noexcept;
std::optional<HateSubtype> parse_hate_subtype(std::string_view s) noexcept;
std::optional<Language> parse_language(std::string_view s) noexcept;
std::optional<SentimentLabel> parse_sentiment_label(std::string_view s) noexcept;

inline constexpr double kBotThreshold = 0.5;

// One row as it appears in a source dataset, before label mapping.
struct RawRecord {
  std::string source_id;
  std::string text;
  std::string label;
  std::optional<std::string> fact_check_url;
  std::optional<bool> verified;
  std::optional<double> bot_score;
  std::optional<std::string> language_hint;
  std::optional<std::string> account_handle;

  bool operator==(const RawRecord&) const = default;
};

// Canonical annotated post.
struct TweetRecord {
  std::string id;
  std::string text;
  SourceTag source = SourceTag::HateDataset;
  Category category = Category::Normal;
  HateSubtype hate_subtype = HateSubtype::None;
  std::optional<std::string> fact_check_url;
  bool verified = false;
  Language language = Language::Unknown;
  double sentiment_compound = 0.0;
  SentimentLabel sentiment_label = SentimentLabel::Neutral;
  double bot_score = 0.0;
  bool is_bot = false;
  bool bot_unscored = false;

  // Carried from the source row so annotation can be replayed.
  std::optional<std::string> account_handle;
  std::optional<double> source_bot_score;
  std::optional<std::string> language_hint;

  bool operator==(const TweetRecord&) const = default;
};

// Throws Error(MalformedRecord) naming the first violated invariant.
void check_invariants(const TweetRecord& r);

struct Corpus {
  std::vector<TweetRecord> records;
  std::map<SourceTag, std::size_t> counts_by_source{
      {SourceTag::HateDataset, 0}, {SourceTag::MisinfoDataset, 0}};

  bool operator==(const Corpus&) const = default;
};

}  // namespace tweetinfo
