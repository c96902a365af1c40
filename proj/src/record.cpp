#include "tweetinfo/record.hpp"

#include "tweetinfo/error.hpp"

namespace tweetinfo {

std::string_view to_string(SourceTag v) noexcept {
  return v == SourceTag::HateDataset ? "HATE_DATASET" : "MISINFO_DATASET";
}

std::string_view to_string(Category v) noexcept {
  switch (v) {
    case Category::HateSpeech: return "hate_speech";
    case Category::Misinformation: return "misinformation";
    case Category::Normal: return "normal";
  }
  return "normal";
}

std::string_view to_string(HateSubtype v) noexcept {
  switch (v) {
    case HateSubtype::Racism: return "racism";
    case HateSubtype::Sexism: return "sexism";
    case HateSubtype::None: return "none";
  }
  return "none";
}

std::string_view to_string(Language v) noexcept {
  switch (v) {
    case Language::En: return "en";
    case Language::Es: return "es";
    case Language::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(SentimentLabel v) noexcept {
  switch (v) {
    case SentimentLabel::Positive: return "positive";
    case SentimentLabel::Neutral: return "neutral";
    case SentimentLabel::Negative: return "negative";
  }
  return "neutral";
}

std::string_view source_prefix(SourceTag v) noexcept {
  return v == SourceTag::HateDataset ? "hate" : "misinfo";
}

std::optional<SourceTag> parse_source_tag(std::string_view s) noexcept {
  if (s == "HATE_DATASET" || s == "hate") return SourceTag::HateDataset;
  if (s == "MISINFO_DATASET" || s == "misinfo") return SourceTag::MisinfoDataset;
  return std::nullopt;
}

std::optional<Category> parse_category(std::string_view s) noexcept {
  if (s == "hate_speech") return Category::HateSpeech;
  if (s == "misinformation") return Category::Misinformation;
  if (s == "normal") return Category::Normal;
  return std::nullopt;
}

std::optional<HateSubtype> parse_hate_subtype(std::string_view s) noexcept {
  if (s == "racism") return HateSubtype::Racism;
  if (s == "sexism") return HateSubtype::Sexism;
  if (s == "none") return HateSubtype::None;
  return std::nullopt;
}

std::optional<Language> parse_language(std::string_view s) noexcept {
  if (s == "en") return Language::En;
  if (s == "es") return Language::Es;
  if (s == "unknown") return Language::Unknown;
  return std::nullopt;
}

std::optional<SentimentLabel> parse_sentiment_label(std::string_view s) noexcept {
  if (s == "positive") return SentimentLabel::Positive;
  if (s == "neutral") return SentimentLabel::Neutral;
  if (s == "negative") return SentimentLabel::Negative;
  return std::nullopt;
}

void check_invariants(const TweetRecord& r) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::MalformedRecord, "record '" + r.id + "': " + what);
  };
  if (r.id.empty()) fail("empty id");
  if (r.hate_subtype != HateSubtype::None && r.category != Category::HateSpeech)
    fail("hate_subtype set on a non hate_speech record");
  if (r.fact_check_url.has_value() != (r.category == Category::Misinformation))
    fail("fact_check_url must be present iff category is misinformation");
  if (!(r.sentiment_compound >= -1.0 && r.sentiment_compound <= 1.0))
    fail("sentiment_compound outside [-1, 1]");
  if (!(r.bot_score >= 0.0 && r.bot_score <= 1.0)) fail("bot_score outside [0, 1]");
  if (r.is_bot != (r.bot_score >= kBotThreshold)) fail("is_bot disagrees with bot_score");
}

}  // namespace tweetinfo
