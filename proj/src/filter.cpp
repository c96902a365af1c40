#include "tweetinfo/filter.hpp"

#include "tweetinfo/error.hpp"

namespace tweetinfo {

std::string_view to_string(TriState v) noexcept {
  switch (v) {
    case TriState::Any: return "any";
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
  }
  return "invalid";
}

std::string_view to_string(SentimentFilter v) noexcept {
  switch (v) {
    case SentimentFilter::Any: return "any";
    case SentimentFilter::Positive: return "positive";
    case SentimentFilter::Neutral: return "neutral";
    case SentimentFilter::Negative: return "negative";
  }
  return "invalid";
}

std::string_view to_string(LanguageFilter v) noexcept {
  switch (v) {
    case LanguageFilter::Any: return "any";
    case LanguageFilter::En: return "en";
    case LanguageFilter::Es: return "es";
  }
  return "invalid";
}

std::optional<TriState> parse_tristate(std::string_view s) noexcept {
  if (s == "any") return TriState::Any;
  if (s == "yes") return TriState::Yes;
  if (s == "no") return TriState::No;
  return std::nullopt;
}

std::optional<SentimentFilter> parse_sentiment_filter(std::string_view s) noexcept {
  if (s == "any") return SentimentFilter::Any;
  if (s == "positive") return SentimentFilter::Positive;
  if (s == "neutral") return SentimentFilter::Neutral;
  if (s == "negative") return SentimentFilter::Negative;
  return std::nullopt;
}

std::optional<LanguageFilter> parse_language_filter(std::string_view s) noexcept {
  if (s == "any") return LanguageFilter::Any;
  if (s == "en") return LanguageFilter::En;
  if (s == "es") return LanguageFilter::Es;
  return std::nullopt;
}

FilterQuery FilterQuery::unrestricted() {
  FilterQuery q;
  q.hate = q.misinformation = q.bot = q.verified = TriState::Any;
  return q;
}

namespace {

bool valid(TriState v) { return v == TriState::Any || v == TriState::Yes || v == TriState::No; }

bool tri_matches(TriState selector, bool attribute) {
  switch (selector) {
    case TriState::Any: return true;
    case TriState::Yes: return attribute;
    case TriState::No: return !attribute;
  }
  return false;
}

}  // namespace

void validate_filter(const FilterQuery& q) {
  if (q.hate == TriState::Yes && q.misinformation == TriState::Yes)
    throw Error(ErrorCode::MutuallyExclusiveFilters,
                "hate and misinformation cannot both be set to yes");
  for (TriState t : {q.hate, q.misinformation, q.bot, q.verified}) {
    if (!valid(t)) throw Error(ErrorCode::InvalidFilterValue, "invalid tri-state selector value");
  }
  if (to_string(q.sentiment) == "invalid")
    throw Error(ErrorCode::InvalidFilterValue, "invalid sentiment selector value");
  if (to_string(q.language) == "invalid")
    throw Error(ErrorCode::InvalidFilterValue, "invalid language selector value");
  if (q.page < 1) throw Error(ErrorCode::InvalidPagination, "page must be >= 1");
  if (q.page_size < 1 || q.page_size > kMaxPageSize)
    throw Error(ErrorCode::InvalidPagination, "page_size must be within [1, 100]");
}

bool matches(const TweetRecord& r, const FilterQuery& q) noexcept {
  if (!tri_matches(q.hate, r.category == Category::HateSpeech)) return false;
  if (!tri_matches(q.misinformation, r.category == Category::Misinformation)) return false;
  if (!tri_matches(q.bot, r.is_bot)) return false;
  if (!tri_matches(q.verified, r.verified)) return false;
  switch (q.sentiment) {
    case SentimentFilter::Any: break;
    case SentimentFilter::Positive:
      if (r.sentiment_label != SentimentLabel::Positive) return false;
      break;
    case SentimentFilter::Neutral:
      if (r.sentiment_label != SentimentLabel::Neutral) return false;
      break;
    case SentimentFilter::Negative:
      if (r.sentiment_label != SentimentLabel::Negative) return false;
      break;
  }
  switch (q.language) {
    case LanguageFilter::Any: break;
    case LanguageFilter::En:
      if (r.language != Language::En) return false;
      break;
    case LanguageFilter::Es:
      if (r.language != Language::Es) return false;
      break;
  }
  return true;
}

MetaInfo meta_of(const TweetRecord& r) {
  MetaInfo m;
  m.tweet_id = r.id;
  m.bot = r.is_bot;
  m.bot_score = r.bot_score;
  m.hate_speech = r.category == Category::HateSpeech;
  m.hate_subtype = r.hate_subtype;
  m.misinformation = r.category == Category::Misinformation;
  if (m.misinformation) m.fact_check_url = r.fact_check_url;
  m.verified = r.verified;
  m.sentiment_label = r.sentiment_label;
  m.sentiment_compound = r.sentiment_compound;
  m.category = r.category;
  m.language = r.language;
  return m;
}

}  // namespace tweetinfo
