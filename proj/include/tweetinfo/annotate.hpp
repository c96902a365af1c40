#pragma once

#include <memory>
#include <vector>

#include "tweetinfo/bot_provider.hpp"
#include "tweetinfo/language.hpp"
#include "tweetinfo/record.hpp"
#include "tweetinfo/sentiment.hpp"

namespace tweetinfo {

// Everything annotation depends on. The provider may be null, in which case
// only dataset-supplied bot scores are used.
struct AnnotationContext {
  const sentiment::Lexicon* lexicon = &sentiment::Lexicon::builtin();
  const sentiment::ModifierWords* modifiers = &sentiment::ModifierWords::builtin();
  const language::StopwordSets* stopwords = &language::StopwordSets::builtin();
  const bot::BotProvider* provider = nullptr;
  double alpha = sentiment::kDefaultAlpha;
};

// Fills sentiment, language and bot fields from the record's text and the
// source-carried hints; every other field is copied. Idempotent.
TweetRecord annotate(const TweetRecord& record, const AnnotationContext& ctx);

TweetRecord annotate(const TweetRecord& record, const sentiment::Lexicon& lexicon,
                     const bot::BotProvider& provider);

// Per-record annotation across `threads` workers (0 = hardware concurrency).
std::vector<TweetRecord> annotate_all(const std::vector<TweetRecord>& records,
                                      const AnnotationContext& ctx, unsigned threads = 0);

}  // namespace tweetinfo
