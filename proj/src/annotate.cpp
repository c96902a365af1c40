#include "tweetinfo/annotate.hpp"

#include <algorithm>
#include <thread>

namespace tweetinfo {

TweetRecord annotate(const TweetRecord& record, const AnnotationContext& ctx) {
  TweetRecord out = record;
  const auto s = sentiment::score_text(record.text, *ctx.lexicon, *ctx.modifiers, ctx.alpha);
  out.sentiment_compound = s.compound;
  out.sentiment_label = s.label;
  out.language = language::resolve_language(record.text, record.language_hint, *ctx.stopwords);
  const auto b = bot::assess(record.source_bot_score, record.account_handle, ctx.provider);
  out.bot_score = b.bot_score;
  out.is_bot = b.is_bot;
  out.bot_unscored = b.unscored;
  return out;
}

TweetRecord annotate(const TweetRecord& record, const sentiment::Lexicon& lexicon,
                     const bot::BotProvider& provider) {
  AnnotationContext ctx;
  ctx.lexicon = &lexicon;
  ctx.provider = &provider;
  return annotate(record, ctx);
}

std::vector<TweetRecord> annotate_all(const std::vector<TweetRecord>& records,
                                      const AnnotationContext& ctx, unsigned threads) {
  std::vector<TweetRecord> out(records.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, records.size()));
  const std::size_t chunk = (records.size() + threads - 1) / std::max(1u, threads);

  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(records.size(), begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) out[i] = annotate(records[i], ctx);
    });
  }
  workers.clear();  // join before `out` is returned
  return out;
}

}  // namespace tweetinfo
