#pragma once

// Shared fixtures, generators and independent oracles for the test suites.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "tweetinfo/annotate.hpp"
#include "tweetinfo/codec.hpp"
#include "tweetinfo/filter.hpp"
#include "tweetinfo/ingest.hpp"
#include "tweetinfo/language.hpp"

namespace test_support {

using namespace tweetinfo;

inline std::filesystem::path source_dir() { return TWEETINFO_SOURCE_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The bundled 989-record corpus, annotated with the offline bot table.
inline Corpus fixture_corpus() {
  const auto dir = source_dir() / "data" / "fixtures";
  const auto hate = ingest::parse_corpus(read_file(dir / "hate_speech.csv"),
                                         ingest::InputFormat::Csv, SourceTag::HateDataset);
  const auto misinfo = ingest::parse_corpus(read_file(dir / "misinformation.jsonl"),
                                            ingest::InputFormat::Jsonl, SourceTag::MisinfoDataset);
  auto records = ingest::normalize_all(hate.records, SourceTag::HateDataset).records;
  const auto more = ingest::normalize_all(misinfo.records, SourceTag::MisinfoDataset).records;
  records.insert(records.end(), more.begin(), more.end());

  const auto provider = bot::OfflineBotProvider::load(dir / "bot_scores.tsv");
  AnnotationContext ctx;
  ctx.provider = &provider;
  return ingest::merge(annotate_all(records, ctx));
}

// A record satisfying every TweetRecord invariant, with random attributes.
inline TweetRecord random_record(std::mt19937_64& rng, std::size_t index) {
  std::uniform_int_distribution<int> pick(0, 99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TweetRecord r;
  r.source = pick(rng) < 50 ? SourceTag::HateDataset : SourceTag::MisinfoDataset;
  r.id = std::string(source_prefix(r.source)) + ":" + std::to_string(index);
  r.text = "synthetic text " + std::to_string(index);
  const int c = pick(rng);
  if (r.source == SourceTag::HateDataset) {
    if (c < 25) {
      r.category = Category::HateSpeech;
      r.hate_subtype = HateSubtype::Racism;
    } else if (c < 50) {
      r.category = Category::HateSpeech;
      r.hate_subtype = HateSubtype::Sexism;
    }
  } else if (c < 50) {
    r.category = Category::Misinformation;
    r.fact_check_url = "https://factcheck.example.org/" + std::to_string(index);
  }
  r.verified = pick(rng) < 30;
  r.bot_score = unit(rng);
  r.is_bot = r.bot_score >= 0.5;
  const int lang = pick(rng) % 3;
  r.language = lang == 0 ? Language::En : (lang == 1 ? Language::Es : Language::Unknown);
  r.sentiment_compound = unit(rng) * 2.0 - 1.0;
  r.sentiment_label = r.sentiment_compound >= 0.05    ? SentimentLabel::Positive
                      : r.sentiment_compound <= -0.05 ? SentimentLabel::Negative
                                                      : SentimentLabel::Neutral;
  return r;
}

inline std::vector<TweetRecord> random_records(std::mt19937_64& rng, std::size_t n) {
  std::vector<TweetRecord> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_record(rng, i));
  return out;
}

// Every selector combination (3^4 * 4 * 3 = 324), default pagination.
inline std::vector<FilterQuery> filter_grid() {
  const TriState tri[] = {TriState::Any, TriState::Yes, TriState::No};
  const SentimentFilter sent[] = {SentimentFilter::Any, SentimentFilter::Positive,
                                  SentimentFilter::Neutral, SentimentFilter::Negative};
  const LanguageFilter lang[] = {LanguageFilter::Any, LanguageFilter::En, LanguageFilter::Es};
  std::vector<FilterQuery> out;
  for (auto h : tri)
    for (auto m : tri)
      for (auto b : tri)
        for (auto v : tri)
          for (auto s : sent)
            for (auto l : lang) {
              FilterQuery q;
              q.hate = h;
              q.misinformation = m;
              q.bot = b;
              q.verified = v;
              q.sentiment = s;
              q.language = l;
              out.push_back(q);
            }
  return out;
}

// Linear-scan oracle working from the exported JSON form of each record and
// the selectors' wire spellings, so it shares no predicate code with matches().
inline bool oracle_selects(const TweetRecord& r, const FilterQuery& q) {
  const auto j = tweetinfo::to_json(r);
  auto tri_ok = [](std::string_view sel, bool attr) {
    return sel == "any" || (sel == "yes" && attr) || (sel == "no" && !attr);
  };
  const std::string category = j["category"];
  if (!tri_ok(to_string(q.hate), category == "hate_speech")) return false;
  if (!tri_ok(to_string(q.misinformation), category == "misinformation")) return false;
  if (!tri_ok(to_string(q.bot), j["is_bot"].get<bool>())) return false;
  if (!tri_ok(to_string(q.verified), j["verified"].get<bool>())) return false;
  const std::string sent(to_string(q.sentiment));
  if (sent != "any" && j["sentiment_label"] != sent) return false;
  const std::string lang(to_string(q.language));
  if (lang != "any" && j["language"] != lang) return false;
  return true;
}

inline std::vector<std::string> oracle_ids(const std::vector<TweetRecord>& records,
                                           const FilterQuery& q) {
  std::vector<std::string> ids;
  for (const auto& r : records)
    if (oracle_selects(r, q)) ids.push_back(r.id);
  return ids;
}

// Brute-force stopword counter: whitespace split, lowercase, trim ASCII
// punctuation, linear search in the word lists.
inline std::pair<int, int> brute_force_stopword_counts(const std::string& text,
                                                       const std::vector<std::string>& en,
                                                       const std::vector<std::string>& es) {
  std::istringstream in(text);
  std::string w;
  int ne = 0, ns = 0;
  while (in >> w) {
    while (!w.empty() && std::ispunct(static_cast<unsigned char>(w.back()))) w.pop_back();
    while (!w.empty() && std::ispunct(static_cast<unsigned char>(w.front()))) w.erase(0, 1);
    for (auto& ch : w) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (const auto& s : en) ne += (s == w);
    for (const auto& s : es) ns += (s == w);
  }
  return {ne, ns};
}

inline std::vector<std::string> sorted_words(const std::unordered_set<std::string>& s) {
  std::vector<std::string> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

// Language the brute-force counter assigns with the built-in stopword sets.
inline Language oracle_language(const std::string& text) {
  const auto& sets = language::StopwordSets::builtin();
  const auto [en, es] =
      brute_force_stopword_counts(text, sorted_words(sets.en), sorted_words(sets.es));
  if (en == 0 && es == 0) return Language::Unknown;
  return es > en ? Language::Es : Language::En;
}

// 200 sentences made only of stopwords, alternating en/es, with random
// capitalisation and punctuation. Deterministic.
inline std::vector<std::string> stopword_sentences() {
  const auto& sets = language::StopwordSets::builtin();
  const auto en = sorted_words(sets.en);
  const auto es = sorted_words(sets.es);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(3, 10), coin(0, 3);
  std::vector<std::string> out;
  for (int i = 0; i < 200; ++i) {
    const auto& pool = i % 2 == 0 ? en : es;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::string sentence;
    for (int w = len(rng); w > 0; --w) {
      std::string word = pool[pick(rng)];
      if (coin(rng) == 0 && std::isalpha(static_cast<unsigned char>(word[0])))
        word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
      sentence += word + (coin(rng) == 0 ? ", " : " ");
    }
    sentence += coin(rng) == 0 ? "." : "";
    out.push_back(std::move(sentence));
  }
  return out;
}

}  // namespace test_support
