#include "tweetinfo/language.hpp"

#include <fstream>

#include "tweetinfo/error.hpp"
#include "tweetinfo/sentiment.hpp"
#include "tweetinfo/text.hpp"

namespace tweetinfo::language {

namespace {

constexpr std::string_view kEnglish[] = {
    "the",   "and",  "of",    "to",    "in",   "is",    "it",   "that",  "was",   "for",
    "on",    "are",  "with",  "as",    "at",   "be",    "this", "have",  "from",  "or",
    "by",    "but",  "what",  "all",   "were", "we",    "when", "your",  "can",   "there",
    "an",    "which", "their", "if",   "do",   "will",  "about", "how",  "up",    "out",
    "them",  "then", "she",   "many",  "some", "these", "would", "other", "into", "has",
    "more",  "her",  "him",   "could", "my",   "than",  "been", "who",   "its",   "now",
    "did",   "you",  "he",    "they",  "i",    "our",   "just", "because", "should", "after",
};

constexpr std::string_view kSpanish[] = {
    "el",    "la",    "los",   "las",   "de",    "del",   "que",   "y",     "en",   "un",
    "una",   "es",    "se",    "por",   "con",   "para",  "su",    "sus",   "al",   "lo",
    "como",  "más",   "pero",  "le",    "ya",    "o",     "este",  "esta",  "sí",   "porque",
    "entre", "cuando", "muy",  "también", "fue", "ha",    "hay",   "nos",   "mi",   "sin",
    "sobre", "ser",   "son",   "dos",   "todo",  "yo",    "ella",  "ellos", "hasta", "desde",
    "donde", "quien", "están", "está",  "tiene", "eso",   "esto",  "nosotros", "tu", "te",
};

}  // namespace

const StopwordSets& StopwordSets::builtin() {
  static const StopwordSets sets = [] {
    StopwordSets s;
    for (auto w : kEnglish) s.en.emplace(w);
    for (auto w : kSpanish) s.es.emplace(w);
    return s;
  }();
  return sets;
}

std::unordered_set<std::string> StopwordSets::load_words(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open stopword file " + path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string w = text::trim(line);
    if (w.empty() || w.front() == '#') continue;
    words.insert(text::to_lower(w));
  }
  return words;
}

StopwordCounts count_stopwords(std::string_view input, const StopwordSets& sets) {
  StopwordCounts counts;
  for (const auto& token : sentiment::tokenize(input).tokens) {
    if (sets.en.contains(token.lower)) ++counts.en;
    if (sets.es.contains(token.lower)) ++counts.es;
  }
  return counts;
}

Language detect_language(std::string_view input, const StopwordSets& sets) {
  const auto c = count_stopwords(input, sets);
  if (c.en == 0 && c.es == 0) return Language::Unknown;
  return c.es > c.en ? Language::Es : Language::En;
}

Language resolve_language(std::string_view input, const std::optional<std::string>& hint,
                          const StopwordSets& sets) {
  if (hint) {
    const std::string h = text::to_lower(text::trim(*hint));
    if (h == "en") return Language::En;
    if (h == "es") return Language::Es;
  }
  return detect_language(input, sets);
}

}  // namespace tweetinfo::language
