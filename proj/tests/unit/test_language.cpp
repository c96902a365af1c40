#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "tweetinfo/language.hpp"
#include "tweetinfo/text.hpp"

using namespace tweetinfo;
using namespace tweetinfo::language;

using test_support::oracle_language;

TEST_CASE("detect_language examples", "[language]") {
  CHECK(detect_language("the cat and the dog") == Language::En);
  CHECK(detect_language("el perro y el gato") == Language::Es);
  CHECK(detect_language("xyzzy plugh") == Language::Unknown);
  CHECK(detect_language("") == Language::Unknown);
  const auto c = count_stopwords("the cat and the dog", StopwordSets::builtin());
  CHECK(c.en == 3);
  CHECK(c.es == 0);
}

TEST_CASE("a nonzero tie resolves to en", "[language]") {
  CHECK(detect_language("the perro el cat") == Language::En);
}

TEST_CASE("language hints override detection", "[language]") {
  CHECK(resolve_language("the cat and the dog", std::string("es")) == Language::Es);
  CHECK(resolve_language("el perro y el gato", std::string("EN")) == Language::En);
  CHECK(resolve_language("el perro y el gato", std::string("fr")) == Language::Es);
  CHECK(resolve_language("xyzzy", std::nullopt) == Language::Unknown);
}

TEST_CASE("built-in stopword sets are disjoint, lowercase, >= 20 words", "[language]") {
  const auto& sets = StopwordSets::builtin();
  CHECK(sets.en.size() >= 20);
  CHECK(sets.es.size() >= 20);
  for (const auto& w : sets.en) {
    CHECK_FALSE(sets.es.contains(w));
    CHECK(text::to_lower(w) == w);
  }
}

TEST_CASE("detect_language agrees with the brute-force counter on 200 stopword sentences",
          "[language]") {
  const auto sentences = test_support::stopword_sentences();
  REQUIRE(sentences.size() == 200);
  int agreed = 0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto& sentence = sentences[i];
    const Language expected = oracle_language(sentence);
    INFO(sentence);
    CHECK(expected == (i % 2 == 0 ? Language::En : Language::Es));
    CHECK(detect_language(sentence) == expected);
    agreed += detect_language(sentence) == expected;
  }
  CHECK(agreed == 200);
}
