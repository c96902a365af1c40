#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "tweetinfo/error.hpp"
#include "tweetinfo/sentiment.hpp"

using namespace tweetinfo;
using namespace tweetinfo::sentiment;
using Catch::Approx;

namespace {

const Lexicon& fixture_lexicon() {
  static const Lexicon lex = [] {
    Lexicon l;
    l.insert("good", 1.9);
    l.insert("bad", -2.5);
    l.insert("great", 3.1);
    return l;
  }();
  return lex;
}

const ModifierWords& fixture_modifiers() {
  static const ModifierWords m{{"not", "never", "no"}, {"very", "extremely"}};
  return m;
}

double raw(std::string_view text) {
  return raw_sentiment(tokenize(text, fixture_modifiers()), fixture_lexicon());
}

}  // namespace

TEST_CASE("tokenize: empty text gives no tokens", "[sentiment]") {
  CHECK(tokenize("").tokens.empty());
  CHECK(tokenize("   \t").tokens.empty());
  CHECK(tokenize("!!!").tokens.empty());
}

TEST_CASE("tokenize sets modifier flags from the preceding token", "[sentiment]") {
  auto t = tokenize("not good", fixture_modifiers());
  REQUIRE(t.tokens.size() == 2);
  CHECK(t.tokens[0].lower == "not");
  CHECK(t.tokens[1].lower == "good");
  CHECK(t.tokens[1].preceded_by_negator);
  CHECK_FALSE(t.tokens[0].preceded_by_negator);

  t = tokenize("VERY GOOD", fixture_modifiers());
  REQUIRE(t.tokens.size() == 2);
  CHECK(t.tokens[1].all_caps);
  CHECK(t.tokens[1].preceded_by_booster);

  // scope is the immediately preceding token only
  t = tokenize("not really good", fixture_modifiers());
  CHECK_FALSE(t.tokens[2].preceded_by_negator);
}

TEST_CASE("tokenize strips edge punctuation and counts trailing bangs", "[sentiment]") {
  const auto t = tokenize("\"Good,\" she said... ¡genial!!!  ");
  REQUIRE(t.tokens.size() == 4);
  CHECK(t.tokens[0].text == "Good");
  CHECK(t.tokens[2].text == "said");
  CHECK(t.tokens[3].text == "genial");
  CHECK(t.trailing_exclamations == 3);
  CHECK(tokenize("wow! nice").trailing_exclamations == 0);
  CHECK(tokenize("don't").tokens[0].lower == "don't");
}

TEST_CASE("raw_sentiment hand-derived values", "[sentiment]") {
  CHECK(raw("good") == Approx(1.9).margin(1e-12));
  CHECK(raw("not good") == Approx(-1.406).margin(1e-6));   // 1.9 * -0.74
  CHECK(raw("very good") == Approx(2.193).margin(1e-6));   // 1.9 + 0.293
  CHECK(raw("VERY GOOD") == Approx(2.926).margin(1e-6));   // 1.9 + 0.293 + 0.733
  CHECK(raw("very bad") == Approx(-2.793).margin(1e-6));   // -2.5 - 0.293
  CHECK(raw("not very good") == Approx(2.193).margin(1e-6)); // negator is two tokens back
  CHECK(raw("good and great") == Approx(5.0).margin(1e-9));
  CHECK(raw("good!!") == Approx(1.9 + 2 * 0.292).margin(1e-9));
  CHECK(raw("bad!!!!!") == Approx(-2.5 - 3 * 0.292).margin(1e-9));  // capped at 3
  CHECK(raw("nothing here!!!") == 0.0);                             // no bang boost on zero
}

TEST_CASE("text without lexicon tokens scores zero and neutral", "[sentiment]") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> letter('a', 'z'), len(1, 8), words(0, 10);
  for (int i = 0; i < 500; ++i) {
    std::string text;
    for (int w = words(rng); w > 0; --w) {
      std::string word;
      for (int k = len(rng); k > 0; --k) word.push_back(static_cast<char>(letter(rng)));
      if (fixture_lexicon().valence(word)) continue;
      text += word + " ";
    }
    CHECK(raw(text) == 0.0);
    CHECK(score_text(text, fixture_lexicon(), fixture_modifiers()).label == SentimentLabel::Neutral);
  }
}

TEST_CASE("normalize_sentiment hand-derived values", "[sentiment]") {
  CHECK(normalize_sentiment(0.0, 15.0) == 0.0);
  CHECK(normalize_sentiment(1.9, 15.0) == Approx(0.4404).margin(1e-4));
  CHECK(normalize_sentiment(-2.5, 15.0) == Approx(-0.5423).margin(1e-4));
  CHECK_THROWS_AS(normalize_sentiment(1.0, 0.0), Error);
  CHECK_THROWS_AS(normalize_sentiment(1.0, -3.0), Error);
}

TEST_CASE("normalize_sentiment is bounded, odd and strictly increasing", "[sentiment]") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-60.0, 60.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = dist(rng);
    const double y = dist(rng);
    const double fx = normalize_sentiment(x);
    CHECK(std::abs(fx) < 1.0);
    CHECK(normalize_sentiment(-x) == -fx);
    if (x < y) CHECK(fx < normalize_sentiment(y));
    if (x <= 0.0) CHECK(label_sentiment(fx) != SentimentLabel::Positive);
  }
  CHECK(std::abs(normalize_sentiment(1e12)) < 1.0);
}

TEST_CASE("label_sentiment thresholds", "[sentiment]") {
  CHECK(label_sentiment(0.0) == SentimentLabel::Neutral);
  CHECK(label_sentiment(0.4404) == SentimentLabel::Positive);
  CHECK(label_sentiment(-0.05) == SentimentLabel::Negative);
  CHECK(label_sentiment(0.05) == SentimentLabel::Positive);
  CHECK(label_sentiment(0.0499) == SentimentLabel::Neutral);
  CHECK_THROWS_AS(label_sentiment(1.01), Error);
  CHECK_THROWS_AS(label_sentiment(std::nan("")), Error);
}

TEST_CASE("negating any lexicon entry flips the compound sign", "[sentiment]") {
  for (const Lexicon* lex : {&fixture_lexicon(), &Lexicon::builtin()}) {
    for (const auto& [token, valence] : lex->entries()) {
      if (valence == 0.0) continue;
      const auto plain = score_text(token, *lex, fixture_modifiers());
      const auto negated = score_text("not " + token, *lex, fixture_modifiers());
      INFO(token);
      CHECK(std::signbit(plain.compound) == (valence < 0.0));
      CHECK(plain.compound * negated.compound < 0.0);
    }
  }
}

TEST_CASE("lexicon file parsing and validation", "[sentiment]") {
  const auto lex = Lexicon::parse("# comment\ngood\t1.9\t0.9\t[2, 2]\n\nbad\t-2.5\n");
  CHECK(lex.size() == 2);
  CHECK(lex.valence("good") == 1.9);
  CHECK_FALSE(lex.valence("GOOD"));
  CHECK_THROWS_AS(Lexicon::parse("Good\t1.0\n"), Error);
  CHECK_THROWS_AS(Lexicon::parse("good\t4.5\n"), Error);
  CHECK_THROWS_AS(Lexicon::parse("good 1.0\n"), Error);
  CHECK_THROWS_AS(Lexicon::parse("good\tabc\n"), Error);
  Lexicon l;
  CHECK_THROWS_AS(l.insert("two words", 1.0), Error);
  for (const auto& [token, valence] : Lexicon::builtin().entries()) {
    CHECK(std::abs(valence) <= 4.0);
  }
}
