#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tweetinfo/record.hpp"

namespace tweetinfo::sentiment {

inline constexpr double kDefaultAlpha = 15.0;
inline constexpr double kBoosterIncrement = 0.293;
inline constexpr double kCapsIncrement = 0.733;
inline constexpr double kNegationFactor = -0.74;
inline constexpr double kExclamationIncrement = 0.292;
inline constexpr int kMaxExclamations = 3;
inline constexpr double kLabelThreshold = 0.05;
inline constexpr double kMaxValence = 4.0;

// Lowercase token -> valence in [-4, +4].
class Lexicon {
 public:
  Lexicon() = default;

  // Small built-in English/Spanish lexicon.
  static const Lexicon& builtin();

  // Lines of `token<TAB>valence[<TAB>ignored...]`; '#' comments and blank
  // lines are skipped. Throws Error(InvalidLexicon) with the line number.
  static Lexicon parse(std::string_view content);
  static Lexicon load(const std::filesystem::path& path);

  // Throws Error(InvalidLexicon) for a non-lowercase/whitespace key or an
  // out-of-range valence.
  void insert(std::string token, double valence);

  std::optional<double> valence(std::string_view lower_token) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const std::unordered_map<std::string, double>& entries() const noexcept { return entries_; }

 private:
  std::unordered_map<std::string, double> entries_;
};

// Words that modify the immediately following token.
struct ModifierWords {
  std::unordered_set<std::string> negators;
  std::unordered_set<std::string> boosters;

  static const ModifierWords& builtin();
};

struct Token {
  std::string text;   // punctuation-stripped, original case
  std::string lower;
  bool all_caps = false;
  bool preceded_by_negator = false;
  bool preceded_by_booster = false;
};

struct TokenizedText {
  std::vector<Token> tokens;
  int trailing_exclamations = 0;  // run of '!' ending the trimmed text
};

TokenizedText tokenize(std::string_view text,
                       const ModifierWords& modifiers = ModifierWords::builtin());

// Lexicon sum with booster, caps, negation and exclamation adjustments.
double raw_sentiment(const TokenizedText& tokens, const Lexicon& lexicon);

// raw / sqrt(raw^2 + alpha). Throws Error(OutOfRange) unless alpha > 0.
double normalize_sentiment(double raw_sum, double alpha = kDefaultAlpha);

// Throws Error(OutOfRange) when |compound| > 1.
SentimentLabel label_sentiment(double compound);

struct Score {
  double raw_sum = 0.0;
  double compound = 0.0;
  SentimentLabel label = SentimentLabel::Neutral;
};

Score score_text(std::string_view text, const Lexicon& lexicon,
                 const ModifierWords& modifiers = ModifierWords::builtin(),
                 double alpha = kDefaultAlpha);

}  // namespace tweetinfo::sentiment
