#include "tweetinfo/sentiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "tweetinfo/error.hpp"
#include "tweetinfo/text.hpp"

namespace tweetinfo::sentiment {

namespace {

constexpr std::pair<std::string_view, double> kBuiltinLexicon[] = {
    // en
    {"good", 1.9}, {"bad", -2.5}, {"great", 3.1}, {"love", 3.2}, {"loved", 2.9},
    {"hate", -2.7}, {"hated", -3.2}, {"happy", 2.7}, {"sad", -2.1}, {"awful", -2.0},
    {"terrible", -2.1}, {"horrible", -2.5}, {"excellent", 2.7}, {"amazing", 2.8},
    {"wonderful", 2.7}, {"nice", 1.8}, {"best", 3.2}, {"worst", -3.1}, {"safe", 1.9},
    {"danger", -2.4}, {"dangerous", -2.1}, {"fear", -2.2}, {"scared", -1.9},
    {"angry", -2.3}, {"disgusting", -2.4}, {"stupid", -2.4}, {"idiot", -2.3},
    {"ugly", -2.3}, {"kill", -3.7}, {"killed", -3.5}, {"death", -2.9}, {"dead", -3.3},
    {"lie", -1.6}, {"lies", -1.8}, {"liar", -2.6}, {"fake", -2.1}, {"false", -1.4},
    {"hoax", -2.0}, {"true", 1.9}, {"help", 1.7}, {"thanks", 1.9}, {"thank", 1.5},
    {"hope", 1.9}, {"cure", 1.6}, {"healthy", 1.7}, {"sick", -2.3}, {"crisis", -3.1},
    {"panic", -2.3}, {"trust", 2.3}, {"win", 2.8}, {"lose", -1.6}, {"problem", -1.7},
    {"wrong", -2.1}, {"right", 0.8}, {"fun", 2.3}, {"beautiful", 2.9}, {"disaster", -3.1},
    {"shame", -2.1}, {"pathetic", -2.5}, {"useless", -1.8}, {"brilliant", 2.8},
    {"like", 1.5}, {"enjoy", 2.2}, {"glad", 2.0}, {"sorry", -0.3}, {"worry", -1.9},
    {"worried", -1.2}, {"threat", -2.4}, {"attack", -2.1}, {"violence", -3.1},
    // es
    {"bueno", 1.9}, {"buena", 1.9}, {"malo", -2.5}, {"mala", -2.5}, {"excelente", 2.7},
    {"genial", 3.0}, {"feliz", 2.7}, {"triste", -2.1}, {"odio", -2.7}, {"amor", 3.2},
    {"terrible", -2.1}, {"horrible", -2.5}, {"mentira", -1.8}, {"mentiras", -1.8},
    {"falso", -1.4}, {"falsa", -1.4}, {"peligro", -2.4}, {"peligroso", -2.1},
    {"miedo", -2.2}, {"muerte", -2.9}, {"muerto", -3.3}, {"gracias", 1.9},
    {"esperanza", 1.9}, {"cura", 1.6}, {"sano", 1.7}, {"enfermo", -2.3}, {"crisis", -3.1},
    {"estúpido", -2.4}, {"idiota", -2.3}, {"asco", -2.4}, {"mejor", 2.3}, {"peor", -2.6},
    {"bonito", 2.4}, {"hermoso", 2.9}, {"ayuda", 1.7}, {"desastre", -3.1},
    {"vergüenza", -2.1}, {"pánico", -2.3}, {"confianza", 2.3}, {"violencia", -3.1},
};

constexpr std::string_view kNegators[] = {
    "not",     "no",       "never",   "none",     "nobody",   "nothing", "neither",
    "nor",     "nowhere",  "cannot",  "can't",    "don't",    "doesn't", "didn't",
    "isn't",   "wasn't",   "aren't",  "weren't",  "won't",    "wouldn't", "shouldn't",
    "couldn't", "without", "nunca",   "jamás",    "tampoco",  "ni",      "nadie",
    "nada",
};

constexpr std::string_view kBoosters[] = {
    "very",       "extremely",    "really",     "incredibly", "absolutely", "totally",
    "completely", "highly",       "especially", "exceptionally", "remarkably", "hugely",
    "truly",      "so",           "muy",        "super",      "demasiado",  "extremadamente",
    "totalmente", "realmente",
};

bool valid_key(std::string_view token) {
  if (token.empty()) return false;
  if (text::to_lower(token) != token) return false;
  return text::split_whitespace(token).size() == 1 && text::trim(token) == token;
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Strips punctuation code points from both ends of a token.
std::string strip_edges(std::string_view token) {
  std::vector<std::pair<std::size_t, char32_t>> cps;
  std::size_t pos = 0;
  while (pos < token.size()) {
    const std::size_t at = pos;
    cps.emplace_back(at, text::next_code_point(token, pos));
  }
  std::size_t first = 0;
  std::size_t last = cps.size();
  while (first < last && text::is_punctuation(cps[first].second)) ++first;
  while (last > first && text::is_punctuation(cps[last - 1].second)) --last;
  if (first == last) return {};
  const std::size_t begin = cps[first].first;
  const std::size_t end = last == cps.size() ? token.size() : cps[last].first;
  return std::string(token.substr(begin, end - begin));
}

}  // namespace

const Lexicon& Lexicon::builtin() {
  static const Lexicon lexicon = [] {
    Lexicon l;
    for (const auto& [token, valence] : kBuiltinLexicon) l.insert(std::string(token), valence);
    return l;
  }();
  return lexicon;
}

void Lexicon::insert(std::string token, double valence) {
  if (!valid_key(token))
    throw Error(ErrorCode::InvalidLexicon,
                "lexicon key '" + token + "' must be lowercase with no whitespace");
  if (!(valence >= -kMaxValence && valence <= kMaxValence))
    throw Error(ErrorCode::InvalidLexicon,
                "valence for '" + token + "' outside [-4, 4]");
  entries_.insert_or_assign(std::move(token), valence);
}

std::optional<double> Lexicon::valence(std::string_view lower_token) const {
  const auto it = entries_.find(std::string(lower_token));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Lexicon Lexicon::parse(std::string_view content) {
  Lexicon lexicon;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::InvalidLexicon,
                  "lexicon line " + std::to_string(line_no) + ": " + why);
    };
    if (tab == std::string::npos) fail("expected token<TAB>valence");
    const std::string token = line.substr(0, tab);
    const auto end = line.find('\t', tab + 1);
    const std::string field =
        text::trim(line.substr(tab + 1, end == std::string::npos ? std::string::npos : end - tab - 1));
    double valence = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), valence);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
      fail("valence '" + field + "' is not a number");
    try {
      lexicon.insert(token, valence);
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return lexicon;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidLexicon, "cannot open lexicon " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const ModifierWords& ModifierWords::builtin() {
  static const ModifierWords words = [] {
    ModifierWords w;
    for (auto n : kNegators) w.negators.emplace(n);
    for (auto b : kBoosters) w.boosters.emplace(b);
    return w;
  }();
  return words;
}

TokenizedText tokenize(std::string_view input, const ModifierWords& modifiers) {
  TokenizedText out;
  for (const auto& piece : text::split_whitespace(input)) {
    std::string stripped = strip_edges(piece);
    if (stripped.empty()) continue;
    Token t;
    t.lower = text::to_lower(stripped);
    t.all_caps = text::is_all_caps(stripped);
    t.text = std::move(stripped);
    if (!out.tokens.empty()) {
      const std::string& prev = out.tokens.back().lower;
      t.preceded_by_negator = modifiers.negators.contains(prev);
      t.preceded_by_booster = modifiers.boosters.contains(prev);
    }
    out.tokens.push_back(std::move(t));
  }

  const std::string trimmed = text::trim(input);
  auto it = trimmed.rbegin();
  while (it != trimmed.rend() && *it == '!') {
    ++out.trailing_exclamations;
    ++it;
  }
  return out;
}

double raw_sentiment(const TokenizedText& tokens, const Lexicon& lexicon) {
  double sum = 0.0;
  for (const auto& t : tokens.tokens) {
    const auto found = lexicon.valence(t.lower);
    if (!found) continue;
    double v = *found;
    const double s = sign(v);
    if (t.preceded_by_booster) v += s * kBoosterIncrement;
    if (t.all_caps) v += s * kCapsIncrement;
    if (t.preceded_by_negator) v *= kNegationFactor;
    sum += v;
  }
  if (sum != 0.0) {
    const int bangs = std::min(tokens.trailing_exclamations, kMaxExclamations);
    sum += sign(sum) * kExclamationIncrement * bangs;
  }
  return sum;
}

double normalize_sentiment(double raw_sum, double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::OutOfRange, "alpha must be positive");
  const double c = raw_sum / std::sqrt(raw_sum * raw_sum + alpha);
  // Very large sums round to +-1.0 in double precision; keep the open bound.
  constexpr double kBound = 1.0 - 1e-15;
  return std::clamp(c, -kBound, kBound);
}

SentimentLabel label_sentiment(double compound) {
  if (!(compound >= -1.0 && compound <= 1.0))
    throw Error(ErrorCode::OutOfRange, "compound score outside [-1, 1]");
  if (compound >= kLabelThreshold) return SentimentLabel::Positive;
  if (compound <= -kLabelThreshold) return SentimentLabel::Negative;
  return SentimentLabel::Neutral;
}

Score score_text(std::string_view input, const Lexicon& lexicon, const ModifierWords& modifiers,
                 double alpha) {
  Score s;
  s.raw_sum = raw_sentiment(tokenize(input, modifiers), lexicon);
  s.compound = normalize_sentiment(s.raw_sum, alpha);
  s.label = label_sentiment(s.compound);
  return s;
}

}  // namespace tweetinfo::sentiment
