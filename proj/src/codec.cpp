#include "tweetinfo/codec.hpp"

#include <charconv>
#include <cstdio>

#include "tweetinfo/csv.hpp"
#include "tweetinfo/error.hpp"
#include "tweetinfo/ingest.hpp"

namespace tweetinfo {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedRecord, what);
}

template <typename T>
void put_optional(ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

double require_number(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) malformed(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

bool require_bool(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_boolean()) malformed(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) malformed(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::optional<double> optional_number(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) malformed(std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

std::optional<bool> optional_bool(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_boolean()) malformed(std::string("field '") + key + "' must be a boolean");
  return it->get<bool>();
}

template <typename E>
E require_enum(const json& j, const char* key, std::optional<E> (*parse)(std::string_view) noexcept) {
  const std::string s = require_string(j, key);
  const auto v = parse(s);
  if (!v) malformed(std::string("field '") + key + "' has unknown value '" + s + "'");
  return *v;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

ordered_json to_json(const RawRecord& r) {
  ordered_json j;
  j["source_id"] = r.source_id;
  j["text"] = r.text;
  j["label"] = r.label;
  put_optional(j, "fact_check_url", r.fact_check_url);
  put_optional(j, "verified", r.verified);
  put_optional(j, "bot_score", r.bot_score);
  put_optional(j, "language_hint", r.language_hint);
  put_optional(j, "account_handle", r.account_handle);
  return j;
}

ordered_json to_json(const TweetRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["text"] = r.text;
  j["source"] = to_string(r.source);
  j["category"] = to_string(r.category);
  j["hate_subtype"] = to_string(r.hate_subtype);
  j["fact_check_url"] = r.fact_check_url ? ordered_json(*r.fact_check_url) : ordered_json(nullptr);
  j["verified"] = r.verified;
  j["language"] = to_string(r.language);
  j["sentiment_compound"] = r.sentiment_compound;
  j["sentiment_label"] = to_string(r.sentiment_label);
  j["bot_score"] = r.bot_score;
  j["is_bot"] = r.is_bot;
  j["bot_unscored"] = r.bot_unscored;
  put_optional(j, "account_handle", r.account_handle);
  put_optional(j, "source_bot_score", r.source_bot_score);
  put_optional(j, "language_hint", r.language_hint);
  return j;
}

RawRecord raw_record_from_json(const json& j) {
  if (!j.is_object()) malformed("expected a JSON object");
  RawRecord r;
  const json& id = require(j, "source_id");
  if (id.is_string()) {
    r.source_id = id.get<std::string>();
  } else if (id.is_number_integer()) {
    r.source_id = id.dump();
  } else {
    malformed("field 'source_id' must be a string or integer");
  }
  r.text = require_string(j, "text");
  r.label = require_string(j, "label");
  r.fact_check_url = optional_string(j, "fact_check_url");
  r.verified = optional_bool(j, "verified");
  r.bot_score = optional_number(j, "bot_score");
  r.language_hint = optional_string(j, "language_hint");
  r.account_handle = optional_string(j, "account_handle");
  return r;
}

TweetRecord tweet_record_from_json(const json& j) {
  if (!j.is_object()) malformed("expected a JSON object");
  TweetRecord r;
  r.id = require_string(j, "id");
  r.text = require_string(j, "text");
  r.source = require_enum<SourceTag>(j, "source", parse_source_tag);
  r.category = require_enum<Category>(j, "category", parse_category);
  r.hate_subtype = require_enum<HateSubtype>(j, "hate_subtype", parse_hate_subtype);
  r.fact_check_url = optional_string(j, "fact_check_url");
  r.verified = require_bool(j, "verified");
  r.language = require_enum<Language>(j, "language", parse_language);
  r.sentiment_compound = require_number(j, "sentiment_compound");
  r.sentiment_label = require_enum<SentimentLabel>(j, "sentiment_label", parse_sentiment_label);
  r.bot_score = require_number(j, "bot_score");
  r.is_bot = require_bool(j, "is_bot");
  r.bot_unscored = optional_bool(j, "bot_unscored").value_or(false);
  r.account_handle = optional_string(j, "account_handle");
  r.source_bot_score = optional_number(j, "source_bot_score");
  r.language_hint = optional_string(j, "language_hint");
  check_invariants(r);
  return r;
}

std::string export_corpus_jsonl(const Corpus& corpus) {
  std::string out;
  for (const auto& r : corpus.records) {
    out += to_json(r).dump();
    out.push_back('\n');
  }
  return out;
}

Corpus import_corpus_jsonl(std::string_view input) {
  std::vector<TweetRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < input.size()) {
    std::size_t end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    std::string_view line = input.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    try {
      records.push_back(tweet_record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      malformed("corpus line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      malformed("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return ingest::merge(std::move(records));
}

std::string raw_records_to_jsonl(const std::vector<RawRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out.push_back('\n');
  }
  return out;
}

std::string raw_records_to_csv(const std::vector<RawRecord>& records) {
  std::string out = csv::write_row({"source_id", "text", "label", "fact_check_url", "verified",
                                    "bot_score", "language_hint", "account_handle"});
  for (const auto& r : records) {
    out += csv::write_row({
        r.source_id,
        r.text,
        r.label,
        r.fact_check_url.value_or(""),
        r.verified ? (*r.verified ? "true" : "false") : "",
        r.bot_score ? format_double(*r.bot_score) : "",
        r.language_hint.value_or(""),
        r.account_handle.value_or(""),
    });
  }
  return out;
}

}  // namespace tweetinfo
