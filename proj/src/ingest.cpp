#include "tweetinfo/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_set>

#include <json.hpp>

#include "tweetinfo/codec.hpp"
#include "tweetinfo/csv.hpp"
#include "tweetinfo/text.hpp"

namespace tweetinfo::ingest {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

// Empty optional strings carry no information in either format.
void drop_empty(std::optional<std::string>& v) {
  if (v && text::trim(*v).empty()) v.reset();
}

// Returns an empty string when the record satisfies the RawRecord invariants.
std::string violated_invariant(const RawRecord& r) {
  if (r.source_id.empty()) return "source_id is empty";
  if (text::trim(r.text).empty()) return "text is empty";
  if (r.bot_score && !(*r.bot_score >= 0.0 && *r.bot_score <= 1.0))
    return "bot_score outside [0, 1]";
  return {};
}

void parse_jsonl(std::string_view input, ParseResult& out) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < input.size()) {
    std::size_t end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    std::string_view line = input.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty()) continue;

    Reject reject{line_no, ErrorCode::MalformedRecord, {}, std::string(line)};
    try {
      RawRecord r = raw_record_from_json(nlohmann::json::parse(line));
      drop_empty(r.fact_check_url);
      drop_empty(r.language_hint);
      drop_empty(r.account_handle);
      if (auto why = violated_invariant(r); !why.empty()) {
        reject.reason = std::move(why);
      } else {
        out.records.push_back(std::move(r));
        continue;
      }
    } catch (const nlohmann::json::exception& e) {
      reject.reason = std::string("invalid JSON: ") + e.what();
    } catch (const Error& e) {
      reject.reason = e.what();
    }
    out.rejects.push_back(std::move(reject));
  }
}

std::optional<bool> parse_bool_cell(const std::string& cell, bool& ok) {
  const std::string v = text::to_lower(text::trim(cell));
  ok = true;
  if (v.empty()) return std::nullopt;
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  ok = false;
  return std::nullopt;
}

std::optional<double> parse_double_cell(const std::string& cell, bool& ok) {
  const std::string v = text::trim(cell);
  ok = true;
  if (v.empty()) return std::nullopt;
  double d = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), d);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
    ok = false;
    return std::nullopt;
  }
  return d;
}

void parse_csv(std::string_view input, ParseResult& out) {
  auto rows = csv::read(input);
  if (rows.empty() || rows.front().error)
    throw Error(ErrorCode::MissingRequiredColumn, "CSV input has no readable header row");

  std::map<std::string, std::size_t> columns;
  const auto& header = rows.front().fields;
  for (std::size_t i = 0; i < header.size(); ++i)
    columns.emplace(text::to_lower(text::trim(header[i])), i);
  for (const char* required : {"source_id", "text", "label"}) {
    if (!columns.contains(required))
      throw Error(ErrorCode::MissingRequiredColumn,
                  std::string("CSV header lacks required column '") + required + "'");
  }
  auto column = [&](const char* name) -> std::optional<std::size_t> {
    const auto it = columns.find(name);
    return it == columns.end() ? std::nullopt : std::optional{it->second};
  };
  const auto c_fact = column("fact_check_url");
  const auto c_verified = column("verified");
  const auto c_bot = column("bot_score");
  const auto c_lang = column("language_hint");
  const auto c_handle = column("account_handle");

  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    Reject reject{row.line, ErrorCode::MalformedRecord, {}, row.raw};
    if (row.error) {
      reject.reason = *row.error;
      out.rejects.push_back(std::move(reject));
      continue;
    }
    if (row.fields.size() != header.size()) {
      reject.reason = "expected " + std::to_string(header.size()) + " fields, found " +
                      std::to_string(row.fields.size());
      out.rejects.push_back(std::move(reject));
      continue;
    }
    auto cell = [&](std::optional<std::size_t> c) -> std::optional<std::string> {
      if (!c) return std::nullopt;
      std::optional<std::string> v = row.fields[*c];
      drop_empty(v);
      return v;
    };

    RawRecord r;
    r.source_id = row.fields[columns["source_id"]];
    r.text = row.fields[columns["text"]];
    r.label = row.fields[columns["label"]];
    r.fact_check_url = cell(c_fact);
    r.language_hint = cell(c_lang);
    r.account_handle = cell(c_handle);
    bool ok = true;
    if (c_verified) r.verified = parse_bool_cell(row.fields[*c_verified], ok);
    if (!ok) {
      reject.reason = "verified is not a boolean";
      out.rejects.push_back(std::move(reject));
      continue;
    }
    if (c_bot) r.bot_score = parse_double_cell(row.fields[*c_bot], ok);
    if (!ok) {
      reject.reason = "bot_score is not a number";
      out.rejects.push_back(std::move(reject));
      continue;
    }
    if (auto why = violated_invariant(r); !why.empty()) {
      reject.reason = std::move(why);
      out.rejects.push_back(std::move(reject));
      continue;
    }
    out.records.push_back(std::move(r));
  }
}

}  // namespace

ParseResult parse_corpus(std::string_view input, InputFormat format, SourceTag /*source*/) {
  if (!text::is_valid_utf8(input))
    throw Error(ErrorCode::UndecodableInput, "input is not valid UTF-8");
  if (input.substr(0, kBom.size()) == kBom) input.remove_prefix(kBom.size());

  ParseResult out;
  if (format == InputFormat::Jsonl)
    parse_jsonl(input, out);
  else
    parse_csv(input, out);
  return out;
}

TweetRecord normalize(const RawRecord& raw, SourceTag source) {
  const std::string label = text::to_lower(text::trim(raw.label));

  TweetRecord r;
  r.id = std::string(source_prefix(source)) + ":" + raw.source_id;
  r.text = raw.text;
  r.source = source;
  r.verified = raw.verified.value_or(false);
  r.account_handle = raw.account_handle;
  r.source_bot_score = raw.bot_score;
  r.language_hint = raw.language_hint;

  if (source == SourceTag::HateDataset) {
    if (label == "racism") {
      r.category = Category::HateSpeech;
      r.hate_subtype = HateSubtype::Racism;
    } else if (label == "sexism") {
      r.category = Category::HateSpeech;
      r.hate_subtype = HateSubtype::Sexism;
    } else if (label == "none") {
      r.category = Category::Normal;
    } else {
      throw Error(ErrorCode::UnknownLabel, "unknown hate-dataset label '" + raw.label + "'");
    }
  } else {
    if (label == "false" || label == "partially_false") {
      if (!raw.fact_check_url || text::trim(*raw.fact_check_url).empty())
        throw Error(ErrorCode::MissingFactCheck,
                    "misinformation record '" + raw.source_id + "' has no fact_check_url");
      r.category = Category::Misinformation;
      r.fact_check_url = raw.fact_check_url;
    } else if (label == "true") {
      r.category = Category::Normal;
    } else {
      throw Error(ErrorCode::UnknownLabel,
                  "unknown misinformation-dataset label '" + raw.label + "'");
    }
  }
  return r;
}

NormalizeResult normalize_all(const std::vector<RawRecord>& raws, SourceTag source) {
  NormalizeResult out;
  out.records.reserve(raws.size());
  for (std::size_t i = 0; i < raws.size(); ++i) {
    try {
      out.records.push_back(normalize(raws[i], source));
    } catch (const Error& e) {
      out.rejects.push_back({i + 1, e.code(), e.what(), to_json(raws[i]).dump()});
    }
  }
  return out;
}

Corpus merge(std::vector<TweetRecord> records) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  seen.reserve(records.size());
  corpus.records.reserve(records.size());
  for (auto& r : records) {
    if (!seen.insert(r.id).second) continue;
    ++corpus.counts_by_source[r.source];
    corpus.records.push_back(std::move(r));
  }
  return corpus;
}

}  // namespace tweetinfo::ingest
