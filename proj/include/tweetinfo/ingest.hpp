#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tweetinfo/error.hpp"
#include "tweetinfo/record.hpp"

namespace tweetinfo::ingest {

enum class InputFormat { Jsonl, Csv };

// A line or row that could not become a record. `line` is 1-based.
struct Reject {
  std::size_t line = 0;
  ErrorCode code = ErrorCode::MalformedRecord;
  std::string reason;
  std::string content;
};

struct ParseResult {
  std::vector<RawRecord> records;
  std::vector<Reject> rejects;
};

// One RawRecord per well-formed line/row, in input order. Throws
// Error(UndecodableInput) when the input is not UTF-8 and
// Error(MissingRequiredColumn) when a CSV header lacks source_id, text or label.
ParseResult parse_corpus(std::string_view input, InputFormat format, SourceTag source);

// Maps a source label onto the canonical category. Sentiment, language and
// bot fields are left at their defaults until annotation.
// Throws Error(UnknownLabel) or Error(MissingFactCheck).
TweetRecord normalize(const RawRecord& raw, SourceTag source);

struct NormalizeResult {
  std::vector<TweetRecord> records;
  std::vector<Reject> rejects;  // line holds the 1-based index into the input list
};

NormalizeResult normalize_all(const std::vector<RawRecord>& raws, SourceTag source);

// First occurrence of each id wins; order is otherwise preserved.
Corpus merge(std::vector<TweetRecord> records);

}  // namespace tweetinfo::ingest
