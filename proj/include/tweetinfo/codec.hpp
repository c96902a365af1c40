#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tweetinfo/record.hpp"

namespace tweetinfo {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const RawRecord& r);
ordered_json to_json(const TweetRecord& r);

// Throws Error(MalformedRecord) on missing fields or wrong types.
RawRecord raw_record_from_json(const nlohmann::json& j);
TweetRecord tweet_record_from_json(const nlohmann::json& j);

// Canonical corpus export: one TweetRecord object per line, LF terminated.
std::string export_corpus_jsonl(const Corpus& corpus);

// Inverse of export_corpus_jsonl; records are merged (first-wins) so the
// counts are recomputed. Throws Error(MalformedRecord) naming the line.
Corpus import_corpus_jsonl(std::string_view input);

std::string raw_records_to_jsonl(const std::vector<RawRecord>& records);
std::string raw_records_to_csv(const std::vector<RawRecord>& records);

}  // namespace tweetinfo
