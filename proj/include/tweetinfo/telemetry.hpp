#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tweetinfo/timeutil.hpp"

namespace tweetinfo {
class SqliteDatabase;
}

namespace tweetinfo::telemetry {

struct ClickEvent {
  std::string session_id;
  std::string user_id;
  std::string target;  // e.g. "meta_button", "filter_checkbox:hate"
  std::optional<std::string> tweet_id;
  Timestamp client_timestamp{};
  std::int64_t client_seq = 0;
  std::string receipt_id;  // server-assigned

  bool operator==(const ClickEvent&) const = default;
};

// Throws Error(MalformedEvent) on an empty session_id/user_id/target or a
// negative client_seq.
void validate(const ClickEvent& e);

nlohmann::ordered_json to_json(const ClickEvent& e);

// Parses a stored/exported event (receipt_id required).
// Throws Error(MalformedEvent).
ClickEvent event_from_json(const nlohmann::json& j);

// 128-bit random hex id.
std::string new_receipt_id();

struct RecordResult {
  std::string receipt_id;
  bool duplicate = false;
};

// Append-only, idempotent on (session_id, client_seq). All methods are safe
// under concurrent use.
class ClickStore {
 public:
  virtual ~ClickStore() = default;

  // Assigns a receipt id to a fresh event; a repeated key returns the
  // original receipt. Validates first.
  virtual RecordResult record_click(const ClickEvent& event) = 0;

  // Events with client_timestamp in [from, to), ordered by
  // (client_timestamp, receipt_id). Throws Error(InvalidRange) if from > to.
  virtual std::vector<ClickEvent> events_between(Timestamp from, Timestamp to) const = 0;

  // Re-ingests exported events, keeping their receipt ids. Already-present
  // keys are skipped. Returns the number of new rows.
  virtual std::size_t import_events(const std::vector<ClickEvent>& events) = 0;

  virtual std::size_t count() const = 0;
};

class InMemoryClickStore final : public ClickStore {
 public:
  RecordResult record_click(const ClickEvent& event) override;
  std::vector<ClickEvent> events_between(Timestamp from, Timestamp to) const override;
  std::size_t import_events(const std::vector<ClickEvent>& events) override;
  std::size_t count() const override;

 private:
  RecordResult insert(ClickEvent event);

  mutable std::mutex mutex_;
  std::vector<ClickEvent> events_;
  std::map<std::pair<std::string, std::int64_t>, std::size_t> by_key_;
};

class SqliteClickStore final : public ClickStore {
 public:
  explicit SqliteClickStore(std::shared_ptr<SqliteDatabase> db);

  RecordResult record_click(const ClickEvent& event) override;
  std::vector<ClickEvent> events_between(Timestamp from, Timestamp to) const override;
  std::size_t import_events(const std::vector<ClickEvent>& events) override;
  std::size_t count() const override;

 private:
  RecordResult insert(const ClickEvent& event);

  std::shared_ptr<SqliteDatabase> db_;
};

// JSONL export of events_between(from, to), one event per line.
std::string export_events(const ClickStore& store, Timestamp from, Timestamp to);

// Inverse of export_events. Throws Error(MalformedEvent) naming the line.
std::vector<ClickEvent> parse_events_jsonl(std::string_view input);

}  // namespace tweetinfo::telemetry
