#include "tweetinfo/telemetry.hpp"

#include <algorithm>

#include <sodium.h>

#include "tweetinfo/error.hpp"
#include "tweetinfo/sqlite.hpp"

namespace tweetinfo::telemetry {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedEvent, what);
}

void check_range(Timestamp from, Timestamp to) {
  if (from > to) throw Error(ErrorCode::InvalidRange, "export range has from > to");
}

bool export_order(const ClickEvent& a, const ClickEvent& b) {
  return std::tie(a.client_timestamp, a.receipt_id) < std::tie(b.client_timestamp, b.receipt_id);
}

std::int64_t to_millis(Timestamp t) { return t.time_since_epoch().count(); }

Timestamp from_millis(std::int64_t ms) { return Timestamp{std::chrono::milliseconds{ms}}; }

}  // namespace

void validate(const ClickEvent& e) {
  if (e.session_id.empty()) malformed("session_id is required");
  if (e.user_id.empty()) malformed("user_id is required");
  if (e.target.empty()) malformed("target is required");
  if (e.client_seq < 0) malformed("client_seq must be non-negative");
}

nlohmann::ordered_json to_json(const ClickEvent& e) {
  nlohmann::ordered_json j;
  j["receipt_id"] = e.receipt_id;
  j["session_id"] = e.session_id;
  j["user_id"] = e.user_id;
  j["target"] = e.target;
  j["tweet_id"] = e.tweet_id ? nlohmann::ordered_json(*e.tweet_id) : nullptr;
  j["client_timestamp"] = format_iso8601(e.client_timestamp);
  j["client_seq"] = e.client_seq;
  return j;
}

ClickEvent event_from_json(const nlohmann::json& j) {
  if (!j.is_object()) malformed("event must be a JSON object");
  auto str = [&](const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_string()) malformed(std::string("'") + key + "' must be a string");
    return it->get<std::string>();
  };
  ClickEvent e;
  e.receipt_id = str("receipt_id");
  e.session_id = str("session_id");
  e.user_id = str("user_id");
  e.target = str("target");
  if (const auto it = j.find("tweet_id"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) malformed("'tweet_id' must be a string");
    e.tweet_id = it->get<std::string>();
  }
  const auto ts = parse_iso8601(str("client_timestamp"));
  if (!ts) malformed("'client_timestamp' is not ISO-8601");
  e.client_timestamp = *ts;
  const auto seq = j.find("client_seq");
  if (seq == j.end() || !seq->is_number_integer()) malformed("'client_seq' must be an integer");
  e.client_seq = seq->get<std::int64_t>();
  if (e.receipt_id.empty()) malformed("'receipt_id' is empty");
  validate(e);
  return e;
}

std::string new_receipt_id() {
  static const bool ready = sodium_init() >= 0;
  if (!ready) throw Error(ErrorCode::Internal, "libsodium failed to initialise");
  unsigned char bytes[16];
  randombytes_buf(bytes, sizeof bytes);
  char hex[sizeof bytes * 2 + 1];
  sodium_bin2hex(hex, sizeof hex, bytes, sizeof bytes);
  return hex;
}

// In-memory

RecordResult InMemoryClickStore::insert(ClickEvent event) {
  std::lock_guard guard(mutex_);
  auto key = std::make_pair(event.session_id, event.client_seq);
  if (const auto it = by_key_.find(key); it != by_key_.end())
    return {events_[it->second].receipt_id, true};
  if (event.receipt_id.empty()) event.receipt_id = new_receipt_id();
  by_key_.emplace(std::move(key), events_.size());
  events_.push_back(std::move(event));
  return {events_.back().receipt_id, false};
}

RecordResult InMemoryClickStore::record_click(const ClickEvent& event) {
  validate(event);
  ClickEvent fresh = event;
  fresh.receipt_id.clear();
  return insert(std::move(fresh));
}

std::vector<ClickEvent> InMemoryClickStore::events_between(Timestamp from, Timestamp to) const {
  check_range(from, to);
  std::vector<ClickEvent> out;
  {
    std::lock_guard guard(mutex_);
    for (const auto& e : events_)
      if (e.client_timestamp >= from && e.client_timestamp < to) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), export_order);
  return out;
}

std::size_t InMemoryClickStore::import_events(const std::vector<ClickEvent>& events) {
  std::size_t added = 0;
  for (const auto& e : events) {
    validate(e);
    if (e.receipt_id.empty()) malformed("imported events need a receipt_id");
    if (!insert(e).duplicate) ++added;
  }
  return added;
}

std::size_t InMemoryClickStore::count() const {
  std::lock_guard guard(mutex_);
  return events_.size();
}

// SQLite

SqliteClickStore::SqliteClickStore(std::shared_ptr<SqliteDatabase> db) : db_(std::move(db)) {}

RecordResult SqliteClickStore::insert(const ClickEvent& e) {
  auto guard = db_->lock();
  auto st = db_->prepare(
      "INSERT INTO click_events (receipt_id, session_id, user_id, target, tweet_id, "
      "client_timestamp_ms, client_seq) VALUES (?, ?, ?, ?, ?, ?, ?) "
      "ON CONFLICT (session_id, client_seq) DO NOTHING");
  st.bind(1, e.receipt_id)
      .bind(2, e.session_id)
      .bind(3, e.user_id)
      .bind(4, e.target)
      .bind(5, e.tweet_id)
      .bind(6, to_millis(e.client_timestamp))
      .bind(7, e.client_seq);
  st.step();
  if (db_->changes() == 1) return {e.receipt_id, false};

  auto existing =
      db_->prepare("SELECT receipt_id FROM click_events WHERE session_id = ? AND client_seq = ?");
  existing.bind(1, e.session_id).bind(2, e.client_seq);
  if (!existing.step())
    throw Error(ErrorCode::StorageFailure, "click insert neither stored nor found");
  return {existing.text(0), true};
}

RecordResult SqliteClickStore::record_click(const ClickEvent& event) {
  validate(event);
  ClickEvent fresh = event;
  fresh.receipt_id = new_receipt_id();
  return insert(fresh);
}

std::vector<ClickEvent> SqliteClickStore::events_between(Timestamp from, Timestamp to) const {
  check_range(from, to);
  auto guard = db_->lock();
  auto st = db_->prepare(
      "SELECT receipt_id, session_id, user_id, target, tweet_id, client_timestamp_ms, client_seq "
      "FROM click_events WHERE client_timestamp_ms >= ? AND client_timestamp_ms < ? "
      "ORDER BY client_timestamp_ms, receipt_id");
  st.bind(1, to_millis(from)).bind(2, to_millis(to));
  std::vector<ClickEvent> out;
  while (st.step()) {
    ClickEvent e;
    e.receipt_id = st.text(0);
    e.session_id = st.text(1);
    e.user_id = st.text(2);
    e.target = st.text(3);
    e.tweet_id = st.optional_text(4);
    e.client_timestamp = from_millis(st.integer(5));
    e.client_seq = st.integer(6);
    out.push_back(std::move(e));
  }
  return out;
}

std::size_t SqliteClickStore::import_events(const std::vector<ClickEvent>& events) {
  for (const auto& e : events) {
    validate(e);
    if (e.receipt_id.empty()) malformed("imported events need a receipt_id");
  }
  return db_->transaction([&] {
    std::size_t added = 0;
    for (const auto& e : events)
      if (!insert(e).duplicate) ++added;
    return added;
  });
}

std::size_t SqliteClickStore::count() const {
  auto guard = db_->lock();
  auto st = db_->prepare("SELECT COUNT(*) FROM click_events");
  st.step();
  return static_cast<std::size_t>(st.integer(0));
}

std::string export_events(const ClickStore& store, Timestamp from, Timestamp to) {
  std::string out;
  for (const auto& e : store.events_between(from, to)) {
    out += to_json(e).dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<ClickEvent> parse_events_jsonl(std::string_view input) {
  std::vector<ClickEvent> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < input.size()) {
    std::size_t end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    const std::string_view line = input.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) malformed("line " + std::to_string(line_no) + ": invalid JSON");
    try {
      out.push_back(event_from_json(j));
    } catch (const Error& e) {
      malformed("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace tweetinfo::telemetry
