#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <thread>

#include "tweetinfo/error.hpp"
#include "tweetinfo/sqlite.hpp"
#include "tweetinfo/telemetry.hpp"

using namespace tweetinfo;
using namespace tweetinfo::telemetry;
using std::chrono::milliseconds;

namespace {

Timestamp at(std::int64_t ms) { return Timestamp{milliseconds(ms)}; }

ClickEvent event(std::string session, std::int64_t seq, std::int64_t ms) {
  ClickEvent e;
  e.session_id = std::move(session);
  e.user_id = "alice";
  e.target = "meta_button";
  e.tweet_id = "hate:1";
  e.client_timestamp = at(ms);
  e.client_seq = seq;
  return e;
}

std::vector<std::unique_ptr<ClickStore>> both_stores() {
  std::vector<std::unique_ptr<ClickStore>> stores;
  stores.push_back(std::make_unique<InMemoryClickStore>());
  stores.push_back(std::make_unique<SqliteClickStore>(SqliteDatabase::open(":memory:")));
  return stores;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("validate rejects incomplete events", "[telemetry]") {
  CHECK_NOTHROW(validate(event("s", 0, 1)));
  auto e = event("", 0, 1);
  CHECK(code_of([&] { validate(e); }) == ErrorCode::MalformedEvent);
  e = event("s", -1, 1);
  CHECK(code_of([&] { validate(e); }) == ErrorCode::MalformedEvent);
  e = event("s", 0, 1);
  e.target.clear();
  CHECK(code_of([&] { validate(e); }) == ErrorCode::MalformedEvent);
  e = event("s", 0, 1);
  e.user_id.clear();
  CHECK(code_of([&] { validate(e); }) == ErrorCode::MalformedEvent);
}

TEST_CASE("receipt ids are 128-bit hex and distinct", "[telemetry]") {
  std::set<std::string> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto id = new_receipt_id();
    REQUIRE(id.size() == 32);
    CHECK(id.find_first_not_of("0123456789abcdef") == std::string::npos);
    seen.insert(id);
  }
  CHECK(seen.size() == 1000);
}

TEST_CASE("json round trip", "[telemetry]") {
  auto e = event("s", 4, 1700000000123);
  e.receipt_id = new_receipt_id();
  CHECK(event_from_json(to_json(e)) == e);
  e.tweet_id.reset();
  CHECK(event_from_json(to_json(e)) == e);
  CHECK(code_of([] { event_from_json(nlohmann::json{{"session_id", "s"}}); }) ==
        ErrorCode::MalformedEvent);
}

TEST_CASE("record_click is idempotent per session and sequence", "[telemetry]") {
  for (auto& store : both_stores()) {
    const auto first = store->record_click(event("s1", 0, 10));
    CHECK_FALSE(first.duplicate);
    CHECK(first.receipt_id.size() == 32);
    CHECK(store->count() == 1);

    const auto again = store->record_click(event("s1", 0, 99));
    CHECK(again.duplicate);
    CHECK(again.receipt_id == first.receipt_id);
    CHECK(store->count() == 1);

    CHECK_FALSE(store->record_click(event("s1", 1, 10)).duplicate);
    CHECK_FALSE(store->record_click(event("s2", 0, 10)).duplicate);
    CHECK(store->count() == 3);

    CHECK(code_of([&] { store->record_click(event("", 0, 10)); }) == ErrorCode::MalformedEvent);
    CHECK(store->count() == 3);
  }
}

TEST_CASE("concurrent submissions are each stored once", "[telemetry]") {
  for (auto& store : both_stores()) {
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
      threads.emplace_back([&, t] {
        for (int i = 0; i < 25; ++i) store->record_click(event("t" + std::to_string(t), i, i));
      });
    for (auto& th : threads) th.join();
    CHECK(store->count() == 100);

    threads.clear();
    std::atomic<int> duplicates{0};
    for (int t = 0; t < 4; ++t)
      threads.emplace_back([&, t] {
        for (int i = 0; i < 25; ++i)
          duplicates += store->record_click(event("t" + std::to_string(t), i, i)).duplicate;
      });
    for (auto& th : threads) th.join();
    CHECK(store->count() == 100);
    CHECK(duplicates == 100);
  }
}

TEST_CASE("events_between is half-open and ordered", "[telemetry]") {
  for (auto& store : both_stores()) {
    for (int i = 0; i < 10; ++i) store->record_click(event("s", i, 100 - i * 10));
    const auto all = store->events_between(at(0), at(1000));
    REQUIRE(all.size() == 10);
    for (std::size_t i = 1; i < all.size(); ++i)
      CHECK(std::pair(all[i - 1].client_timestamp, all[i - 1].receipt_id) <
            std::pair(all[i].client_timestamp, all[i].receipt_id));

    CHECK(store->events_between(at(10), at(30)).size() == 2);  // 10, 20
    CHECK(store->events_between(at(50), at(50)).empty());
    CHECK(store->events_between(at(101), at(200)).empty());
    CHECK(code_of([&] { store->events_between(at(5), at(4)); }) == ErrorCode::InvalidRange);
  }
}

TEST_CASE("export and re-import reproduce the rows", "[telemetry]") {
  for (auto& source : both_stores()) {
    for (int i = 0; i < 30; ++i) source->record_click(event("s" + std::to_string(i % 3), i, i));
    const auto exported = export_events(*source, at(0), at(1000));
    const auto parsed = parse_events_jsonl(exported);
    CHECK(parsed == source->events_between(at(0), at(1000)));

    for (auto& target : both_stores()) {
      CHECK(target->import_events(parsed) == 30);
      CHECK(target->import_events(parsed) == 0);
      CHECK(export_events(*target, at(0), at(1000)) == exported);
    }
  }
  CHECK(export_events(InMemoryClickStore{}, at(0), at(1)).empty());
  CHECK(code_of([] { parse_events_jsonl("{}\n"); }) == ErrorCode::MalformedEvent);
}
