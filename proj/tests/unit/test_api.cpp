#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "http_fixture.hpp"
#include "support.hpp"
#include "tweetinfo/api.hpp"

using namespace tweetinfo;
using nlohmann::json;
using test_support::LiveServer;

namespace {

struct Fixture {
  InMemoryTweetStore store;
  telemetry::InMemoryClickStore clicks;
  Corpus corpus = test_support::fixture_corpus();
  Fixture() { store.bulk_load(corpus); }
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

httplib::Headers bearer(const std::string& value) { return {{"Authorization", value}}; }

std::string error_code(const httplib::Result& res) {
  return json::parse(res->body)["error"]["code"].get<std::string>();
}

std::vector<std::string> ids_in(const json& page) {
  std::vector<std::string> ids;
  for (const auto& item : page["items"]) ids.push_back(item["id"].get<std::string>());
  return ids;
}

}  // namespace

TEST_CASE("parse_filter_query defaults and errors", "[api]") {
  CHECK(api::parse_filter_query({}) == FilterQuery{});

  const auto q = api::parse_filter_query(
      {{"hate", "yes"}, {"sentiment", "negative"}, {"page", "3"}, {"page_size", "50"}});
  CHECK(q.hate == TriState::Yes);
  CHECK(q.misinformation == TriState::No);
  CHECK(q.sentiment == SentimentFilter::Negative);
  CHECK(q.page == 3);
  CHECK(q.page_size == 50);

  auto code = [](const api::Params& p) {
    try {
      api::parse_filter_query(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code({{"hate", "yes"}, {"misinformation", "yes"}}) == ErrorCode::MutuallyExclusiveFilters);
  CHECK(code({{"hate", "yes"}, {"misinformation", "yes"}, {"page", "0"}}) ==
        ErrorCode::MutuallyExclusiveFilters);
  CHECK(code({{"bogus", "1"}}) == ErrorCode::UnknownParameter);
  CHECK(code({{"hate", "maybe"}}) == ErrorCode::InvalidFilterValue);
  CHECK(code({{"hate", "yes"}, {"hate", "no"}}) == ErrorCode::InvalidFilterValue);
  CHECK(code({{"language", "fr"}}) == ErrorCode::InvalidFilterValue);
  CHECK(code({{"page", "0"}}) == ErrorCode::InvalidPagination);
  CHECK(code({{"page", "abc"}}) == ErrorCode::InvalidPagination);
  CHECK(code({{"page_size", "101"}}) == ErrorCode::InvalidPagination);
  CHECK(code({{"page_size", "2x"}}) == ErrorCode::InvalidPagination);
}

TEST_CASE("to_query_string round-trips through parse_filter_query", "[api]") {
  std::mt19937 rng(11);
  for (auto q : test_support::filter_grid()) {
    q.page = std::uniform_int_distribution<int>(1, 50)(rng);
    q.page_size = std::uniform_int_distribution<int>(1, 100)(rng);
    httplib::Params params;
    httplib::detail::parse_query_text(api::to_query_string(q), params);
    api::Params p(params.begin(), params.end());
    if (q.hate == TriState::Yes && q.misinformation == TriState::Yes) {
      CHECK_THROWS_AS(api::parse_filter_query(p), Error);
    } else {
      CHECK(api::parse_filter_query(p) == q);
    }
  }
}

TEST_CASE("meta JSON shape", "[api]") {
  TweetRecord r;
  r.id = "misinfo:7";
  r.text = "x";
  r.source = SourceTag::MisinfoDataset;
  r.category = Category::Misinformation;
  r.fact_check_url = "https://fc.example/7";
  r.bot_score = 0.75;
  r.is_bot = true;
  r.language = Language::Es;
  r.sentiment_compound = -0.5;
  r.sentiment_label = SentimentLabel::Negative;
  const auto j = json::parse(api::to_json(meta_of(r)).dump());
  CHECK(j["tweet_id"] == "misinfo:7");
  CHECK(j["bot"] == json{{"value", true}, {"bot_score", 0.75}});
  CHECK(j["hate_speech"]["value"] == false);
  CHECK(j["misinformation"] ==
        json{{"value", true}, {"fact_check_url", "https://fc.example/7"}});
  CHECK(j["verified"] == json{{"value", false}});
  CHECK(j["sentiment"] == json{{"label", "negative"}, {"compound", -0.5}});
  CHECK(j["category"] == json{{"value", "misinformation"}});
  CHECK(j["language"] == json{{"value", "es"}});

  r.category = Category::Normal;
  r.fact_check_url.reset();
  const auto n = json::parse(api::to_json(meta_of(r)).dump());
  CHECK_FALSE(n["misinformation"].contains("fact_check_url"));
}

TEST_CASE("every endpoint requires a session", "[api]") {
  auto& f = fixture();
  LiveServer server(f.store, f.clicks);
  auto c = server.client();
  for (const auto& header : {std::string{}, std::string("Bearer nope"), std::string("Basic x")}) {
    auto h = header.empty() ? httplib::Headers{} : bearer(header);
    auto r1 = c.Get("/api/tweets", h);
    auto r2 = c.Get("/api/tweets/hate:1/meta", h);
    auto r3 = c.Post("/api/events/click", h, "{}", "application/json");
    for (const auto* r : {&r1, &r2, &r3}) {
      REQUIRE(*r);
      CHECK((*r)->status == 401);
      CHECK(error_code(*r) == "UNAUTHENTICATED");
    }
  }
}

TEST_CASE("sign-in failures are byte-identical", "[api]") {
  auto& f = fixture();
  LiveServer server(f.store, f.clicks);
  auto c = server.client();
  const auto wrong = c.Post("/api/session", R"({"username":"alice","password":"x"})",
                            "application/json");
  const auto unknown = c.Post("/api/session", R"({"username":"zed","password":"x"})",
                              "application/json");
  REQUIRE(wrong);
  REQUIRE(unknown);
  CHECK(wrong->status == 401);
  CHECK(unknown->status == 401);
  CHECK(wrong->body == unknown->body);
  const auto bad = c.Post("/api/session", "not json", "application/json");
  CHECK(bad->status == 400);
  CHECK(error_code(bad) == "MALFORMED_REQUEST");

  const auto ok = c.Post("/api/session", R"({"username":"alice","password":"correct horse"})",
                         "application/json");
  REQUIRE(ok->status == 200);
  const auto body = json::parse(ok->body);
  CHECK(body["token"].get<std::string>().size() == 43);
  CHECK(parse_iso8601(body["expires_at"].get<std::string>()).has_value());
}

TEST_CASE("timeline over HTTP", "[api]") {
  auto& f = fixture();
  LiveServer server(f.store, f.clicks);
  auto c = server.client();
  const auto auth = bearer(server.sign_in());

  SECTION("default excludes every flagged record") {
    auto res = c.Get("/api/tweets?page_size=100", auth);
    REQUIRE(res->status == 200);
    const auto page = json::parse(res->body);
    FilterQuery q;
    q.page_size = 100;
    const auto expected = test_support::oracle_ids(f.corpus.records, q);
    CHECK(page["total_matching"] == expected.size());
    CHECK(ids_in(page) ==
          std::vector<std::string>(expected.begin(),
                                   expected.begin() + std::min<std::size_t>(100, expected.size())));
    for (const auto& item : page["items"]) {
      CHECK(item["category"] == "normal");
      CHECK(item["is_bot"] == false);
      CHECK(item["verified"] == false);
    }
  }

  SECTION("matches the serialized store query") {
    for (const auto& target : {"/api/tweets", "/api/tweets?hate=yes&page=2",
                               "/api/tweets?misinformation=any&bot=yes&page_size=7"}) {
      auto res = c.Get(target, auth);
      REQUIRE(res->status == 200);
      httplib::Params params;
      const std::string t = target;
      const auto qpos = t.find('?');
      if (qpos != std::string::npos) httplib::detail::parse_query_text(t.substr(qpos + 1), params);
      const auto q = api::parse_filter_query(api::Params(params.begin(), params.end()));
      CHECK(res->body == api::to_json(f.store.query(q)).dump());
    }
  }

  SECTION("positive Spanish tweets agree with the oracle") {
    auto q = FilterQuery::unrestricted();
    q.sentiment = SentimentFilter::Positive;
    q.language = LanguageFilter::Es;
    q.page_size = 100;
    const auto expected = test_support::oracle_ids(f.corpus.records, q);
    std::vector<std::string> got;
    for (int page = 1;; ++page) {
      auto res = c.Get(("/api/tweets?hate=any&misinformation=any&bot=any&verified=any"
                        "&sentiment=positive&language=es&page_size=100&page=" +
                        std::to_string(page))
                           .c_str(),
                       auth);
      REQUIRE(res->status == 200);
      const auto ids = ids_in(json::parse(res->body));
      if (ids.empty()) break;
      got.insert(got.end(), ids.begin(), ids.end());
    }
    CHECK_FALSE(expected.empty());
    CHECK(got == expected);
  }

  SECTION("validation errors") {
    auto res = c.Get("/api/tweets?hate=yes&misinformation=yes", auth);
    CHECK(res->status == 400);
    CHECK(error_code(res) == "MUTUALLY_EXCLUSIVE_FILTERS");
    res = c.Get("/api/tweets?colour=red", auth);
    CHECK(res->status == 400);
    CHECK(error_code(res) == "UNKNOWN_PARAMETER");
    res = c.Get("/api/tweets?page_size=500", auth);
    CHECK(res->status == 400);
    CHECK(error_code(res) == "INVALID_PAGINATION");
  }
}

TEST_CASE("meta over HTTP", "[api]") {
  auto& f = fixture();
  LiveServer server(f.store, f.clicks);
  auto c = server.client();
  const auto auth = bearer(server.sign_in());
  for (std::size_t i = 0; i < f.corpus.records.size(); i += 37) {
    const auto& r = f.corpus.records[i];
    auto res = c.Get(("/api/tweets/" + r.id + "/meta").c_str(), auth);
    REQUIRE(res->status == 200);
    CHECK(res->body == api::to_json(meta_of(r)).dump());
  }
  auto res = c.Get("/api/tweets/hate:nope/meta", auth);
  CHECK(res->status == 404);
  CHECK(error_code(res) == "NOT_FOUND");
}

TEST_CASE("click events over HTTP", "[api]") {
  InMemoryTweetStore store;
  telemetry::InMemoryClickStore clicks;
  LiveServer server(store, clicks);
  auto c = server.client();
  const auto auth = bearer(server.sign_in());
  const std::string body =
      R"({"session_id":"s1","target":"meta_button","tweet_id":"hate:1",)"
      R"("client_timestamp":"2024-05-01T10:00:00.250Z","client_seq":0})";

  auto first = c.Post("/api/events/click", auth, body, "application/json");
  REQUIRE(first->status == 202);
  const auto a = json::parse(first->body);
  CHECK(a["duplicate"] == false);

  auto second = c.Post("/api/events/click", auth, body, "application/json");
  REQUIRE(second->status == 202);
  const auto b = json::parse(second->body);
  CHECK(b["duplicate"] == true);
  CHECK(b["receipt_id"] == a["receipt_id"]);
  CHECK(clicks.count() == 1);

  const auto stored = clicks.events_between(Timestamp{}, now_utc());
  REQUIRE(stored.size() == 1);
  CHECK(stored[0].user_id == "alice");
  CHECK(format_iso8601(stored[0].client_timestamp) == "2024-05-01T10:00:00.250Z");

  for (const auto* bad :
       {"not json", R"({"target":"x","client_timestamp":"2024-05-01T10:00:00Z","client_seq":1})",
        R"({"session_id":"s","target":"x","client_timestamp":"yesterday","client_seq":1})",
        R"({"session_id":"s","target":"x","client_timestamp":"2024-05-01T10:00:00Z","client_seq":-1})"}) {
    auto res = c.Post("/api/events/click", auth, bad, "application/json");
    CHECK(res->status == 400);
    CHECK(error_code(res) == "MALFORMED_EVENT");
  }
  CHECK(clicks.count() == 1);
}

TEST_CASE("unknown routes get a JSON error body", "[api]") {
  InMemoryTweetStore store;
  telemetry::InMemoryClickStore clicks;
  LiveServer server(store, clicks);
  auto c = server.client();
  auto res = c.Get("/api/nothing");
  REQUIRE(res);
  CHECK(res->status == 404);
  CHECK(error_code(res) == "NOT_FOUND");
}
