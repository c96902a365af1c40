#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <thread>

#include <httplib.h>

#include "support.hpp"
#include "tweetinfo/bot_provider.hpp"
#include "tweetinfo/error.hpp"

using namespace tweetinfo;
using namespace tweetinfo::bot;

namespace {

class FixedProvider final : public BotProvider {
 public:
  explicit FixedProvider(double v) : v_(v) {}
  double score(const std::string&) const override { return v_; }

 private:
  double v_;
};

class FailingProvider final : public BotProvider {
 public:
  double score(const std::string&) const override {
    throw Error(ErrorCode::ProviderUnavailable, "down");
  }
};

}  // namespace

TEST_CASE("score_bot thresholds at 0.5 inclusive", "[bot]") {
  CHECK(score_bot("@a", FixedProvider(0.9)) == BotAssessment{0.9, true, false});
  CHECK(score_bot("@a", FixedProvider(0.5)) == BotAssessment{0.5, true, false});
  CHECK(score_bot("@a", FixedProvider(0.4999)) == BotAssessment{0.4999, false, false});
}

TEST_CASE("score_bot clamps and degrades on failure", "[bot]") {
  CHECK(score_bot("@a", FixedProvider(1.7)).bot_score == 1.0);
  CHECK(score_bot("@a", FixedProvider(-0.2)).bot_score == 0.0);
  CHECK(score_bot("@a", FailingProvider()) == BotAssessment{0.0, false, true});
  CHECK(score_bot("@a", FixedProvider(std::nan(""))) == BotAssessment{0.0, false, true});
}

TEST_CASE("dataset scores take precedence over the provider", "[bot]") {
  const FixedProvider provider(0.9);
  CHECK(assess(0.1, std::string("@a"), &provider) == BotAssessment{0.1, false, false});
  CHECK(assess(std::nullopt, std::string("@a"), &provider) == BotAssessment{0.9, true, false});
  CHECK(assess(std::nullopt, std::nullopt, &provider).unscored);
  CHECK(assess(std::nullopt, std::string("@a"), nullptr).unscored);
}

TEST_CASE("offline provider is a deterministic table lookup", "[bot]") {
  const auto provider =
      OfflineBotProvider::load(test_support::source_dir() / "data/fixtures/bot_scores.tsv");
  const OfflineBotProvider small({{"@x", 0.7}});
  CHECK(small.score("@x") == 0.7);
  CHECK(small.score("@x") == small.score("@x"));
  CHECK_THROWS_AS(small.score("@nobody"), Error);
  CHECK(score_bot("@nobody", small).unscored);
}

TEST_CASE("remote provider talks to a Botometer-style endpoint", "[bot]") {
  httplib::Server server;
  std::atomic<int> calls{0};
  server.Get("/v1/score", [&](const httplib::Request& req, httplib::Response& res) {
    ++calls;
    if (req.get_header_value("Authorization") != "Bearer secret") {
      res.status = 401;
      return;
    }
    const auto handle = req.get_param_value("handle");
    if (handle == "@broken") {
      res.set_content("not json", "text/plain");
      return;
    }
    res.set_content(handle == "@bot" ? R"({"score": 0.93})" : R"({"score": 0.12})",
                    "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  const RemoteBotProvider client(base + "/v1/score", "secret");
  CHECK(client.score("@bot") == 0.93);
  CHECK(score_bot("@human", client) == BotAssessment{0.12, false, false});
  CHECK(score_bot("@broken", client).unscored);

  const RemoteBotProvider wrong_token(base + "/v1/score", "nope");
  CHECK(score_bot("@bot", wrong_token).unscored);

  // concurrent calls share no state
  std::vector<std::thread> workers;
  std::atomic<int> bots{0};
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&] {
      for (int k = 0; k < 5; ++k) bots += score_bot("@bot", client).is_bot;
    });
  for (auto& w : workers) w.join();
  CHECK(bots == 20);

  server.stop();
  t.join();

  const RemoteBotProvider unreachable(base + "/v1/score", "secret", std::chrono::milliseconds(200));
  CHECK(score_bot("@bot", unreachable).unscored);
}
