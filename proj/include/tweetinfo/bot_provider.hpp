#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace tweetinfo::bot {

// Scores an account handle in [0, 1]. Implementations throw
// Error(ProviderUnavailable) when no score can be produced. Implementations
// must be safe to call concurrently.
class BotProvider {
 public:
  virtual ~BotProvider() = default;
  virtual double score(const std::string& account_handle) const = 0;
};

// Deterministic lookup over a fixture table. Unknown handles are unavailable.
class OfflineBotProvider final : public BotProvider {
 public:
  OfflineBotProvider() = default;
  explicit OfflineBotProvider(std::unordered_map<std::string, double> scores);

  // Lines of `handle<TAB>score`; '#' comments allowed.
  static OfflineBotProvider load(const std::filesystem::path& path);

  double score(const std::string& account_handle) const override;

 private:
  std::unordered_map<std::string, double> scores_;
};

// Botometer-style HTTP client: GET <endpoint>?handle=<h> with a bearer token,
// expecting a JSON body {"score": <number>}. One connection per call, so
// concurrent use shares no state.
class RemoteBotProvider final : public BotProvider {
 public:
  RemoteBotProvider(std::string endpoint, std::string token,
                    std::chrono::milliseconds timeout = std::chrono::seconds(5));

  // Reads TWEETINFO_BOT_ENDPOINT and TWEETINFO_BOT_TOKEN.
  static std::unique_ptr<RemoteBotProvider> from_environment();

  double score(const std::string& account_handle) const override;

 private:
  std::string origin_;  // scheme://host[:port]
  std::string path_;
  std::string token_;
  std::chrono::milliseconds timeout_;
};

struct BotAssessment {
  double bot_score = 0.0;
  bool is_bot = false;
  bool unscored = false;

  bool operator==(const BotAssessment&) const = default;
};

// Clamps the provider's answer to [0, 1] and thresholds at 0.5. Provider
// failure degrades to (0.0, false, unscored).
BotAssessment score_bot(const std::string& account_handle, const BotProvider& provider);

// Dataset-supplied scores take precedence over the provider.
BotAssessment assess(const std::optional<double>& dataset_score,
                     const std::optional<std::string>& account_handle,
                     const BotProvider* provider);

}  // namespace tweetinfo::bot
