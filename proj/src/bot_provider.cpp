#include "tweetinfo/bot_provider.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include <httplib.h>
#include <json.hpp>

#include "tweetinfo/error.hpp"
#include "tweetinfo/record.hpp"
#include "tweetinfo/text.hpp"

namespace tweetinfo::bot {

OfflineBotProvider::OfflineBotProvider(std::unordered_map<std::string, double> scores)
    : scores_(std::move(scores)) {}

OfflineBotProvider OfflineBotProvider::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open bot score file " + path.string());
  std::unordered_map<std::string, double> scores;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    double value = 0.0;
    const std::string field = tab == std::string::npos ? "" : text::trim(line.substr(tab + 1));
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (tab == std::string::npos || res.ec != std::errc{} ||
        res.ptr != field.data() + field.size())
      throw Error(ErrorCode::ConfigError, path.string() + ":" + std::to_string(line_no) +
                                              ": expected handle<TAB>score");
    scores.insert_or_assign(line.substr(0, tab), value);
  }
  return OfflineBotProvider(std::move(scores));
}

double OfflineBotProvider::score(const std::string& account_handle) const {
  const auto it = scores_.find(account_handle);
  if (it == scores_.end())
    throw Error(ErrorCode::ProviderUnavailable, "no offline score for '" + account_handle + "'");
  return it->second;
}

RemoteBotProvider::RemoteBotProvider(std::string endpoint, std::string token,
                                     std::chrono::milliseconds timeout)
    : token_(std::move(token)), timeout_(timeout) {
  const auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos)
    throw Error(ErrorCode::ConfigError, "bot endpoint must be an absolute URL: " + endpoint);
  const auto path_start = endpoint.find('/', scheme_end + 3);
  origin_ = endpoint.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : endpoint.substr(path_start);
}

std::unique_ptr<RemoteBotProvider> RemoteBotProvider::from_environment() {
  const char* endpoint = std::getenv("TWEETINFO_BOT_ENDPOINT");
  const char* token = std::getenv("TWEETINFO_BOT_TOKEN");
  if (!endpoint || !*endpoint)
    throw Error(ErrorCode::ConfigError, "TWEETINFO_BOT_ENDPOINT is not set");
  return std::make_unique<RemoteBotProvider>(endpoint, token ? token : "");
}

double RemoteBotProvider::score(const std::string& account_handle) const {
  httplib::Client client(origin_);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  httplib::Headers headers;
  if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);
  const httplib::Params params{{"handle", account_handle}};
  const auto res = client.Get(path_, params, headers);
  if (!res)
    throw Error(ErrorCode::ProviderUnavailable,
                "bot service unreachable: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw Error(ErrorCode::ProviderUnavailable,
                "bot service returned HTTP " + std::to_string(res->status));
  const auto body = nlohmann::json::parse(res->body, nullptr, false);
  if (body.is_discarded() || !body.is_object() || !body.contains("score") ||
      !body["score"].is_number())
    throw Error(ErrorCode::ProviderUnavailable, "bot service returned an unreadable body");
  return body["score"].get<double>();
}

BotAssessment score_bot(const std::string& account_handle, const BotProvider& provider) {
  double raw = 0.0;
  try {
    raw = provider.score(account_handle);
  } catch (const Error&) {
    return {0.0, false, true};
  }
  if (std::isnan(raw)) return {0.0, false, true};
  const double s = std::clamp(raw, 0.0, 1.0);
  return {s, s >= kBotThreshold, false};
}

BotAssessment assess(const std::optional<double>& dataset_score,
                     const std::optional<std::string>& account_handle,
                     const BotProvider* provider) {
  if (dataset_score && !std::isnan(*dataset_score)) {
    const double s = std::clamp(*dataset_score, 0.0, 1.0);
    return {s, s >= kBotThreshold, false};
  }
  if (account_handle && !account_handle->empty() && provider)
    return score_bot(*account_handle, *provider);
  return {0.0, false, true};
}

}  // namespace tweetinfo::bot
