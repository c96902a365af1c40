#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tweetinfo/auth.hpp"
#include "tweetinfo/error.hpp"
#include "tweetinfo/filter.hpp"
#include "tweetinfo/store.hpp"
#include "tweetinfo/telemetry.hpp"

namespace httplib {
class Server;
}

namespace tweetinfo::api {

using Params = std::multimap<std::string, std::string>;

// Absent booleans default to no, absent sentiment/language to any, page 1,
// page_size 20. Unknown or repeated parameters are rejected. Throws Error.
FilterQuery parse_filter_query(const Params& params);

// Canonical query string for a FilterQuery (every field spelled out).
std::string to_query_string(const FilterQuery& q);

nlohmann::ordered_json to_json(const Page& page);
nlohmann::ordered_json to_json(const MetaInfo& meta);
std::string error_body(ErrorCode code, std::string_view message);

struct HttpResponse {
  int status = 200;
  std::string body;
};

// Transport-independent request handlers. Bodies are JSON; every error body
// is {"error": {"code", "message"}}.
class ApiService {
 public:
  ApiService(TweetStore& store, telemetry::ClickStore& clicks, const auth::UserDirectory& users,
             auth::SessionManager& sessions);

  // POST /api/session {username, password} -> {token, expires_at}
  HttpResponse sign_in(std::string_view body);

  // GET /api/tweets?...
  HttpResponse timeline(std::string_view authorization, const Params& params);

  // GET /api/tweets/{id}/meta
  HttpResponse meta(std::string_view authorization, const std::string& tweet_id);

  // POST /api/events/click -> 202 {receipt_id, duplicate}
  HttpResponse click(std::string_view authorization, std::string_view body);

  // Registers the routes; static_dir (when set) is served at "/".
  void mount(httplib::Server& server,
             const std::optional<std::filesystem::path>& static_dir = std::nullopt);

 private:
  std::optional<auth::SessionToken> authenticate(std::string_view authorization);

  TweetStore& store_;
  telemetry::ClickStore& clicks_;
  const auth::UserDirectory& users_;
  auth::SessionManager& sessions_;
};

}  // namespace tweetinfo::api
