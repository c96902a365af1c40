#include "tweetinfo/api.hpp"

#include <charconv>
#include <set>

#include <httplib.h>

#include "tweetinfo/codec.hpp"

namespace tweetinfo::api {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

HttpResponse error_response(ErrorCode code, std::string_view message) {
  return {http_status(code), error_body(code, message)};
}

HttpResponse error_response(const Error& e) { return error_response(e.code(), e.what()); }

HttpResponse unauthenticated() {
  return error_response(ErrorCode::Unauthenticated, "missing, invalid or expired bearer token");
}

int parse_page_number(const std::string& name, const std::string& value) {
  int v = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || res.ec != std::errc{} || res.ptr != value.data() + value.size())
    throw Error(ErrorCode::InvalidPagination, name + " must be an integer");
  return v;
}

}  // namespace

FilterQuery parse_filter_query(const Params& params) {
  static const std::set<std::string> kKnown{"hate",      "misinformation", "bot",  "verified",
                                            "sentiment", "language",       "page", "page_size"};
  for (const auto& [name, value] : params) {
    if (!kKnown.contains(name))
      throw Error(ErrorCode::UnknownParameter, "unknown query parameter '" + name + "'");
    if (params.count(name) > 1)
      throw Error(ErrorCode::InvalidFilterValue, "parameter '" + name + "' given more than once");
  }
  auto get = [&](const char* name) -> std::optional<std::string> {
    const auto it = params.find(name);
    if (it == params.end()) return std::nullopt;
    return it->second;
  };

  FilterQuery q;
  auto tri = [&](const char* name, TriState& out) {
    if (const auto v = get(name)) {
      const auto parsed = parse_tristate(*v);
      if (!parsed)
        throw Error(ErrorCode::InvalidFilterValue,
                    std::string(name) + " must be one of any, yes, no");
      out = *parsed;
    }
  };
  tri("hate", q.hate);
  tri("misinformation", q.misinformation);
  tri("bot", q.bot);
  tri("verified", q.verified);
  if (const auto v = get("sentiment")) {
    const auto parsed = parse_sentiment_filter(*v);
    if (!parsed)
      throw Error(ErrorCode::InvalidFilterValue,
                  "sentiment must be one of any, positive, neutral, negative");
    q.sentiment = *parsed;
  }
  if (const auto v = get("language")) {
    const auto parsed = parse_language_filter(*v);
    if (!parsed)
      throw Error(ErrorCode::InvalidFilterValue, "language must be one of any, en, es");
    q.language = *parsed;
  }
  // Mutual exclusion is reported ahead of any pagination error.
  if (q.hate == TriState::Yes && q.misinformation == TriState::Yes) validate_filter(q);
  if (const auto v = get("page")) q.page = parse_page_number("page", *v);
  if (const auto v = get("page_size")) q.page_size = parse_page_number("page_size", *v);
  validate_filter(q);
  return q;
}

std::string to_query_string(const FilterQuery& q) {
  std::string s;
  s += "hate=" + std::string(to_string(q.hate));
  s += "&misinformation=" + std::string(to_string(q.misinformation));
  s += "&bot=" + std::string(to_string(q.bot));
  s += "&verified=" + std::string(to_string(q.verified));
  s += "&sentiment=" + std::string(to_string(q.sentiment));
  s += "&language=" + std::string(to_string(q.language));
  s += "&page=" + std::to_string(q.page);
  s += "&page_size=" + std::to_string(q.page_size);
  return s;
}

ordered_json to_json(const Page& page) {
  ordered_json j;
  j["items"] = ordered_json::array();
  for (const auto& r : page.items) j["items"].push_back(tweetinfo::to_json(r));
  j["page"] = page.page;
  j["page_size"] = page.page_size;
  j["total_matching"] = page.total_matching;
  return j;
}

ordered_json to_json(const MetaInfo& m) {
  ordered_json j;
  j["tweet_id"] = m.tweet_id;
  j["bot"] = {{"value", m.bot}, {"bot_score", m.bot_score}};
  j["hate_speech"] = {{"value", m.hate_speech}, {"subtype", to_string(m.hate_subtype)}};
  ordered_json misinfo = {{"value", m.misinformation}};
  if (m.misinformation && m.fact_check_url) misinfo["fact_check_url"] = *m.fact_check_url;
  j["misinformation"] = std::move(misinfo);
  j["verified"] = {{"value", m.verified}};
  j["sentiment"] = {{"label", to_string(m.sentiment_label)},
                    {"compound", m.sentiment_compound}};
  j["category"] = {{"value", to_string(m.category)}};
  j["language"] = {{"value", to_string(m.language)}};
  return j;
}

std::string error_body(ErrorCode code, std::string_view message) {
  ordered_json j;
  j["error"] = {{"code", to_string(code)}, {"message", message}};
  return j.dump();
}

ApiService::ApiService(TweetStore& store, telemetry::ClickStore& clicks,
                       const auth::UserDirectory& users, auth::SessionManager& sessions)
    : store_(store), clicks_(clicks), users_(users), sessions_(sessions) {}

std::optional<auth::SessionToken> ApiService::authenticate(std::string_view authorization) {
  const auto token = auth::bearer_token(authorization);
  if (!token) return std::nullopt;
  return sessions_.validate(*token);
}

HttpResponse ApiService::sign_in(std::string_view body) {
  const auto j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("username") ||
      !j["username"].is_string() || !j.contains("password") || !j["password"].is_string())
    return error_response(ErrorCode::MalformedRequest,
                          "expected a JSON body with string fields username and password");
  try {
    const auto session = auth::sign_in(users_, sessions_, j["username"].get<std::string>(),
                                       j["password"].get<std::string>());
    ordered_json out;
    out["token"] = session.token;
    out["expires_at"] = format_iso8601(session.expires_at);
    return {200, out.dump()};
  } catch (const Error& e) {
    return error_response(e);
  }
}

HttpResponse ApiService::timeline(std::string_view authorization, const Params& params) {
  if (!authenticate(authorization)) return unauthenticated();
  try {
    return {200, to_json(store_.query(parse_filter_query(params))).dump()};
  } catch (const Error& e) {
    return error_response(e);
  }
}

HttpResponse ApiService::meta(std::string_view authorization, const std::string& tweet_id) {
  if (!authenticate(authorization)) return unauthenticated();
  try {
    return {200, to_json(store_.get_meta(tweet_id)).dump()};
  } catch (const Error& e) {
    return error_response(e);
  }
}

HttpResponse ApiService::click(std::string_view authorization, std::string_view body) {
  const auto session = authenticate(authorization);
  if (!session) return unauthenticated();

  const auto j = json::parse(body, nullptr, false);
  auto malformed = [](std::string_view why) {
    return error_response(ErrorCode::MalformedEvent, why);
  };
  if (j.is_discarded() || !j.is_object()) return malformed("body must be a JSON object");
  auto non_empty_string = [&](const char* key) {
    return j.contains(key) && j[key].is_string() && !j[key].get<std::string>().empty();
  };
  if (!non_empty_string("session_id")) return malformed("session_id is required");
  if (!non_empty_string("target")) return malformed("target is required");
  if (!j.contains("client_seq") || !j["client_seq"].is_number_integer() ||
      j["client_seq"].get<std::int64_t>() < 0)
    return malformed("client_seq must be a non-negative integer");
  if (!non_empty_string("client_timestamp")) return malformed("client_timestamp is required");
  const auto ts = parse_iso8601(j["client_timestamp"].get<std::string>());
  if (!ts) return malformed("client_timestamp must be ISO-8601");
  if (j.contains("tweet_id") && !j["tweet_id"].is_null() && !j["tweet_id"].is_string())
    return malformed("tweet_id must be a string");

  telemetry::ClickEvent e;
  e.session_id = j["session_id"].get<std::string>();
  e.user_id = session->user_id;
  e.target = j["target"].get<std::string>();
  if (j.contains("tweet_id") && j["tweet_id"].is_string())
    e.tweet_id = j["tweet_id"].get<std::string>();
  e.client_timestamp = *ts;
  e.client_seq = j["client_seq"].get<std::int64_t>();

  try {
    const auto result = clicks_.record_click(e);
    ordered_json out;
    out["receipt_id"] = result.receipt_id;
    out["duplicate"] = result.duplicate;
    return {202, out.dump()};
  } catch (const Error& err) {
    return error_response(err);
  }
}

void ApiService::mount(httplib::Server& server,
                       const std::optional<std::filesystem::path>& static_dir) {
  constexpr const char* kJson = "application/json";
  auto reply = [](httplib::Response& res, const HttpResponse& r) {
    res.status = r.status;
    res.set_content(r.body, kJson);
  };

  server.Post("/api/session", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, sign_in(req.body));
  });
  server.Get("/api/tweets", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, timeline(req.get_header_value("Authorization"), req.params));
  });
  server.Get(R"(/api/tweets/([^/]+)/meta)",
             [this, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, meta(req.get_header_value("Authorization"), req.matches[1].str()));
             });
  server.Post("/api/events/click",
              [this, reply](const httplib::Request& req, httplib::Response& res) {
                reply(res, click(req.get_header_value("Authorization"), req.body));
              });

  if (static_dir && std::filesystem::is_directory(*static_dir))
    server.set_mount_point("/", static_dir->string());

  server.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
        res.status = 500;
        res.set_content(error_body(ErrorCode::Internal, "internal error"), kJson);
      });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    const ErrorCode code = res.status == 404 ? ErrorCode::NotFound : ErrorCode::MalformedRequest;
    res.set_content(error_body(code, httplib::status_message(res.status)), kJson);
    return httplib::Server::HandlerResponse::Handled;
  });
}

}  // namespace tweetinfo::api
