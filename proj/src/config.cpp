#include "tweetinfo/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

#include "tweetinfo/error.hpp"
#include "tweetinfo/sqlite.hpp"

namespace tweetinfo {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() || base.empty() ? path : (base / path).lexically_normal();
}

int parse_int(const std::string& s, const char* what) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    bad(std::string(what) + " must be an integer, got '" + s + "'");
  return v;
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (!v) return std::nullopt;
  return std::string(v);
}

ServiceConfig config_from_json(const nlohmann::json& j, const fs::path& base_dir) {
  if (!j.is_object()) bad("config must be a JSON object");
  ServiceConfig c;
  try {
    if (j.contains("listen_address")) c.listen_address = j.at("listen_address").get<std::string>();
    if (j.contains("port")) c.port = j.at("port").get<int>();
    if (j.contains("session_ttl_seconds"))
      c.session_ttl = std::chrono::seconds(j.at("session_ttl_seconds").get<long long>());
    if (j.contains("store")) c.store = j.at("store").get<std::string>();
    auto path = [&](const char* key, std::optional<fs::path>& out) {
      if (j.contains(key) && !j.at(key).is_null())
        out = resolve(base_dir, j.at(key).get<std::string>());
    };
    path("static_dir", c.static_dir);
    path("corpus", c.corpus);
    path("bot_scores", c.bot_scores);
    path("lexicon", c.lexicon);
    path("stopwords_en", c.stopwords_en);
    path("stopwords_es", c.stopwords_es);
    if (j.contains("bot_provider")) c.bot_provider = j.at("bot_provider").get<std::string>();
    if (j.contains("users")) {
      for (const auto& u : j.at("users"))
        c.users.push_back({u.at("username").get<std::string>(),
                           u.at("password_hash").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid config: ") + e.what());
  }
  // sqlite paths are relative to the config file as well
  if (c.store.rfind("sqlite:", 0) == 0 && c.store != "sqlite::memory:")
    c.store = "sqlite:" + resolve(base_dir, c.store.substr(7)).string();
  if (c.bot_provider != "offline" && c.bot_provider != "remote")
    bad("bot_provider must be 'offline' or 'remote'");
  if (c.port < 0 || c.port > 65535) bad("port out of range");
  if (c.session_ttl.count() <= 0) bad("session_ttl_seconds must be positive");
  return c;
}

void apply_env_overrides(ServiceConfig& c, const EnvLookup& env) {
  if (auto v = env("TWEETINFO_LISTEN_ADDRESS")) c.listen_address = *v;
  if (auto v = env("TWEETINFO_PORT")) c.port = parse_int(*v, "TWEETINFO_PORT");
  if (auto v = env("TWEETINFO_SESSION_TTL_SECONDS"))
    c.session_ttl = std::chrono::seconds(parse_int(*v, "TWEETINFO_SESSION_TTL_SECONDS"));
  if (auto v = env("TWEETINFO_STORE")) c.store = *v;
  if (auto v = env("TWEETINFO_STATIC_DIR")) c.static_dir = fs::path(*v);
  if (auto v = env("TWEETINFO_CORPUS")) c.corpus = fs::path(*v);
  if (auto v = env("TWEETINFO_BOT_PROVIDER")) c.bot_provider = *v;
  if (c.bot_provider != "offline" && c.bot_provider != "remote")
    bad("bot_provider must be 'offline' or 'remote'");
  if (c.port < 0 || c.port > 65535) bad("port out of range");
  if (c.session_ttl.count() <= 0) bad("session TTL must be positive");
}

ServiceConfig load_config(const fs::path& path, const EnvLookup& env) {
  std::ifstream in(path);
  if (!in) bad("cannot open config " + path.string());
  const auto j = nlohmann::json::parse(in, nullptr, false, true);
  if (j.is_discarded()) bad("config " + path.string() + " is not valid JSON");
  ServiceConfig c = config_from_json(j, path.parent_path());
  apply_env_overrides(c, env);
  return c;
}

Stores open_stores(const std::string& connection) {
  if (connection == "memory:")
    return {std::make_shared<InMemoryTweetStore>(),
            std::make_shared<telemetry::InMemoryClickStore>()};
  if (connection.rfind("sqlite:", 0) == 0) {
    auto db = SqliteDatabase::open(connection.substr(7));
    return {std::make_shared<SqliteTweetStore>(db),
            std::make_shared<telemetry::SqliteClickStore>(db)};
  }
  bad("unsupported store connection '" + connection + "' (use memory: or sqlite:<path>)");
}

AnnotationContext AnnotationResources::context() const {
  AnnotationContext ctx;
  ctx.lexicon = &lexicon;
  ctx.stopwords = &stopwords;
  ctx.provider = provider.get();
  return ctx;
}

AnnotationResources load_annotation_resources(const ServiceConfig& c) {
  AnnotationResources r;
  if (c.lexicon) r.lexicon = sentiment::Lexicon::load(*c.lexicon);
  if (c.stopwords_en) r.stopwords.en = language::StopwordSets::load_words(*c.stopwords_en);
  if (c.stopwords_es) r.stopwords.es = language::StopwordSets::load_words(*c.stopwords_es);
  if (c.bot_provider == "remote") {
    r.provider = bot::RemoteBotProvider::from_environment();
  } else if (c.bot_scores) {
    r.provider = std::make_unique<bot::OfflineBotProvider>(bot::OfflineBotProvider::load(*c.bot_scores));
  } else {
    r.provider = std::make_unique<bot::OfflineBotProvider>();
  }
  return r;
}

}  // namespace tweetinfo
