#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tweetinfo/annotate.hpp"
#include "tweetinfo/store.hpp"
#include "tweetinfo/telemetry.hpp"

namespace tweetinfo {

struct UserSeed {
  std::string username;
  std::string password_hash;
};

struct ServiceConfig {
  std::string listen_address = "127.0.0.1";
  int port = 8080;
  std::chrono::seconds session_ttl{24 * 60 * 60};
  std::string store = "memory:";  // "memory:" or "sqlite:<path>"
  std::optional<std::filesystem::path> static_dir;
  std::optional<std::filesystem::path> corpus;  // loaded at startup when set
  std::vector<UserSeed> users;

  std::string bot_provider = "offline";  // "offline" | "remote"
  std::optional<std::filesystem::path> bot_scores;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> stopwords_en;
  std::optional<std::filesystem::path> stopwords_es;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

std::optional<std::string> process_env(const std::string& name);

// Relative paths in the JSON resolve against base_dir. Throws Error(ConfigError).
ServiceConfig config_from_json(const nlohmann::json& j,
                               const std::filesystem::path& base_dir = {});

// TWEETINFO_LISTEN_ADDRESS, TWEETINFO_PORT, TWEETINFO_SESSION_TTL_SECONDS,
// TWEETINFO_STORE, TWEETINFO_STATIC_DIR, TWEETINFO_CORPUS,
// TWEETINFO_BOT_PROVIDER override the file values.
void apply_env_overrides(ServiceConfig& config, const EnvLookup& env = process_env);

ServiceConfig load_config(const std::filesystem::path& path, const EnvLookup& env = process_env);

struct Stores {
  std::shared_ptr<TweetStore> tweets;
  std::shared_ptr<telemetry::ClickStore> clicks;
};

// Both stores share one database for "sqlite:<path>".
Stores open_stores(const std::string& connection);

// Owns everything an AnnotationContext points at.
struct AnnotationResources {
  sentiment::Lexicon lexicon = sentiment::Lexicon::builtin();
  language::StopwordSets stopwords = language::StopwordSets::builtin();
  std::unique_ptr<bot::BotProvider> provider;

  AnnotationContext context() const;
};

AnnotationResources load_annotation_resources(const ServiceConfig& config);

}  // namespace tweetinfo
