// tweetinfo: ingest, load, serve and export commands.

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "tweetinfo/annotate.hpp"
#include "tweetinfo/api.hpp"
#include "tweetinfo/auth.hpp"
#include "tweetinfo/codec.hpp"
#include "tweetinfo/config.hpp"
#include "tweetinfo/error.hpp"
#include "tweetinfo/ingest.hpp"

namespace fs = std::filesystem;
using namespace tweetinfo;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + path.string());
  out << content;
}

ServiceConfig config_or_default(const std::string& path) {
  return path.empty() ? [] {
    ServiceConfig c;
    apply_env_overrides(c);
    return c;
  }()
                      : load_config(path);
}

httplib::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

struct IngestOptions {
  std::string source;
  std::string format;
  std::string in;
  std::string out;
  std::string rejects;
  std::string base;
  std::string config;
  std::string lexicon;
  std::string stopwords_en;
  std::string stopwords_es;
  std::string bot_provider;
  std::string bot_scores;
};

int run_ingest(const IngestOptions& o) {
  const auto source = parse_source_tag(o.source);
  if (!source) throw Error(ErrorCode::ConfigError, "--source must be hate or misinfo");
  const auto format = o.format == "csv" ? ingest::InputFormat::Csv : ingest::InputFormat::Jsonl;

  ServiceConfig cfg = config_or_default(o.config);
  if (!o.lexicon.empty()) cfg.lexicon = o.lexicon;
  if (!o.stopwords_en.empty()) cfg.stopwords_en = o.stopwords_en;
  if (!o.stopwords_es.empty()) cfg.stopwords_es = o.stopwords_es;
  if (!o.bot_provider.empty()) cfg.bot_provider = o.bot_provider;
  if (!o.bot_scores.empty()) cfg.bot_scores = o.bot_scores;
  const auto resources = load_annotation_resources(cfg);

  const auto parsed = ingest::parse_corpus(read_file(o.in), format, *source);
  auto normalized = ingest::normalize_all(parsed.records, *source);
  auto annotated = annotate_all(normalized.records, resources.context());

  std::vector<TweetRecord> all;
  if (!o.base.empty()) all = import_corpus_jsonl(read_file(o.base)).records;
  all.insert(all.end(), std::make_move_iterator(annotated.begin()),
             std::make_move_iterator(annotated.end()));
  const Corpus corpus = ingest::merge(std::move(all));
  write_file(o.out, export_corpus_jsonl(corpus));

  std::string rejects;
  auto emit = [&](const char* stage, const ingest::Reject& r) {
    ordered_json j;
    j["stage"] = stage;
    j["line"] = r.line;
    j["code"] = to_string(r.code);
    j["reason"] = r.reason;
    j["content"] = r.content;
    rejects += j.dump() + "\n";
  };
  for (const auto& r : parsed.rejects) emit("parse", r);
  for (const auto& r : normalized.rejects) emit("normalize", r);
  if (!o.rejects.empty()) write_file(o.rejects, rejects);

  std::cout << "parsed " << parsed.records.size() << ", rejected "
            << parsed.rejects.size() + normalized.rejects.size() << ", corpus "
            << corpus.records.size() << " (hate " << corpus.counts_by_source.at(SourceTag::HateDataset)
            << ", misinfo " << corpus.counts_by_source.at(SourceTag::MisinfoDataset) << ")\n";
  return 0;
}

int run_load(const std::string& corpus_path, const std::string& config, const std::string& store) {
  ServiceConfig cfg = config_or_default(config);
  if (!store.empty()) cfg.store = store;
  auto stores = open_stores(cfg.store);
  const auto report = stores.tweets->bulk_load(import_corpus_jsonl(read_file(corpus_path)));
  std::cout << "inserted " << report.inserted << ", replaced " << report.replaced << ", removed "
            << report.removed << ", store now " << stores.tweets->size() << "\n";
  return 0;
}

int run_serve(const std::string& config_path) {
  const ServiceConfig cfg = load_config(config_path);
  auto stores = open_stores(cfg.store);
  if (cfg.corpus) {
    const auto report = stores.tweets->bulk_load(import_corpus_jsonl(read_file(*cfg.corpus)));
    std::cerr << "loaded " << report.inserted + report.replaced << " records from "
              << cfg.corpus->string() << "\n";
  }
  auth::UserDirectory users;
  for (const auto& u : cfg.users) users.add_user(u.username, u.password_hash);
  if (users.size() == 0) std::cerr << "warning: no users configured; sign-in will always fail\n";
  auth::SessionManager sessions(cfg.session_ttl);

  api::ApiService service(*stores.tweets, *stores.clicks, users, sessions);
  httplib::Server server;
  service.mount(server, cfg.static_dir);

  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "listening on " << cfg.listen_address << ":" << cfg.port << "\n";
  if (!server.listen(cfg.listen_address, cfg.port)) {
    std::cerr << "error: cannot listen on " << cfg.listen_address << ":" << cfg.port << "\n";
    return 1;
  }
  return 0;
}

int run_export(const std::string& from_s, const std::string& to_s, const std::string& out,
               const std::string& config, const std::string& store) {
  const auto from = parse_iso8601(from_s);
  const auto to = parse_iso8601(to_s);
  if (!from || !to) throw Error(ErrorCode::InvalidRange, "--from/--to must be ISO-8601");
  ServiceConfig cfg = config_or_default(config);
  if (!store.empty()) cfg.store = store;
  auto stores = open_stores(cfg.store);
  const std::string jsonl = telemetry::export_events(*stores.clicks, *from, *to);
  write_file(out, jsonl);
  std::cout << "exported " << std::count(jsonl.begin(), jsonl.end(), '\n') << " events\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmful-content filtering service"};
  app.require_subcommand(1);

  IngestOptions ingest_opts;
  auto* ingest_cmd = app.add_subcommand("ingest", "Parse, normalize and annotate a source dataset");
  ingest_cmd->add_option("--source", ingest_opts.source, "hate | misinfo")
      ->required()
      ->check(CLI::IsMember({"hate", "misinfo"}));
  ingest_cmd->add_option("--format", ingest_opts.format, "jsonl | csv")
      ->required()
      ->check(CLI::IsMember({"jsonl", "csv"}));
  ingest_cmd->add_option("--in", ingest_opts.in, "Source file")->required()->check(CLI::ExistingFile);
  ingest_cmd->add_option("--out", ingest_opts.out, "Canonical corpus JSONL to write")->required();
  ingest_cmd->add_option("--rejects", ingest_opts.rejects, "Rejects report (JSONL)");
  ingest_cmd->add_option("--base", ingest_opts.base, "Existing corpus to merge into (first wins)")
      ->check(CLI::ExistingFile);
  ingest_cmd->add_option("--config", ingest_opts.config, "Service config (annotation settings)")
      ->check(CLI::ExistingFile);
  ingest_cmd->add_option("--lexicon", ingest_opts.lexicon, "token<TAB>valence lexicon file")
      ->check(CLI::ExistingFile);
  ingest_cmd->add_option("--stopwords-en", ingest_opts.stopwords_en)->check(CLI::ExistingFile);
  ingest_cmd->add_option("--stopwords-es", ingest_opts.stopwords_es)->check(CLI::ExistingFile);
  ingest_cmd->add_option("--bot-provider", ingest_opts.bot_provider, "offline | remote")
      ->check(CLI::IsMember({"offline", "remote"}));
  ingest_cmd->add_option("--bot-scores", ingest_opts.bot_scores, "handle<TAB>score fixture")
      ->check(CLI::ExistingFile);

  std::string corpus_path, load_config_path, load_store;
  auto* load_cmd = app.add_subcommand("load", "Bulk-load a canonical corpus into the store");
  load_cmd->add_option("--corpus", corpus_path)->required()->check(CLI::ExistingFile);
  load_cmd->add_option("--config", load_config_path)->check(CLI::ExistingFile);
  load_cmd->add_option("--store", load_store, "memory: | sqlite:<path> (overrides config)");

  std::string serve_config;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--config", serve_config)->required()->check(CLI::ExistingFile);

  std::string from, to, export_out, export_config, export_store;
  auto* events_cmd = app.add_subcommand("events", "Click telemetry");
  events_cmd->require_subcommand(1);
  auto* export_cmd = events_cmd->add_subcommand("export", "Export click events as JSONL");
  export_cmd->add_option("--from", from, "ISO-8601, inclusive")->required();
  export_cmd->add_option("--to", to, "ISO-8601, exclusive")->required();
  export_cmd->add_option("--out", export_out)->required();
  export_cmd->add_option("--config", export_config)->check(CLI::ExistingFile);
  export_cmd->add_option("--store", export_store);

  std::string password;
  auto* hash_cmd = app.add_subcommand("hash-password", "Print an argon2id hash for the config");
  hash_cmd->add_option("password", password)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest_cmd) return run_ingest(ingest_opts);
    if (*load_cmd) return run_load(corpus_path, load_config_path, load_store);
    if (*serve_cmd) return run_serve(serve_config);
    if (*export_cmd) return run_export(from, to, export_out, export_config, export_store);
    if (*hash_cmd) {
      std::cout << auth::hash_password(password) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
