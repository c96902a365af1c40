#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tweetinfo/filter.hpp"
#include "tweetinfo/record.hpp"

namespace tweetinfo {

struct LoadReport {
  std::size_t inserted = 0;  // ids new to the store
  std::size_t replaced = 0;  // ids already present, overwritten
  std::size_t removed = 0;   // previous ids absent from the new corpus

  bool operator==(const LoadReport&) const = default;
};

// Read-mostly corpus storage. bulk_load swaps the whole corpus atomically:
// concurrent readers observe either the old or the new contents.
class TweetStore {
 public:
  virtual ~TweetStore() = default;

  virtual LoadReport bulk_load(const Corpus& corpus) = 0;

  // Validates q first. A page past the end yields no items but the correct
  // total_matching.
  virtual Page query(const FilterQuery& q) const = 0;

  virtual std::optional<TweetRecord> find(const std::string& id) const = 0;
  virtual std::size_t size() const = 0;
  virtual std::vector<TweetRecord> all() const = 0;

  // Throws Error(NotFound).
  MetaInfo get_meta(const std::string& tweet_id) const;
};

class InMemoryTweetStore final : public TweetStore {
 public:
  InMemoryTweetStore();

  LoadReport bulk_load(const Corpus& corpus) override;
  Page query(const FilterQuery& q) const override;
  std::optional<TweetRecord> find(const std::string& id) const override;
  std::size_t size() const override;
  std::vector<TweetRecord> all() const override;

 private:
  struct Snapshot {
    std::vector<TweetRecord> records;
    std::unordered_map<std::string, std::size_t> index;
  };

  std::shared_ptr<const Snapshot> snapshot() const;

  mutable std::mutex mutex_;
  std::shared_ptr<const Snapshot> snapshot_;
};

class SqliteDatabase;

// Relational store; filters are pushed down into SQL.
class SqliteTweetStore final : public TweetStore {
 public:
  explicit SqliteTweetStore(std::shared_ptr<SqliteDatabase> db);

  LoadReport bulk_load(const Corpus& corpus) override;
  Page query(const FilterQuery& q) const override;
  std::optional<TweetRecord> find(const std::string& id) const override;
  std::size_t size() const override;
  std::vector<TweetRecord> all() const override;

 private:
  std::shared_ptr<SqliteDatabase> db_;
};

}  // namespace tweetinfo
