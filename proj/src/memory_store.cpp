#include "tweetinfo/error.hpp"
#include "tweetinfo/store.hpp"

namespace tweetinfo {

MetaInfo TweetStore::get_meta(const std::string& tweet_id) const {
  const auto record = find(tweet_id);
  if (!record) throw Error(ErrorCode::NotFound, "no tweet with id '" + tweet_id + "'");
  return meta_of(*record);
}

InMemoryTweetStore::InMemoryTweetStore() : snapshot_(std::make_shared<Snapshot>()) {}

std::shared_ptr<const InMemoryTweetStore::Snapshot> InMemoryTweetStore::snapshot() const {
  std::lock_guard guard(mutex_);
  return snapshot_;
}

LoadReport InMemoryTweetStore::bulk_load(const Corpus& corpus) {
  auto next = std::make_shared<Snapshot>();
  next->records.reserve(corpus.records.size());
  for (const auto& r : corpus.records) {
    check_invariants(r);
    if (!next->index.emplace(r.id, next->records.size()).second) continue;
    next->records.push_back(r);
  }

  std::lock_guard guard(mutex_);
  LoadReport report;
  for (const auto& r : next->records) {
    if (snapshot_->index.contains(r.id))
      ++report.replaced;
    else
      ++report.inserted;
  }
  report.removed = snapshot_->records.size() - report.replaced;
  snapshot_ = std::move(next);
  return report;
}

Page InMemoryTweetStore::query(const FilterQuery& q) const {
  validate_filter(q);
  const auto snap = snapshot();
  Page page;
  page.page = q.page;
  page.page_size = q.page_size;
  const std::size_t first = static_cast<std::size_t>(q.page - 1) * q.page_size;
  for (const auto& r : snap->records) {
    if (!matches(r, q)) continue;
    if (page.total_matching >= first && page.items.size() < static_cast<std::size_t>(q.page_size))
      page.items.push_back(r);
    ++page.total_matching;
  }
  return page;
}

std::optional<TweetRecord> InMemoryTweetStore::find(const std::string& id) const {
  const auto snap = snapshot();
  const auto it = snap->index.find(id);
  if (it == snap->index.end()) return std::nullopt;
  return snap->records[it->second];
}

std::size_t InMemoryTweetStore::size() const { return snapshot()->records.size(); }

std::vector<TweetRecord> InMemoryTweetStore::all() const { return snapshot()->records; }

}  // namespace tweetinfo
