#include <string>
#include <unordered_set>
#include <vector>

#include "tweetinfo/error.hpp"
#include "tweetinfo/sqlite.hpp"
#include "tweetinfo/store.hpp"

namespace tweetinfo {

namespace {

constexpr std::string_view kColumns =
    "id, text, source, category, hate_subtype, fact_check_url, verified, language, "
    "sentiment_compound, sentiment_label, bot_score, is_bot, bot_unscored, account_handle, "
    "source_bot_score, language_hint";

template <typename E>
E decode(const std::string& s, std::optional<E> (*parse)(std::string_view) noexcept) {
  const auto v = parse(s);
  if (!v) throw Error(ErrorCode::StorageFailure, "stored value '" + s + "' is not recognised");
  return *v;
}

TweetRecord read_row(const SqliteStatement& st) {
  TweetRecord r;
  r.id = st.text(0);
  r.text = st.text(1);
  r.source = decode<SourceTag>(st.text(2), parse_source_tag);
  r.category = decode<Category>(st.text(3), parse_category);
  r.hate_subtype = decode<HateSubtype>(st.text(4), parse_hate_subtype);
  r.fact_check_url = st.optional_text(5);
  r.verified = st.integer(6) != 0;
  r.language = decode<Language>(st.text(7), parse_language);
  r.sentiment_compound = st.real(8);
  r.sentiment_label = decode<SentimentLabel>(st.text(9), parse_sentiment_label);
  r.bot_score = st.real(10);
  r.is_bot = st.integer(11) != 0;
  r.bot_unscored = st.integer(12) != 0;
  r.account_handle = st.optional_text(13);
  r.source_bot_score = st.optional_real(14);
  r.language_hint = st.optional_text(15);
  return r;
}

// WHERE clause plus its positional text parameters.
struct Predicate {
  std::string sql;
  std::vector<std::string> text_params;
};

void add_tristate(std::string& sql, TriState t, std::string_view yes, std::string_view no) {
  if (t == TriState::Any) return;
  sql += sql.empty() ? " WHERE " : " AND ";
  sql += t == TriState::Yes ? yes : no;
}

Predicate build_predicate(const FilterQuery& q) {
  Predicate p;
  add_tristate(p.sql, q.hate, "category = 'hate_speech'", "category <> 'hate_speech'");
  add_tristate(p.sql, q.misinformation, "category = 'misinformation'",
               "category <> 'misinformation'");
  add_tristate(p.sql, q.bot, "is_bot = 1", "is_bot = 0");
  add_tristate(p.sql, q.verified, "verified = 1", "verified = 0");
  if (q.sentiment != SentimentFilter::Any) {
    p.sql += p.sql.empty() ? " WHERE " : " AND ";
    p.sql += "sentiment_label = ?";
    p.text_params.emplace_back(to_string(q.sentiment));
  }
  if (q.language != LanguageFilter::Any) {
    p.sql += p.sql.empty() ? " WHERE " : " AND ";
    p.sql += "language = ?";
    p.text_params.emplace_back(to_string(q.language));
  }
  return p;
}

}  // namespace

SqliteTweetStore::SqliteTweetStore(std::shared_ptr<SqliteDatabase> db) : db_(std::move(db)) {}

LoadReport SqliteTweetStore::bulk_load(const Corpus& corpus) {
  for (const auto& r : corpus.records) check_invariants(r);
  return db_->transaction([&] {
    std::unordered_set<std::string> previous;
    {
      auto st = db_->prepare("SELECT id FROM tweets");
      while (st.step()) previous.insert(st.text(0));
    }
    db_->exec("DELETE FROM tweets");

    LoadReport report;
    std::unordered_set<std::string> seen;
    auto insert = db_->prepare(
        "INSERT INTO tweets (position, " + std::string(kColumns) +
        ") VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)");
    std::int64_t position = 0;
    for (const auto& r : corpus.records) {
      if (!seen.insert(r.id).second) continue;
      insert.bind(1, position++)
          .bind(2, r.id)
          .bind(3, r.text)
          .bind(4, to_string(r.source))
          .bind(5, to_string(r.category))
          .bind(6, to_string(r.hate_subtype))
          .bind(7, r.fact_check_url)
          .bind(8, std::int64_t{r.verified})
          .bind(9, to_string(r.language))
          .bind(10, r.sentiment_compound)
          .bind(11, to_string(r.sentiment_label))
          .bind(12, r.bot_score)
          .bind(13, std::int64_t{r.is_bot})
          .bind(14, std::int64_t{r.bot_unscored})
          .bind(15, r.account_handle)
          .bind(16, r.source_bot_score)
          .bind(17, r.language_hint);
      insert.step();
      insert.reset();
      if (previous.contains(r.id))
        ++report.replaced;
      else
        ++report.inserted;
    }
    report.removed = previous.size() - report.replaced;
    return report;
  });
}

Page SqliteTweetStore::query(const FilterQuery& q) const {
  validate_filter(q);
  const Predicate p = build_predicate(q);
  auto guard = db_->lock();

  Page page;
  page.page = q.page;
  page.page_size = q.page_size;
  {
    auto count = db_->prepare("SELECT COUNT(*) FROM tweets" + p.sql);
    int i = 1;
    for (const auto& t : p.text_params) count.bind(i++, t);
    count.step();
    page.total_matching = static_cast<std::size_t>(count.integer(0));
  }
  auto select = db_->prepare("SELECT " + std::string(kColumns) + " FROM tweets" + p.sql +
                             " ORDER BY position LIMIT ? OFFSET ?");
  int i = 1;
  for (const auto& t : p.text_params) select.bind(i++, t);
  select.bind(i++, std::int64_t{q.page_size});
  select.bind(i++, static_cast<std::int64_t>(q.page - 1) * q.page_size);
  while (select.step()) page.items.push_back(read_row(select));
  return page;
}

std::optional<TweetRecord> SqliteTweetStore::find(const std::string& id) const {
  auto guard = db_->lock();
  auto st = db_->prepare("SELECT " + std::string(kColumns) + " FROM tweets WHERE id = ?");
  st.bind(1, id);
  if (!st.step()) return std::nullopt;
  return read_row(st);
}

std::size_t SqliteTweetStore::size() const {
  auto guard = db_->lock();
  auto st = db_->prepare("SELECT COUNT(*) FROM tweets");
  st.step();
  return static_cast<std::size_t>(st.integer(0));
}

std::vector<TweetRecord> SqliteTweetStore::all() const {
  auto guard = db_->lock();
  auto st = db_->prepare("SELECT " + std::string(kColumns) + " FROM tweets ORDER BY position");
  std::vector<TweetRecord> out;
  while (st.step()) out.push_back(read_row(st));
  return out;
}

}  // namespace tweetinfo
