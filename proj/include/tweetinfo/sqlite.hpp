#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

struct sqlite3;
struct sqlite3_stmt;

namespace tweetinfo {

class SqliteStatement;

// One SQLite connection with a mutex serializing all use. Opening applies
// any pending schema migrations. Failures throw Error(StorageFailure).
class SqliteDatabase {
 public:
  // ":memory:" opens a private in-memory database.
  static std::shared_ptr<SqliteDatabase> open(const std::string& path);

  ~SqliteDatabase();
  SqliteDatabase(const SqliteDatabase&) = delete;
  SqliteDatabase& operator=(const SqliteDatabase&) = delete;

  void exec(std::string_view sql);
  SqliteStatement prepare(std::string_view sql);
  std::int64_t changes() const;

  // Number of migrations recorded in schema_migrations.
  int schema_version();

  std::unique_lock<std::recursive_mutex> lock() { return std::unique_lock(mutex_); }

  // Runs fn inside BEGIN IMMEDIATE/COMMIT, rolling back on exception.
  template <typename Fn>
  auto transaction(Fn&& fn) {
    auto guard = lock();
    exec("BEGIN IMMEDIATE");
    try {
      if constexpr (std::is_void_v<decltype(fn())>) {
        fn();
        exec("COMMIT");
      } else {
        auto result = fn();
        exec("COMMIT");
        return result;
      }
    } catch (...) {
      exec("ROLLBACK");
      throw;
    }
  }

  sqlite3* handle() const { return db_; }

 private:
  explicit SqliteDatabase(sqlite3* db) : db_(db) {}
  void migrate();

  sqlite3* db_ = nullptr;
  std::recursive_mutex mutex_;
};

class SqliteStatement {
 public:
  SqliteStatement(sqlite3* db, sqlite3_stmt* stmt) : db_(db), stmt_(stmt) {}
  ~SqliteStatement();
  SqliteStatement(SqliteStatement&& other) noexcept;
  SqliteStatement& operator=(SqliteStatement&&) = delete;
  SqliteStatement(const SqliteStatement&) = delete;

  // 1-based parameter index.
  SqliteStatement& bind(int index, std::string_view value);
  SqliteStatement& bind(int index, std::int64_t value);
  SqliteStatement& bind(int index, double value);
  SqliteStatement& bind_null(int index);
  template <typename T>
  SqliteStatement& bind(int index, const std::optional<T>& value) {
    return value ? bind(index, *value) : bind_null(index);
  }

  // True while a row is available.
  bool step();
  void reset();

  bool is_null(int column) const;
  std::string text(int column) const;
  std::int64_t integer(int column) const;
  double real(int column) const;
  std::optional<std::string> optional_text(int column) const;
  std::optional<double> optional_real(int column) const;

 private:
  sqlite3* db_;
  sqlite3_stmt* stmt_;
};

}  // namespace tweetinfo
