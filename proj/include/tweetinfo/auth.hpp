#pragma once

#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "tweetinfo/timeutil.hpp"

namespace tweetinfo::auth {

struct SessionToken {
  std::string token;  // 256-bit random, base64url without padding
  std::string user_id;
  Timestamp issued_at{};
  Timestamp expires_at{};
};

enum class HashCost { Interactive, Minimal };

// Salted argon2id hash in libsodium's self-describing string format.
std::string hash_password(const std::string& password, HashCost cost = HashCost::Interactive);

// Seeded user table; no self-registration.
class UserDirectory {
 public:
  explicit UserDirectory(HashCost dummy_cost = HashCost::Interactive);

  void add_user(const std::string& username, std::string password_hash);

  // Unknown users are checked against a dummy hash so both failure paths do
  // the same work.
  bool verify(const std::string& username, const std::string& password) const;

  std::size_t size() const { return users_.size(); }

 private:
  std::unordered_map<std::string, std::string> users_;
  std::string dummy_hash_;
};

using Clock = std::function<Timestamp()>;

class SessionManager {
 public:
  explicit SessionManager(std::chrono::seconds ttl = std::chrono::hours(24),
                          Clock clock = now_utc);

  SessionToken issue(const std::string& user_id);

  // The session for a valid, unexpired token. Expired sessions are evicted.
  std::optional<SessionToken> validate(const std::string& token);

  std::chrono::seconds ttl() const { return ttl_; }

 private:
  std::chrono::seconds ttl_;
  Clock clock_;
  std::shared_mutex mutex_;
  std::unordered_map<std::string, SessionToken> sessions_;
};

// Throws Error(InvalidCredentials) with a message that does not reveal
// whether the user exists.
SessionToken sign_in(const UserDirectory& users, SessionManager& sessions,
                     const std::string& username, const std::string& password);

// Extracts the token from an `Authorization: Bearer <token>` value.
std::optional<std::string> bearer_token(std::string_view authorization_header);

}  // namespace tweetinfo::auth
