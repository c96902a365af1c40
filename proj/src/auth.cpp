#include "tweetinfo/auth.hpp"

#include <sodium.h>

#include <algorithm>
#include <cctype>

#include "tweetinfo/error.hpp"

namespace tweetinfo::auth {

namespace {

void ensure_sodium() {
  static const bool ready = sodium_init() >= 0;
  if (!ready) throw Error(ErrorCode::Internal, "libsodium failed to initialise");
}

std::string random_token() {
  ensure_sodium();
  unsigned char bytes[32];
  randombytes_buf(bytes, sizeof bytes);
  constexpr int variant = sodium_base64_VARIANT_URLSAFE_NO_PADDING;
  std::string out(sodium_base64_ENCODED_LEN(sizeof bytes, variant), '\0');
  sodium_bin2base64(out.data(), out.size(), bytes, sizeof bytes, variant);
  out.resize(std::char_traits<char>::length(out.c_str()));
  return out;
}

}  // namespace

std::string hash_password(const std::string& password, HashCost cost) {
  ensure_sodium();
  const auto ops = cost == HashCost::Interactive ? crypto_pwhash_OPSLIMIT_INTERACTIVE
                                                 : crypto_pwhash_OPSLIMIT_MIN;
  const auto mem = cost == HashCost::Interactive ? crypto_pwhash_MEMLIMIT_INTERACTIVE
                                                 : crypto_pwhash_MEMLIMIT_MIN;
  char out[crypto_pwhash_STRBYTES];
  if (crypto_pwhash_str(out, password.data(), password.size(), ops, mem) != 0)
    throw Error(ErrorCode::Internal, "password hashing ran out of memory");
  return out;
}

UserDirectory::UserDirectory(HashCost dummy_cost)
    : dummy_hash_(hash_password(random_token(), dummy_cost)) {}

void UserDirectory::add_user(const std::string& username, std::string password_hash) {
  if (username.empty()) throw Error(ErrorCode::ConfigError, "user name must not be empty");
  if (password_hash.rfind("$argon2", 0) != 0)
    throw Error(ErrorCode::ConfigError, "user '" + username + "' has no argon2 password hash");
  users_.insert_or_assign(username, std::move(password_hash));
}

bool UserDirectory::verify(const std::string& username, const std::string& password) const {
  const auto it = users_.find(username);
  const std::string& hash = it == users_.end() ? dummy_hash_ : it->second;
  const bool ok =
      crypto_pwhash_str_verify(hash.c_str(), password.data(), password.size()) == 0;
  return ok && it != users_.end();
}

SessionManager::SessionManager(std::chrono::seconds ttl, Clock clock)
    : ttl_(ttl), clock_(std::move(clock)) {
  if (ttl_.count() <= 0) throw Error(ErrorCode::ConfigError, "session TTL must be positive");
}

SessionToken SessionManager::issue(const std::string& user_id) {
  SessionToken s;
  s.token = random_token();
  s.user_id = user_id;
  s.issued_at = clock_();
  s.expires_at = s.issued_at + ttl_;
  std::unique_lock guard(mutex_);
  sessions_.insert_or_assign(s.token, s);
  return s;
}

std::optional<SessionToken> SessionManager::validate(const std::string& token) {
  const Timestamp now = clock_();
  {
    std::shared_lock guard(mutex_);
    const auto it = sessions_.find(token);
    if (it == sessions_.end()) return std::nullopt;
    if (now < it->second.expires_at) return it->second;
  }
  std::unique_lock guard(mutex_);
  sessions_.erase(token);
  return std::nullopt;
}

SessionToken sign_in(const UserDirectory& users, SessionManager& sessions,
                     const std::string& username, const std::string& password) {
  if (!users.verify(username, password))
    throw Error(ErrorCode::InvalidCredentials, "invalid username or password");
  return sessions.issue(username);
}

std::optional<std::string> bearer_token(std::string_view header) {
  constexpr std::string_view kScheme = "Bearer ";
  if (header.size() <= kScheme.size()) return std::nullopt;
  for (std::size_t i = 0; i < kScheme.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(header[i])) !=
        std::tolower(static_cast<unsigned char>(kScheme[i])))
      return std::nullopt;
  }
  std::string token(header.substr(kScheme.size()));
  while (!token.empty() && token.back() == ' ') token.pop_back();
  token.erase(0, std::min(token.find_first_not_of(' '), token.size()));
  if (token.empty() || token.find(' ') != std::string::npos) return std::nullopt;
  return token;
}

}  // namespace tweetinfo::auth
