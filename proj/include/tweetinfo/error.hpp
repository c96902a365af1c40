#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tweetinfo {

// Registry of machine-readable error codes. Every error that crosses the
// HTTP boundary carries one of these.
enum class ErrorCode {
  UndecodableInput,
  MissingRequiredColumn,
  MalformedRecord,
  UnknownLabel,
  MissingFactCheck,
  OutOfRange,
  InvalidLexicon,
  ProviderUnavailable,
  MutuallyExclusiveFilters,
  InvalidFilterValue,
  InvalidPagination,
  UnknownParameter,
  NotFound,
  StorageFailure,
  InvalidCredentials,
  Unauthenticated,
  MalformedEvent,
  MalformedRequest,
  InvalidRange,
  ConfigError,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// HTTP status conventionally associated with a code.
int http_status(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tweetinfo
