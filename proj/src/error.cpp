#include "tweetinfo/error.hpp"

namespace tweetinfo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UndecodableInput: return "UNDECODABLE_INPUT";
    case ErrorCode::MissingRequiredColumn: return "MISSING_REQUIRED_COLUMN";
    case ErrorCode::MalformedRecord: return "MALFORMED_RECORD";
    case ErrorCode::UnknownLabel: return "UNKNOWN_LABEL";
    case ErrorCode::MissingFactCheck: return "MISSING_FACT_CHECK";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::InvalidLexicon: return "INVALID_LEXICON";
    case ErrorCode::ProviderUnavailable: return "PROVIDER_UNAVAILABLE";
    case ErrorCode::MutuallyExclusiveFilters: return "MUTUALLY_EXCLUSIVE_FILTERS";
    case ErrorCode::InvalidFilterValue: return "INVALID_FILTER_VALUE";
    case ErrorCode::InvalidPagination: return "INVALID_PAGINATION";
    case ErrorCode::UnknownParameter: return "UNKNOWN_PARAMETER";
    case ErrorCode::NotFound: return "NOT_FOUND";
    case ErrorCode::StorageFailure: return "STORAGE_FAILURE";
    case ErrorCode::InvalidCredentials: return "INVALID_CREDENTIALS";
    case ErrorCode::Unauthenticated: return "UNAUTHENTICATED";
    case ErrorCode::MalformedEvent: return "MALFORMED_EVENT";
    case ErrorCode::MalformedRequest: return "MALFORMED_REQUEST";
    case ErrorCode::InvalidRange: return "INVALID_RANGE";
    case ErrorCode::ConfigError: return "CONFIG_ERROR";
    case ErrorCode::Internal: return "INTERNAL_ERROR";
  }
  return "INTERNAL_ERROR";
}

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidCredentials:
    case ErrorCode::Unauthenticated:
      return 401;
    case ErrorCode::NotFound:
      return 404;
    case ErrorCode::StorageFailure:
    case ErrorCode::ProviderUnavailable:
      return 503;
    case ErrorCode::Internal:
    case ErrorCode::ConfigError:
      return 500;
    default:
      return 400;
  }
}

}  // namespace tweetinfo
