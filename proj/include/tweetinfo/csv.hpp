#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tweetinfo::csv {

struct Row {
  std::size_t line = 0;  // 1-based physical line where the row starts
  std::vector<std::string> fields;
  std::optional<std::string> error;  // set when the row could not be tokenized
  std::string raw;
};

// RFC 4180 reader: comma separated, double-quote escaping, quoted fields may
// span lines, CRLF or LF terminators. Blank lines are skipped.
std::vector<Row> read(std::string_view input);

std::string quote(std::string_view field);

std::string write_row(const std::vector<std::string>& fields);

}  // namespace tweetinfo::csv
