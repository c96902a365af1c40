#include "tweetinfo/csv.hpp"

namespace tweetinfo::csv {

std::vector<Row> read(std::string_view input) {
  std::vector<Row> rows;
  std::size_t pos = 0;
  std::size_t line = 1;
  while (pos < input.size()) {
    Row row;
    row.line = line;
    const std::size_t row_start = pos;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool done = false;
    while (!done) {
      if (pos >= input.size()) {
        if (in_quotes) row.error = "unterminated quoted field";
        row.fields.push_back(std::move(field));
        break;
      }
      const char c = input[pos];
      if (in_quotes) {
        if (c == '"') {
          if (pos + 1 < input.size() && input[pos + 1] == '"') {
            field.push_back('"');
            pos += 2;
          } else {
            in_quotes = false;
            ++pos;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
        continue;
      }
      switch (c) {
        case ',':
          row.fields.push_back(std::move(field));
          field.clear();
          field_was_quoted = false;
          ++pos;
          break;
        case '"':
          if (field.empty() && !field_was_quoted) {
            in_quotes = true;
            field_was_quoted = true;
          } else if (!row.error) {
            row.error = "stray quote in unquoted field";
          }
          ++pos;
          break;
        case '\r':
          if (pos + 1 < input.size() && input[pos + 1] == '\n') {
            ++pos;
            break;
          }
          [[fallthrough]];
        case '\n':
          ++pos;
          ++line;
          row.fields.push_back(std::move(field));
          done = true;
          break;
        default:
          if (field_was_quoted && !row.error) row.error = "text after closing quote";
          field.push_back(c);
          ++pos;
      }
    }
    row.raw = std::string(input.substr(row_start, pos - row_start));
    while (!row.raw.empty() && (row.raw.back() == '\n' || row.raw.back() == '\r'))
      row.raw.pop_back();
    const bool blank = row.fields.size() == 1 && row.fields.front().empty() && !row.error &&
                       row.raw.empty();
    if (!blank) rows.push_back(std::move(row));
  }
  return rows;
}

std::string quote(std::string_view field) {
  const bool needs = field.find_first_of(",\"\r\n") != std::string_view::npos ||
                     (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string write_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += quote(fields[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace tweetinfo::csv
