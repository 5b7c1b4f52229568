#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "citecurve/core.hpp"

namespace citecurve {

/// One publication row. Title and year are carried through untouched.
struct InputRecord {
  std::optional<std::string> title;
  std::optional<std::int64_t> year;
  Count citations = 0;

  friend bool operator==(const InputRecord&, const InputRecord&) = default;
};

enum class InputFormat { Csv, Json, Auto };

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed content. `line()` is 1-based for CSV; for JSON it is the
/// 1-based element position in the top-level array (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Last column is the count; preceding columns are joined back with ','
/// into the title. A first row whose last field is not an integer is
/// treated as a header.
std::vector<InputRecord> parse_csv(std::string_view text);

/// Top-level array of objects with a required integer "citations" and
/// optional "title" / "year".
std::vector<InputRecord> parse_json(std::string_view text);

/// Auto picks by extension (.csv / .json), then by the first
/// non-whitespace character.
std::vector<InputRecord> parse_input(const std::filesystem::path& path,
                                     InputFormat format = InputFormat::Auto);

CitationList to_citation_list(const std::vector<InputRecord>& records);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace citecurve
