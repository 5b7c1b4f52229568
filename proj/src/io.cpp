#include "citecurve/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace citecurve {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

std::optional<std::int64_t> parse_integer(std::string_view s) {
  s = unquote(trim(s));
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string lower_extension(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

}  // namespace

std::vector<InputRecord> parse_csv(std::string_view text) {
  std::vector<InputRecord> records;
  std::size_t line_no = 0;
  bool first_row = true;

  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;

    const auto comma = line.rfind(',');
    const std::string_view last = comma == std::string_view::npos ? line : line.substr(comma + 1);
    const auto count = parse_integer(last);
    if (!count) {
      if (first_row) {
        first_row = false;
        continue;  // header
      }
      throw ParseError("line " + std::to_string(line_no) + ": citation count '" +
                           std::string(trim(last)) + "' is not an integer",
                       line_no);
    }
    first_row = false;
    if (*count < 0) {
      throw ParseError("line " + std::to_string(line_no) + ": negative citation count " +
                           std::to_string(*count),
                       line_no);
    }

    InputRecord record;
    record.citations = *count;
    if (comma != std::string_view::npos) {
      record.title = std::string(unquote(trim(line.substr(0, comma))));
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<InputRecord> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_array()) throw ParseError("JSON input must be an array of records", 0);

  std::vector<InputRecord> records;
  records.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const std::size_t pos = i + 1;
    const auto where = "record " + std::to_string(pos) + ": ";
    if (!item.is_object()) throw ParseError(where + "expected an object", pos);
    const auto it = item.find("citations");
    if (it == item.end() || !it->is_number_integer()) {
      throw ParseError(where + "missing integer \"citations\" field", pos);
    }
    InputRecord record;
    record.citations = it->get<std::int64_t>();
    if (record.citations < 0) {
      throw ParseError(where + "negative citation count " + std::to_string(record.citations),
                       pos);
    }
    if (const auto t = item.find("title"); t != item.end() && !t->is_null()) {
      if (!t->is_string()) throw ParseError(where + "\"title\" must be a string", pos);
      record.title = t->get<std::string>();
    }
    if (const auto y = item.find("year"); y != item.end() && !y->is_null()) {
      if (!y->is_number_integer()) throw ParseError(where + "\"year\" must be an integer", pos);
      record.year = y->get<std::int64_t>();
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("error reading " + path.string());
  return content;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("error writing " + path.string());
}

std::vector<InputRecord> parse_input(const std::filesystem::path& path, InputFormat format) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) throw IoError(path.string() + " is a directory");
  const auto content = read_file(path);
  if (format == InputFormat::Auto) {
    const auto ext = lower_extension(path);
    if (ext == ".csv") {
      format = InputFormat::Csv;
    } else if (ext == ".json") {
      format = InputFormat::Json;
    } else {
      const auto body = trim(content);
      format = !body.empty() && (body.front() == '[' || body.front() == '{') ? InputFormat::Json
                                                                            : InputFormat::Csv;
    }
  }
  return format == InputFormat::Json ? parse_json(content) : parse_csv(content);
}

CitationList to_citation_list(const std::vector<InputRecord>& records) {
  std::vector<Count> raw;
  raw.reserve(records.size());
  for (const auto& r : records) raw.push_back(r.citations);
  return CitationList::from_raw(raw);
}

}  // namespace citecurve
