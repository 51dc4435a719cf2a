#include "hcube/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "hcube/errors.hpp"

namespace hcube {

namespace {

using Json = nlohmann::ordered_json;
using Kind = PreconditionError::Kind;

[[noreturn]] void parse_error(const std::string& what) { throw PreconditionError(Kind::kParse, what); }

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Data lines after the leading comment block; a CR before the newline is
// tolerated, spaces and tabs are not.
std::vector<std::string> data_lines(const std::string& text) {
  auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && !lines[first].empty() && lines[first][0] == '#') ++first;
  std::vector<std::string> out;
  for (std::size_t i = first; i < lines.size(); ++i) {
    std::string line = lines[i];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      // Blank lines are only allowed at the very end.
      for (std::size_t k = i + 1; k < lines.size(); ++k)
        if (!lines[k].empty() && lines[k] != "\r") parse_error("blank line at line " + std::to_string(i + 1));
      break;
    }
    for (char c : line)
      if (c != '0' && c != '1')
        parse_error("line " + std::to_string(i + 1) + ": unexpected character '" + std::string(1, c) + "'");
    out.push_back(std::move(line));
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::size_t> index_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) parse_error(std::string("missing array \"") + key + "\"");
  std::vector<std::size_t> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_unsigned()) parse_error(std::string("\"") + key + "\" must hold non-negative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace

std::string format_matrix_text(const BinaryMatrix& x) {
  std::string out;
  out.reserve(x.rows() * (x.cols() + 1));
  for (const auto& r : x.row_list()) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

BinaryMatrix parse_matrix_text(const std::string& text) {
  const auto lines = data_lines(text);
  if (lines.empty()) parse_error("matrix has no rows");
  std::vector<BitString> rows;
  rows.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != lines[0].size())
      parse_error("row " + std::to_string(i + 1) + " has length " + std::to_string(lines[i].size()) + ", expected " +
                  std::to_string(lines[0].size()));
    rows.push_back(BitString::from_string(lines[i]));
  }
  return BinaryMatrix::from_rows(std::move(rows), lines[0].size());
}

std::string format_matrix_json(const BinaryMatrix& x, int indent) {
  Json j;
  j["rows"] = x.rows();
  j["cols"] = x.cols();
  j["data"] = Json::array();
  for (const auto& r : x.row_list()) j["data"].push_back(r.to_string());
  return j.dump(indent);
}

BinaryMatrix parse_matrix_json(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    parse_error("matrix JSON needs \"rows\", \"cols\" and \"data\"");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() || !j["data"].is_array())
    parse_error("malformed matrix JSON");
  const auto m = j["rows"].get<std::size_t>();
  const auto n = j["cols"].get<std::size_t>();
  if (j["data"].size() != m) parse_error("\"data\" has " + std::to_string(j["data"].size()) + " rows, expected " + std::to_string(m));
  std::vector<BitString> rows;
  for (const auto& r : j["data"]) {
    if (!r.is_string()) parse_error("\"data\" entries must be strings");
    BitString b = BitString::from_string(r.get<std::string>());
    if (b.size() != n) parse_error("row of length " + std::to_string(b.size()) + " in a matrix with " + std::to_string(n) + " columns");
    rows.push_back(std::move(b));
  }
  return BinaryMatrix::from_rows(std::move(rows), n);
}

BinaryMatrix parse_matrix(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return parse_matrix_json(text);
  return parse_matrix_text(text);
}

std::string format_label_class_text(const LabelClass& s) {
  std::string out;
  for (const auto& v : s.vertices()) {
    out += v.to_string();
    out += '\n';
  }
  return out;
}

LabelClass parse_label_class_text(const std::string& text, std::optional<std::size_t> n) {
  const auto lines = data_lines(text);
  std::vector<BitString> verts;
  for (const auto& line : lines) verts.push_back(BitString::from_string(line));
  std::size_t dim = n ? *n : (lines.empty() ? 0 : lines[0].size());
  return LabelClass(dim, std::move(verts));
}

std::string format_label_class_json(const LabelClass& s, int indent) {
  Json j;
  j["n"] = s.dimension();
  j["vertices"] = Json::array();
  for (const auto& v : s.vertices()) j["vertices"].push_back(v.to_string());
  return j.dump(indent);
}

LabelClass parse_label_class_json(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned() || !j.contains("vertices") ||
      !j["vertices"].is_array())
    parse_error("label class JSON needs \"n\" and \"vertices\"");
  std::vector<BitString> verts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) parse_error("\"vertices\" entries must be strings");
    verts.push_back(BitString::from_string(v.get<std::string>()));
  }
  return LabelClass(j["n"].get<std::size_t>(), std::move(verts));
}

std::string format_symmetry_json(const Symmetry& s, int indent) {
  Json j;
  j["sigma"] = s.sigma.image();
  j["pi"] = s.phi.pi.image();
  j["flips"] = Json::array();
  for (std::size_t c = 0; c < s.phi.flips.size(); ++c)
    if (s.phi.flips[c]) j["flips"].push_back(c);
  return j.dump(indent);
}

Symmetry parse_symmetry_json(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_object()) parse_error("symmetry JSON must be an object");
  auto sigma = index_list(j, "sigma");
  auto pi = index_list(j, "pi");
  const auto flipped = index_list(j, "flips");
  std::vector<bool> flips(pi.size(), false);
  for (auto c : flipped) {
    if (c >= pi.size()) parse_error("flip index " + std::to_string(c) + " out of range");
    flips[c] = true;
  }
  return Symmetry{Permutation(std::move(sigma)), Permaut{Permutation(std::move(pi)), std::move(flips)}};
}

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hcube
