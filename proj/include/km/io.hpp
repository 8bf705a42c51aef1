#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "km/error.hpp"
#include "km/gcm.hpp"

namespace km::io {

enum class Format { Json, PlainText };

struct GcmDocument {
  std::string source;  // path, or "<inline>"
  Format format = Format::Json;
  CartanMatrix matrix;
};

/// {"labels": [...]?, "matrix": [[int]]}
inline CartanMatrix parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
    throw Error(Errc::ParseError, "expected an object with a \"matrix\" array");
  IntRows rows;
  for (const auto& row : j["matrix"]) {
    if (!row.is_array()) throw Error(Errc::ParseError, "matrix rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(Errc::ParseError, "matrix entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw Error(Errc::ParseError, "\"labels\" must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw Error(Errc::ParseError, "\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return CartanMatrix::validate(rows, std::move(labels));
}

/// Whitespace-separated integer rows, one row per line; blank lines and lines
/// starting with '#' are skipped.
inline CartanMatrix parse_plain(const std::string& text) {
  IntRows rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t k = line.find_first_not_of(" \t\r");
    if (k == std::string::npos || line[k] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::int64_t> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty()) throw Error(Errc::ParseError, "not an integer: '" + tok + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return CartanMatrix::validate(rows);
}

inline nlohmann::ordered_json to_json(const CartanMatrix& a) {
  nlohmann::ordered_json j;
  j["labels"] = a.labels();
  j["matrix"] = a.rows();
  return j;
}

inline std::string serialize(const CartanMatrix& a) { return to_json(a).dump() + "\n"; }

inline GcmDocument parse_text(const std::string& text, std::string source = "<inline>") {
  const std::size_t k = text.find_first_not_of(" \t\r\n");
  const bool json = k != std::string::npos && text[k] == '{';
  return GcmDocument{std::move(source), json ? Format::Json : Format::PlainText,
                     json ? parse_json(text) : parse_plain(text)};
}

inline GcmDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

}  // namespace km::io
