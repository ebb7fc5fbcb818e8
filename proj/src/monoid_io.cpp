#include "defk/monoid_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "defk/error.hpp"

namespace defk {

FiniteMonoid read_monoid_json(const std::string& text, std::size_t max_size) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise("BadFormat", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("identity") ||
      !doc.contains("table"))
    raise("BadFormat", "expected an object with keys elements, identity, table");

  std::vector<std::string> names;
  for (const auto& item : doc["elements"]) {
    if (!item.is_string()) raise("BadFormat", "elements must be strings");
    names.push_back(item.get<std::string>());
  }

  auto lookup = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    raise("BadFormat", "unknown element name: " + name);
  };

  if (!doc["identity"].is_string()) raise("BadFormat", "identity must be a string");
  int identity = lookup(doc["identity"].get<std::string>());

  const auto& rows = doc["table"];
  if (!rows.is_array() || rows.size() != names.size())
    raise("BadFormat", "table must have one row per element");
  std::vector<int> table;
  table.reserve(names.size() * names.size());
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != names.size())
      raise("BadFormat", "table rows must have one entry per element");
    for (const auto& cell : row) {
      if (!cell.is_string()) raise("BadFormat", "table entries must be element names");
      table.push_back(lookup(cell.get<std::string>()));
    }
  }
  return validate(std::move(names), std::move(table), identity, max_size);
}

FiniteMonoid load_monoid_file(const std::string& path, std::size_t max_size) {
  std::ifstream in(path);
  if (!in) raise("FileError", "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_monoid_json(buffer.str(), max_size);
}

std::string write_monoid_json(const FiniteMonoid& m) {
  nlohmann::json doc;
  doc["elements"] = m.names();
  doc["identity"] = m.name(m.identity());
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m.name(m.mul(i, j)));
    rows.push_back(row);
  }
  doc["table"] = rows;
  return doc.dump(2) + "\n";
}

}  // namespace defk
