#include "kleitman/family_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kleitman/errors.hpp"

namespace kleitman {

using nlohmann::json;

std::string write_family(const Family& f) {
  json sets = json::array();
  for (const Subset& s : f) sets.push_back(s.elements());
  json doc;
  doc["n"] = f.ground_size();
  doc["sets"] = std::move(sets);
  return doc.dump();
}

Family read_family(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("family file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("sets"))
    throw InvalidInput("family file: expected {\"n\": ..., \"sets\": [...]}");
  if (!doc["n"].is_number_integer()) throw InvalidInput("family file: n must be an integer");
  int n = doc["n"].get<int>();
  if (n < 1) throw InvalidInput("family file: n must be positive");
  if (!doc["sets"].is_array()) throw InvalidInput("family file: sets must be an array");

  std::vector<Subset> sets;
  for (const json& js : doc["sets"]) {
    if (!js.is_array()) throw InvalidInput("family file: each set must be an array");
    Subset s(n);
    for (const json& je : js) {
      if (!je.is_number_integer()) throw InvalidInput("family file: elements must be integers");
      int e = je.get<int>();
      if (e < 1 || e > n)
        throw InvalidInput("family file: element out of range: " + std::to_string(e));
      if (s.contains(e))
        throw InvalidInput("family file: repeated element: " + std::to_string(e));
      s = s.with(e);
    }
    sets.push_back(std::move(s));
  }
  try {
    return Family(n, std::move(sets));
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("family file: ") + e.what());
  }
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceLimit("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_family(ss.str());
}

void write_family_file(const Family& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceLimit("cannot write " + path);
  out << write_family(f) << "\n";
}

}  // namespace kleitman
