#include "unionfam/family_io.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "unionfam/errors.hpp"

namespace unionfam {

std::string family_to_jsonl(const Family& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n;
  j["k"] = f.k;
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (Mask m : f.masks) sets.push_back(mask_elements(m));
  j["sets"] = std::move(sets);
  return j.dump();
}

Family family_from_jsonl(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw BadParameters(std::string("family record is not valid JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("k") || !j.contains("sets"))
    throw BadParameters("family record needs fields n, k, sets");
  int n = j.at("n").get<int>();
  int k = j.at("k").get<int>();
  std::vector<std::vector<int>> sets = j.at("sets").get<std::vector<std::vector<int>>>();
  return make_family(n, k, sets);
}

std::vector<Family> read_families(std::istream& in) {
  std::vector<Family> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    // Provenance records emitted by the CLI are interleaved with family
    // records; skip them.
    if (line.find("\"provenance\"") != std::string::npos) {
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (!j.is_discarded() && j.contains("provenance")) continue;
    }
    out.push_back(family_from_jsonl(line));
  }
  return out;
}

void write_families(std::ostream& out, const std::vector<Family>& fams) {
  for (const Family& f : fams) out << family_to_jsonl(f) << "\n";
}

}  // namespace unionfam
