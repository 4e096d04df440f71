#include "rct/tree_io.hpp"

#include <json.hpp>

namespace rct {

using ordered_json = nlohmann::ordered_json;

std::string serialize(const CaterpillarTree& tree) {
  ordered_json doc;
  doc["m"] = tree.m();
  doc["n"] = tree.n();
  doc["leaves"] = std::vector<count_t>(tree.leaves().begin(), tree.leaves().end());
  return doc.dump();
}

namespace {

count_t integer_field(const ordered_json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw TreeFormatError(std::string("missing field \"") + key + "\"");
  if (!it->is_number_integer()) {
    throw TreeFormatError(std::string("field \"") + key + "\" must be an integer");
  }
  return it->get<count_t>();
}

}  // namespace

CaterpillarTree parse_tree(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw TreeFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw TreeFormatError("tree document must be a JSON object");

  const count_t m = integer_field(doc, "m");
  const count_t n = integer_field(doc, "n");
  auto it = doc.find("leaves");
  if (it == doc.end() || !it->is_array()) {
    throw TreeFormatError("field \"leaves\" must be an array");
  }
  std::vector<count_t> leaves;
  leaves.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_number_integer()) throw TreeFormatError("leaf counts must be integers");
    leaves.push_back(v.get<count_t>());
  }

  try {
    return CaterpillarTree(m, n, std::move(leaves));
  } catch (const DomainError& e) {
    throw TreeInvariantError(e.what());
  }
}

}  // namespace rct
