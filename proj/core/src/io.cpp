#include "colred/io.hpp"

#include <sstream>

#include "colred/construction.hpp"
#include "json.hpp"

namespace colred {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.what() carries "at line L, column C".
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

const json& field(const json& doc, const std::string& name, const std::string& where = "") {
  if (!doc.is_object() || !doc.contains(name)) {
    throw FormatError("missing field '" + where + name + "'");
  }
  return doc.at(name);
}

int int_field(const json& doc, const std::string& name, const std::string& where = "") {
  const json& value = field(doc, name, where);
  if (!value.is_number_integer()) {
    throw FormatError("field '" + where + name + "' must be an integer");
  }
  return value.get<int>();
}

BigInt big_field(const json& doc, const std::string& name) {
  const json& value = field(doc, name);
  try {
    if (value.is_string()) {
      return parse_big(value.get<std::string>());
    }
    if (value.is_number_unsigned() || value.is_number_integer()) {
      return BigInt(value.get<std::int64_t>());
    }
  } catch (const std::invalid_argument& e) {
    throw FormatError("field '" + name + "': " + e.what());
  }
  throw FormatError("field '" + name + "' must be a decimal string");
}

json family_to_json(const Family& family) {
  json out = json::array();
  for (Subset s : family.subsets()) {
    out.push_back(s.colours());
  }
  return out;
}

Family family_from_json(const json& doc, int c, const std::string& where) {
  if (!doc.is_array()) {
    throw FormatError(where + ": family must be an array of subsets");
  }
  std::vector<Subset> subsets;
  for (std::size_t j = 0; j < doc.size(); ++j) {
    const std::string at = where + "[" + std::to_string(j) + "]";
    const json& sub = doc[j];
    if (!sub.is_array()) {
      throw FormatError(at + ": subset must be an array of colours");
    }
    if (sub.empty()) {
      throw FormatError(at + ": empty subset");
    }
    std::uint32_t mask = 0;
    for (const json& colour : sub) {
      if (!colour.is_number_integer() || colour.get<int>() < 1 || colour.get<int>() > c) {
        throw FormatError(at + ": colour " + colour.dump() + " outside [1, " + std::to_string(c) + "]");
      }
      mask |= std::uint32_t{1} << (colour.get<int>() - 1);
    }
    subsets.emplace_back(mask);
  }
  if (subsets.empty()) {
    throw FormatError(where + ": empty family");
  }
  return Family(std::move(subsets));
}

json collection_to_json(const Collection& collection) {
  if (collection.construction() != nullptr) {
    return {{"c", collection.c()}, {"rule", "construct"}, {"k", to_decimal(collection.size())}};
  }
  json families = json::array();
  for (const Family& family : collection.families()) {
    families.push_back(family_to_json(family));
  }
  return {{"c", collection.c()}, {"k", collection.families().size()}, {"families", std::move(families)}};
}

Collection collection_from_json(const json& doc) {
  const int c = int_field(doc, "c");
  if (c < 1 || c > kMaxPalette) {
    throw FormatError("field 'c' outside [1, " + std::to_string(kMaxPalette) + "]");
  }
  if (doc.contains("rule")) {
    if (doc.at("rule") != "construct") {
      throw FormatError("field 'rule': unknown rule " + doc.at("rule").dump());
    }
    try {
      return construct(c);
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("field 'c': ") + e.what());
    }
  }
  const json& list = field(doc, "families");
  if (!list.is_array()) {
    throw FormatError("field 'families' must be an array");
  }
  std::vector<Family> families;
  for (std::size_t i = 0; i < list.size(); ++i) {
    families.push_back(family_from_json(list[i], c, "families[" + std::to_string(i) + "]"));
  }
  if (doc.contains("k") && (!doc.at("k").is_number_integer() || doc.at("k").get<std::size_t>() != families.size())) {
    throw FormatError("field 'k' does not match the number of families (" + std::to_string(families.size()) + ")");
  }
  return Collection::from_families(c, std::move(families));
}

}  // namespace

std::string save_collection(const Collection& collection) { return collection_to_json(collection).dump(1) + "\n"; }

Collection load_collection(std::string_view text) { return collection_from_json(parse(text)); }

std::string save_table(const AlgorithmTable& table) {
  json entries = json::array();
  for (const auto& e : table.entries()) {
    entries.push_back({e.x, e.y, e.z, e.colour});
  }
  std::ostringstream out;
  // One entry per line keeps tables diffable.
  out << "{\n \"k\": " << table.k() << ",\n \"c\": " << table.c() << ",\n \"entries\": [\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << "  " << entries[i].dump() << (i + 1 < entries.size() ? ",\n" : "\n");
  }
  out << " ]\n}\n";
  return out.str();
}

AlgorithmTable load_table(std::string_view text) {
  const json doc = parse(text);
  const int k = int_field(doc, "k");
  const int c = int_field(doc, "c");
  const json& list = field(doc, "entries");
  if (!list.is_array()) {
    throw FormatError("field 'entries' must be an array");
  }
  std::vector<AlgorithmTable::Entry> entries;
  entries.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& e = list[i];
    if (!e.is_array() || e.size() != 4 ||
        !std::all_of(e.begin(), e.end(), [](const json& v) { return v.is_number_integer(); })) {
      throw FormatError("entries[" + std::to_string(i) + "]: expected [x, y, z, colour]");
    }
    entries.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
  }
  try {
    return AlgorithmTable::from_entries(k, c, entries);
  } catch (const std::logic_error& e) {
    throw FormatError(std::string("entries: ") + e.what());
  }
}

std::string save_graph(const ColouredGraph& graph) {
  json colours = json::array();
  for (const Colour& colour : graph.colours) {
    colours.push_back(to_decimal(colour));
  }
  json doc = {{"topology", to_string(graph.topology)},
              {"k", to_decimal(graph.k)},
              {"colours", std::move(colours)},
              {"oriented", graph.oriented}};
  return doc.dump(1) + "\n";
}

ColouredGraph load_graph(std::string_view text) {
  const json doc = parse(text);
  ColouredGraph graph;
  const json& topology = field(doc, "topology");
  try {
    graph.topology = parse_topology(topology.is_string() ? topology.get<std::string>() : topology.dump());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("field 'topology': ") + e.what());
  }
  graph.k = big_field(doc, "k");
  const json& colours = field(doc, "colours");
  if (!colours.is_array()) {
    throw FormatError("field 'colours' must be an array");
  }
  for (std::size_t i = 0; i < colours.size(); ++i) {
    if (!colours[i].is_string()) {
      throw FormatError("colours[" + std::to_string(i) + "] must be a decimal string");
    }
    try {
      graph.colours.push_back(parse_big(colours[i].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw FormatError("colours[" + std::to_string(i) + "]: " + e.what());
    }
  }
  if (doc.contains("oriented")) {
    if (!doc.at("oriented").is_boolean()) {
      throw FormatError("field 'oriented' must be a boolean");
    }
    graph.oriented = doc.at("oriented").get<bool>();
  }
  return graph;
}

std::string save_trace(const ChainTrace& trace) {
  std::ostringstream out;
  for (const RoundRecord& record : trace) {
    json doc = {{"stage", record.stage},
                {"k_in", to_decimal(record.k_in)},
                {"k_out", to_decimal(record.k_out)},
                {"digest", record.digest}};
    if (!record.snapshot.empty()) {
      json colours = json::array();
      for (const Colour& colour : record.snapshot) {
        colours.push_back(to_decimal(colour));
      }
      doc["colours"] = std::move(colours);
    }
    out << doc.dump() << '\n';
  }
  return out.str();
}

std::string save_search_result(const SearchResult& result) {
  json doc = {{"c", result.c},
              {"best_size", result.best_size},
              {"exhaustive", result.exhaustive},
              {"maximal_only", result.maximal_only},
              {"nodes", result.nodes},
              {"witness", result.witness ? collection_to_json(*result.witness) : json(nullptr)}};
  return doc.dump(1) + "\n";
}

SearchResult load_search_result(std::string_view text) {
  const json doc = parse(text);
  SearchResult result;
  result.c = int_field(doc, "c");
  result.best_size = int_field(doc, "best_size");
  const json& exhaustive = field(doc, "exhaustive");
  if (!exhaustive.is_boolean()) {
    throw FormatError("field 'exhaustive' must be a boolean");
  }
  result.exhaustive = exhaustive.get<bool>();
  if (doc.contains("maximal_only")) {
    result.maximal_only = doc.at("maximal_only").is_boolean() && doc.at("maximal_only").get<bool>();
  }
  if (doc.contains("nodes")) {
    result.nodes = doc.at("nodes").get<std::uint64_t>();
  }
  if (doc.contains("witness") && !doc.at("witness").is_null()) {
    result.witness = collection_from_json(doc.at("witness"));
  }
  return result;
}

bool looks_like_table(std::string_view text) {
  const json doc = parse(text);
  return doc.is_object() && doc.contains("entries");
}

}  // namespace colred
