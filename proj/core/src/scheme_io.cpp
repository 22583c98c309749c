#include "sculpt/scheme_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sculpt {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSchemeVersion = 1;

std::string kind_name(ModeKind kind) {
  return kind == ModeKind::Qubit ? "qubit" : "ancilla";
}

ModeKind kind_from_name(const std::string& name) {
  if (name == "qubit") return ModeKind::Qubit;
  if (name == "ancilla") return ModeKind::Ancilla;
  throw std::invalid_argument("unknown mode kind: '" + name + "'");
}

ordered_json amplitude_to_json(const ExactScalar& value) {
  return ordered_json{{"p", value.p_string()},
                      {"q", value.q_string()},
                      {"r", value.r_string()},
                      {"s", value.s_string()}};
}

ExactScalar amplitude_from_json(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("amplitude must be an object");
  for (const char* key : {"p", "q", "r", "s"}) {
    if (!j.contains(key) || !j.at(key).is_string()) {
      throw std::invalid_argument(std::string("amplitude is missing string field '") + key +
                                  "'");
    }
  }
  return ExactScalar::from_strings(j.at("p").get<std::string>(), j.at("q").get<std::string>(),
                                   j.at("r").get<std::string>(), j.at("s").get<std::string>());
}

}  // namespace

std::string write_scheme(const SculptingDigraph& g) {
  std::vector<ModeId> modes = g.vertices();
  std::sort(modes.begin(), modes.end(),
            [](const ModeId& a, const ModeId& b) { return a.label < b.label; });

  ordered_json doc;
  doc["version"] = kSchemeVersion;
  doc["modes"] = ordered_json::array();
  for (const auto& mode : modes) {
    doc["modes"].push_back(ordered_json{{"label", mode.label}, {"kind", kind_name(mode.kind)}});
  }
  doc["edges"] = ordered_json::array();
  for (const auto& edge : g.canonical_edges()) {
    auto symbol = edge.state.symbol();
    if (!symbol) {
      throw std::invalid_argument("edge " + edge.source + " -> " + edge.target +
                                  " carries a non-canonical internal state");
    }
    doc["edges"].push_back(ordered_json{{"source", edge.source},
                                        {"target", edge.target},
                                        {"state", std::string(1, *symbol)},
                                        {"amplitude", amplitude_to_json(edge.amplitude)}});
  }
  return doc.dump(2) + "\n";
}

SculptingDigraph read_scheme(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("scheme is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("scheme document must be an object");
  if (!doc.contains("version") || !doc.at("version").is_number_integer() ||
      doc.at("version").get<int>() != kSchemeVersion) {
    throw std::invalid_argument("unsupported scheme version");
  }
  if (!doc.contains("modes") || !doc.at("modes").is_array() || !doc.contains("edges") ||
      !doc.at("edges").is_array()) {
    throw std::invalid_argument("scheme needs 'modes' and 'edges' arrays");
  }

  SculptingDigraph g;
  for (const auto& mode : doc.at("modes")) {
    if (!mode.is_object() || !mode.contains("label") || !mode.at("label").is_string() ||
        !mode.contains("kind") || !mode.at("kind").is_string()) {
      throw std::invalid_argument("each mode needs string 'label' and 'kind'");
    }
    g.add_vertex(ModeId{mode.at("label").get<std::string>(),
                        kind_from_name(mode.at("kind").get<std::string>())});
  }
  for (const auto& edge : doc.at("edges")) {
    if (!edge.is_object() || !edge.contains("source") || !edge.at("source").is_string() ||
        !edge.contains("target") || !edge.at("target").is_string() ||
        !edge.contains("state") || !edge.at("state").is_string() ||
        !edge.contains("amplitude")) {
      throw std::invalid_argument("each edge needs 'source', 'target', 'state', 'amplitude'");
    }
    const std::string state = edge.at("state").get<std::string>();
    if (state.size() != 1) {
      throw std::invalid_argument("edge state must be one of '+', '-', '0', '1'");
    }
    g.add_edge(DigraphEdge{edge.at("source").get<std::string>(),
                           edge.at("target").get<std::string>(),
                           amplitude_from_json(edge.at("amplitude")),
                           InternalState::from_symbol(state[0])});
  }
  return g;
}

void save_scheme(const SculptingDigraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << write_scheme(g);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

SculptingDigraph load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_scheme(buffer.str());
}

}  // namespace sculpt
