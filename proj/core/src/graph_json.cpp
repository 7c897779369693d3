#include "dagmerkle/graph_json.hpp"

#include <nlohmann/json.hpp>

namespace dagmerkle {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError("input is not valid JSON");
  }
  if (!doc.is_object()) {
    throw ParseError("top-level JSON value must be an object");
  }
  return doc;
}

const json& require_array(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array()) {
    throw ParseError(std::string("missing or non-array \"") + key + "\" field");
  }
  return *it;
}

std::string require_string(const json& value, const char* what) {
  if (!value.is_string()) {
    throw ParseError(std::string(what) + " must be a string");
  }
  return value.get<std::string>();
}

struct NodeEntry {
  NodeId id;
  std::string label;
};

NodeEntry parse_node(const json& entry) {
  if (!entry.is_object()) {
    throw ParseError("node entries must be objects");
  }
  auto id_it = entry.find("id");
  if (id_it == entry.end()) {
    throw ParseError("node entry without \"id\"");
  }
  NodeEntry node;
  node.id = require_string(*id_it, "node id");
  if (node.id.empty()) {
    throw ParseError("node id must be non-empty");
  }
  if (auto label_it = entry.find("label"); label_it != entry.end()) {
    node.label = require_string(*label_it, "node label");
  }
  return node;
}

}  // namespace

LabeledDigraph parse_graph_json(const std::string& text) {
  const json doc = parse_document(text);
  LabeledDigraph g;
  for (const json& entry : require_array(doc, "nodes")) {
    NodeEntry node = parse_node(entry);
    g.add_node(node.id, std::move(node.label));
  }
  for (const json& entry : require_array(doc, "edges")) {
    if (!entry.is_array() || entry.size() != 2) {
      throw ParseError("edge entries must be [src, dst] pairs");
    }
    g.add_edge(require_string(entry[0], "edge source"),
               require_string(entry[1], "edge target"));
  }
  return g;
}

std::string serialize_graph_json(const LabeledDigraph& g) {
  ordered_json doc;
  ordered_json nodes = ordered_json::array();
  for (const auto& [id, record] : g.nodes()) {
    ordered_json entry;
    entry["id"] = id;
    entry["label"] = record.label;
    nodes.push_back(std::move(entry));
  }
  doc["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& [src, dst] : g.edges()) {
    edges.push_back(ordered_json::array({src, dst}));
  }
  doc["edges"] = std::move(edges);
  return doc.dump();
}

EdgeLabeledDigraph parse_edge_labeled_json(const std::string& text) {
  const json doc = parse_document(text);
  EdgeLabeledDigraph g;
  for (const json& entry : require_array(doc, "nodes")) {
    NodeEntry node = parse_node(entry);
    if (!g.nodes.emplace(node.id, std::move(node.label)).second) {
      throw DuplicateNodeError("duplicate node id: " + node.id);
    }
  }
  for (const json& entry : require_array(doc, "edges")) {
    if (!entry.is_array() || entry.size() < 2 || entry.size() > 3) {
      throw ParseError("edge entries must be [src, dst] or [src, dst, label]");
    }
    NodeId src = require_string(entry[0], "edge source");
    NodeId dst = require_string(entry[1], "edge target");
    std::string label =
        entry.size() == 3 ? require_string(entry[2], "edge label") : "";
    if (!g.nodes.count(src)) {
      throw UnknownNodeError("unknown edge source: " + src);
    }
    if (!g.nodes.count(dst)) {
      throw UnknownNodeError("unknown edge target: " + dst);
    }
    g.edges.emplace_back(std::move(src), std::move(dst), std::move(label));
  }
  return g;
}

UndirectedGraph parse_undirected_json(const std::string& text) {
  const json doc = parse_document(text);
  UndirectedGraph g;
  for (const json& entry : require_array(doc, "nodes")) {
    NodeEntry node = parse_node(entry);
    if (!g.nodes.emplace(node.id, std::move(node.label)).second) {
      throw DuplicateNodeError("duplicate node id: " + node.id);
    }
  }
  for (const json& entry : require_array(doc, "edges")) {
    if (!entry.is_array() || entry.size() != 2) {
      throw ParseError("edge entries must be [u, v] pairs");
    }
    NodeId u = require_string(entry[0], "edge endpoint");
    NodeId v = require_string(entry[1], "edge endpoint");
    if (!g.nodes.count(u)) {
      throw UnknownNodeError("unknown edge endpoint: " + u);
    }
    if (!g.nodes.count(v)) {
      throw UnknownNodeError("unknown edge endpoint: " + v);
    }
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace dagmerkle
