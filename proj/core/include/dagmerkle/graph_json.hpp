#pragma once

#include <string>

#include "dagmerkle/graph.hpp"
#include "dagmerkle/reductions.hpp"

namespace dagmerkle {

/// Parses the plain graph wire format:
///   {"nodes":[{"id":"a","label":"a"},...],"edges":[["a","b"],...]}
/// A missing "label" means the empty label. Repeated edges are collapsed.
/// Throws ParseError on malformed JSON or schema violations; node errors
/// (duplicate id, unknown edge endpoint) propagate from the graph builder.
LabeledDigraph parse_graph_json(const std::string& text);

/// Serializes to the plain wire format, bit-exact: nodes sorted by id,
/// edges sorted by (src, dst), no whitespace, keys in schema order.
std::string serialize_graph_json(const LabeledDigraph& g);

/// Extended format where edge entries are ["src","dst","label"]; a
/// two-element entry means the empty edge label. Duplicate entries are
/// kept as parallel edges.
EdgeLabeledDigraph parse_edge_labeled_json(const std::string& text);

/// Plain format read as an undirected graph: edge entries are unordered
/// pairs, and mirrored or repeated entries collapse.
UndirectedGraph parse_undirected_json(const std::string& text);

}  // namespace dagmerkle
