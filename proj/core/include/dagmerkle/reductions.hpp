#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dagmerkle/graph.hpp"

namespace dagmerkle {

/// Directed graph with text labels on nodes and edges. The edge list may
/// contain duplicates (parallel edges); its order carries no meaning and
/// must not influence any digest computed from the encoding.
struct EdgeLabeledDigraph {
  std::map<NodeId, std::string> nodes;  // id -> label
  std::vector<std::tuple<NodeId, NodeId, std::string>> edges;
};

/// Undirected graph with text labels on nodes. Edges are stored with the
/// smaller endpoint first.
struct UndirectedGraph {
  std::map<NodeId, std::string> nodes;  // id -> label
  std::set<std::pair<NodeId, NodeId>> edges;

  void add_edge(const NodeId& u, const NodeId& v) {
    edges.insert(u <= v ? std::make_pair(u, v) : std::make_pair(v, u));
  }
};

/// Encodes an edge-labeled multigraph as a node-labeled simple digraph:
/// every original node keeps its id with label "N:" + escape(label), and
/// every edge (s, t, l) — each parallel copy separately — becomes a fresh
/// intermediate node labeled "E:" + escape(l) with edges s -> mid -> t.
/// No direct s -> t edges remain. A plain multigraph is the special case
/// where all edge labels are empty.
LabeledDigraph encode_edge_labels(const EdgeLabeledDigraph& g);

/// Encodes an undirected graph as a digraph: each unordered edge {u, v}
/// becomes the pair (u, v), (v, u); node labels are carried over with the
/// "N:" tag. Any connected component of two or more nodes collapses into
/// a single strongly connected component, so recursive hashing degenerates
/// to exact hashing there; the encoding exists for completeness.
LabeledDigraph encode_undirected(const UndirectedGraph& g);

}  // namespace dagmerkle
