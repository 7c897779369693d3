#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dagmerkle/errors.hpp"

namespace dagmerkle {

/// Node identifiers are opaque, non-empty text tokens, ordered bytewise.
using NodeId = std::string;

/// Per-node payload. Labels are arbitrary unicode text (empty allowed).
/// The digest slots are either absent or 64-char lowercase hex; the
/// hashing passes leave caller-owned graphs untouched and report digests
/// separately, but the slots are part of the data model for callers that
/// want to store results on the graph itself.
struct NodeRecord {
  std::string label;
  std::optional<std::string> hash;
  std::optional<std::string> nonrec_hash;

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

/// A simple directed graph with text labels on nodes. Self-loops are
/// permitted, parallel edges are not. Iteration over nodes and edges is
/// deterministic: sorted by id, then by (src, dst).
///
/// Graphs are value types. They are mutable while being built and safe to
/// share read-only across threads afterwards; no operation in this library
/// mutates a graph it did not create.
class LabeledDigraph {
 public:
  using Edge = std::pair<NodeId, NodeId>;
  using EdgeSet = std::set<Edge>;
  using NodeMap = std::map<NodeId, NodeRecord>;

  /// Adds a node. Throws DuplicateNodeError if the id is taken.
  void add_node(const NodeId& id, std::string label);

  /// Adds an edge between existing nodes; adding an edge twice is a no-op.
  /// Throws UnknownNodeError if either endpoint is missing.
  void add_edge(const NodeId& src, const NodeId& dst);

  bool has_node(const NodeId& id) const { return nodes_.count(id) != 0; }
  bool has_edge(const NodeId& src, const NodeId& dst) const {
    return edges_.count({src, dst}) != 0;
  }

  /// Throws UnknownNodeError if the node is missing.
  const NodeRecord& node(const NodeId& id) const;
  const std::string& label(const NodeId& id) const { return node(id).label; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  /// Out-neighbours of n, sorted by id. Throws UnknownNodeError.
  std::vector<NodeId> successors(const NodeId& n) const;

  /// Induced subgraph: exactly the kept nodes and the edges with both
  /// endpoints kept; node records copied verbatim. Throws UnknownNodeError
  /// if `keep` holds an id not in the graph.
  LabeledDigraph subgraph(const std::set<NodeId>& keep) const;

  const NodeMap& nodes() const { return nodes_; }
  const EdgeSet& edges() const { return edges_; }

  /// All node ids in sorted order.
  std::vector<NodeId> node_ids() const;

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;

 private:
  NodeMap nodes_;
  EdgeSet edges_;
};

}  // namespace dagmerkle
