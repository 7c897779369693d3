#include "dagmerkle/graph.hpp"

#include <algorithm>

namespace dagmerkle {

void LabeledDigraph::add_node(const NodeId& id, std::string label) {
  auto [it, inserted] = nodes_.try_emplace(id);
  if (!inserted) {
    throw DuplicateNodeError("duplicate node id: " + id);
  }
  it->second.label = std::move(label);
}

void LabeledDigraph::add_edge(const NodeId& src, const NodeId& dst) {
  if (!has_node(src)) {
    throw UnknownNodeError("unknown edge source: " + src);
  }
  if (!has_node(dst)) {
    throw UnknownNodeError("unknown edge target: " + dst);
  }
  edges_.emplace(src, dst);
}

const NodeRecord& LabeledDigraph::node(const NodeId& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw UnknownNodeError("unknown node: " + id);
  }
  return it->second;
}

std::vector<NodeId> LabeledDigraph::successors(const NodeId& n) const {
  if (!has_node(n)) {
    throw UnknownNodeError("unknown node: " + n);
  }
  std::vector<NodeId> out;
  // Edges are sorted by (src, dst), so the out-neighbourhood of n is the
  // contiguous range with first == n and comes back already sorted.
  for (auto it = edges_.lower_bound({n, NodeId()});
       it != edges_.end() && it->first == n; ++it) {
    out.push_back(it->second);
  }
  return out;
}

LabeledDigraph LabeledDigraph::subgraph(const std::set<NodeId>& keep) const {
  LabeledDigraph sub;
  for (const NodeId& id : keep) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) {
      throw UnknownNodeError("subgraph keep-set references unknown node: " + id);
    }
    sub.nodes_.emplace(id, it->second);
  }
  // Scanning each kept node's out-range keeps this proportional to the
  // subgraph, not to the parent edge set.
  for (const NodeId& id : keep) {
    for (auto it = edges_.lower_bound({id, NodeId()});
         it != edges_.end() && it->first == id; ++it) {
      if (keep.count(it->second)) {
        sub.edges_.insert(*it);
      }
    }
  }
  return sub;
}

std::vector<NodeId> LabeledDigraph::node_ids() const {
  std::vector<NodeId> ids;
  ids.reserve(nodes_.size());
  for (const auto& [id, record] : nodes_) {
    ids.push_back(id);
  }
  return ids;
}

}  // namespace dagmerkle
