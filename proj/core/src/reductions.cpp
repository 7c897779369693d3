#include "dagmerkle/reductions.hpp"

#include <algorithm>

#include "dagmerkle/hashing.hpp"

namespace dagmerkle {

LabeledDigraph encode_edge_labels(const EdgeLabeledDigraph& g) {
  LabeledDigraph out;
  for (const auto& [id, label] : g.nodes) {
    out.add_node(id, "N:" + escape(label));
  }

  // Parallel edges are sorted by label so the ordinal in the generated id
  // is deterministic; the ids themselves never reach a digest.
  std::map<std::pair<NodeId, NodeId>, std::vector<std::string>> grouped;
  for (const auto& [src, dst, label] : g.edges) {
    grouped[{src, dst}].push_back(label);
  }
  for (auto& [endpoints, labels] : grouped) {
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      NodeId mid = endpoints.first + "|" + endpoints.second + "|" +
                   std::to_string(i);
      while (out.has_node(mid)) {
        mid += "|";  // sidestep an original id of the same shape
      }
      out.add_node(mid, "E:" + escape(labels[i]));
      out.add_edge(endpoints.first, mid);
      out.add_edge(mid, endpoints.second);
    }
  }
  return out;
}

LabeledDigraph encode_undirected(const UndirectedGraph& g) {
  LabeledDigraph out;
  for (const auto& [id, label] : g.nodes) {
    out.add_node(id, "N:" + escape(label));
  }
  for (const auto& [u, v] : g.edges) {
    out.add_edge(u, v);
    out.add_edge(v, u);
  }
  return out;
}

}  // namespace dagmerkle
