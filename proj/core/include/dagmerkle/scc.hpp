#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dagmerkle/graph.hpp"

namespace dagmerkle {

/// Dense component index within a Condensation, 0..m-1. Ids are assigned
/// by sorting the component member sets on their minimum node id, so they
/// are stable for a fixed input graph. They never feed any digest.
using SccId = int;

/// The acyclic graph obtained by contracting each strongly connected
/// component to a single node. Member sets partition the vertex set; an
/// edge (A, B) exists iff A != B and some original edge crosses from A
/// into B. The per-component hash slot starts empty and is filled by the
/// recursive hashing passes.
struct Condensation {
  struct Component {
    std::set<NodeId> members;
    std::optional<std::string> hash;
  };

  std::vector<Component> components;  // index = SccId
  std::map<NodeId, SccId> component_of;
  std::set<std::pair<SccId, SccId>> edges;

  std::size_t size() const { return components.size(); }

  /// Successor component ids, sorted ascending.
  std::vector<SccId> successors(SccId id) const;
};

/// Maximal mutually-reachable vertex sets, one per component, ordered by
/// minimum member id. Every vertex appears in exactly one set.
std::vector<std::set<NodeId>> strongly_connected_components(
    const LabeledDigraph& g);

Condensation condensation(const LabeledDigraph& g);

}  // namespace dagmerkle
