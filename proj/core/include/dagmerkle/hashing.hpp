#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dagmerkle/graph.hpp"
#include "dagmerkle/scc.hpp"

namespace dagmerkle {

/// 64 lowercase hex chars (SHA-256). Digests concatenate as text, so every
/// composite hash below is a hash over printable strings.
using Digest = std::string;

Digest sha256_hex(std::string_view data);

/// Backslash-escapes `\` and `"` and nothing else; injective into the
/// double-quoted contexts used by the hash encodings.
std::string escape(std::string_view s);

/// `[(0,1),(1,2)]` with decimal integers and no whitespace.
std::string adj_list_to_str(const std::vector<std::pair<int, int>>& adj);

/// Hash of the comma-join of the inputs sorted bytewise. Order-insensitive,
/// multiplicity-sensitive; hash_strs({}) == sha256_hex("").
Digest hash_strs(std::vector<std::string> strs);

/// Maps each element to its position. Throws DuplicateElementError.
std::map<NodeId, int> invert_list(const std::vector<NodeId>& lst);

/// Sorts orbits by the minimum canonical position among their members and
/// maps every node to its orbit's sorted index. `orbits` must partition the
/// domain of `canon_mapping`.
std::map<NodeId, int> canonical_orbits_mapping(
    const std::map<NodeId, int>& canon_mapping,
    const std::vector<std::vector<NodeId>>& orbits);

/// Results of one hashing pass. Input graphs are never mutated; every digest
/// lands here (and, for the recursive pass, in the condensation's per
/// component hash slots).
struct HashReport {
  std::map<NodeId, Digest> node_hashes;
  std::map<SccId, Digest> scc_hashes;
  std::map<NodeId, Digest> nonrec_hashes;
  Digest graph_digest;

  friend bool operator==(const HashReport&, const HashReport&) = default;
};

enum class SccHashMode {
  exact,            // hash each component subgraph verbatim
  collapse_orbits,  // hash the quotient of each component by its orbits
};

/// Node and nonrecursive digests accumulated while hashing components.
/// Component digests live in the Condensation itself.
struct SccHashState {
  std::map<NodeId, Digest> node_hashes;
  std::map<NodeId, Digest> nonrec_hashes;
};

/// Hashes one component of `cond` and, first, every component reachable from
/// it (iteratively; condensations can be 1e5 deep). Idempotent: components
/// whose hash slot is already set are skipped, and slots are written exactly
/// once. Calls on components with no ancestor/descendant relation commute.
///
/// Per member n: nonrec_hash(n) = H(`"` + escape(label(n)) + `",` +
/// hash_strs(node hashes of n's successors outside the component)). The
/// component subgraph is then canonized with nonrec_hash as the colour key;
/// scc_hash = H(`[` + nonrec hashes joined in canonical order + `],` +
/// adjacency string in canonical positions); node hash =
/// H(str(orbit index) + `,` + scc_hash). Collapse mode hashes the orbit
/// quotient instead: one nonrec hash per orbit and quotient edges (including
/// self-loops for intra-orbit edges), so rotations of a uniform cycle of any
/// length hash alike.
///
/// Throws InconsistentCondensationError when `cond` disagrees with `g`
/// (unknown component id, member missing from the graph, or a cross edge
/// absent from the condensation).
void hash_scc(const LabeledDigraph& g, Condensation& cond, SccId scc,
              SccHashState& state, SccHashMode mode = SccHashMode::exact);

/// Whole-graph canonical hash: graph_digest = H(labels_str + `,` + adjacency
/// string), both in canonical order over the full graph, with node hashes
/// H(str(orbit index) + `,` + graph_digest). Cost grows with the canonization
/// search; intended for small graphs. Equal digests coincide with isomorphism
/// as far as the canonizer distinguishes graphs (exhaustively tested at small
/// sizes). scc_hashes and nonrec_hashes are left empty.
HashReport exact_hash_graph(const LabeledDigraph& g);

/// Recursive (Merkle-style) hash over the condensation: every component is
/// hashed via hash_scc in dependency order. A node's hash depends only on
/// its label, its component, and hashes reachable from it, so unreachable
/// edits never disturb it; the price is that shared and duplicated
/// substructure become indistinguishable. graph_digest is a convenience
/// roll-up (hash_strs over all node hashes), not an isomorphism-complete
/// graph invariant.
HashReport hash_graph(const LabeledDigraph& g);

/// hash_graph with SccHashMode::collapse_orbits. graph_digest rolls up one
/// node hash per orbit per component (within a component, distinct orbits
/// have distinct node hashes, so the per-component set of node hash values
/// is exactly one value per orbit). On a DAG the output equals hash_graph's.
HashReport hash_graph_collapsed(const LabeledDigraph& g);

}  // namespace dagmerkle
