#pragma once

#include <map>
#include <string>
#include <vector>

#include "dagmerkle/graph.hpp"

namespace dagmerkle {

/// An ordered partition of the vertex set into colour classes; the class
/// index is the colour. Class order is significant: refinement and
/// canonization derive every tie break from it, and refinement only ever
/// splits classes, never merges or reorders them.
struct Coloring {
  std::vector<std::vector<NodeId>> classes;  // each class sorted by id

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Groups vertices by equal label text; classes ordered by label bytes.
/// This is the colouring the hashing layers feed to canonize, so colour
/// order is a graph invariant rather than an insertion artifact.
Coloring label_coloring(const LabeledDigraph& g);

/// An ordered partition drawn from an arbitrary text key per vertex:
/// classes grouped by equal key, ordered by key bytes.
Coloring coloring_from_keys(const std::map<NodeId, std::string>& keys);

/// Coarsest equitable refinement of `initial`: afterwards, all vertices in
/// a class have equal counts of out-neighbours and in-neighbours into
/// every class. The result's class order is derived deterministically from
/// the parent order and the split keys. Idempotent.
Coloring refine(const LabeledDigraph& g, const Coloring& initial);

/// Canonical labeling plus the symmetry structure discovered on the way.
struct CanonicalForm {
  /// Position = canonical label. Two colour-isomorphic graphs produce the
  /// same canonical adjacency matrix and the same canonical label sequence
  /// when vertices are read in this order.
  std::vector<NodeId> order;

  /// Orbits of the colour-preserving automorphism group, ordered by the
  /// minimum canonical position among members; members sorted by id.
  std::vector<std::vector<NodeId>> orbits;

  /// Colour-preserving permutations mapping the edge set onto itself.
  /// Every orbit is the closure of the generators; rigid graphs have none.
  std::vector<std::map<NodeId, NodeId>> automorphism_generators;
};

/// Individualization-refinement canonization of a coloured digraph.
/// `colors` must partition the vertex set with no empty class. Exponential
/// in the worst case; colour refinement keeps typical inputs polynomial.
CanonicalForm canonize(const LabeledDigraph& g, const Coloring& colors);

/// The orbit partition alone (projection of canonize).
std::vector<std::vector<NodeId>> orbits(const LabeledDigraph& g,
                                        const Coloring& colors);

/// Exhaustive label-preserving isomorphism test: true iff some bijection
/// maps node labels and the edge set of g1 exactly onto g2. Factorial
/// search, restricted to graphs of at most 8 vertices; throws
/// TooLargeError beyond that.
bool brute_force_check(const LabeledDigraph& g1, const LabeledDigraph& g2);

}  // namespace dagmerkle
