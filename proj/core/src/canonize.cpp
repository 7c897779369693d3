#include "dagmerkle/canonize.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>

namespace dagmerkle {

namespace {

// Vertices are re-indexed 0..n-1 in sorted-id order for the duration of a
// search; all outputs are translated back before returning.
struct IndexedGraph {
  int n = 0;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};

IndexedGraph index_graph(const LabeledDigraph& g, const std::vector<NodeId>& ids,
                         const std::map<NodeId, int>& index_of) {
  IndexedGraph ig;
  ig.n = static_cast<int>(ids.size());
  ig.out.resize(ig.n);
  ig.in.resize(ig.n);
  for (const auto& [src, dst] : g.edges()) {
    const int s = index_of.at(src);
    const int t = index_of.at(dst);
    ig.out[s].push_back(t);
    ig.in[t].push_back(s);
  }
  return ig;
}

using Partition = std::vector<std::vector<int>>;

bool is_discrete(const Partition& p) {
  return std::all_of(p.begin(), p.end(),
                     [](const auto& cls) { return cls.size() == 1; });
}

// One refinement sweep splits every class by the per-vertex profile of
// out/in edge counts into each current class; parts replace their parent
// in ascending profile order, so the resulting class order depends only on
// the parent order and the split keys. Sweeps repeat to the fixpoint,
// which is the coarsest equitable refinement.
Partition refine_partition(const IndexedGraph& g, Partition classes) {
  using Profile = std::vector<std::tuple<int, int, int>>;  // (class, out, in)
  std::vector<int> class_of(g.n);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (int v : classes[c]) {
        class_of[v] = static_cast<int>(c);
      }
    }
    Partition next;
    next.reserve(classes.size());
    for (const auto& cls : classes) {
      if (cls.size() == 1) {
        next.push_back(cls);
        continue;
      }
      std::map<Profile, std::vector<int>> parts;
      for (int v : cls) {
        std::map<int, std::pair<int, int>> counts;
        for (int w : g.out[v]) {
          counts[class_of[w]].first++;
        }
        for (int w : g.in[v]) {
          counts[class_of[w]].second++;
        }
        Profile profile;
        profile.reserve(counts.size());
        for (const auto& [cls_idx, io] : counts) {
          profile.emplace_back(cls_idx, io.first, io.second);
        }
        parts[std::move(profile)].push_back(v);
      }
      if (parts.size() > 1) {
        changed = true;
      }
      for (auto& [profile, members] : parts) {
        next.push_back(std::move(members));
      }
    }
    classes = std::move(next);
  }
  return classes;
}

Partition individualize(const Partition& p, std::size_t class_idx, int v) {
  Partition q;
  q.reserve(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != class_idx) {
      q.push_back(p[i]);
      continue;
    }
    q.push_back({v});
    std::vector<int> rest;
    rest.reserve(p[i].size() - 1);
    for (int w : p[i]) {
      if (w != v) {
        rest.push_back(w);
      }
    }
    q.push_back(std::move(rest));
  }
  return q;
}

// Leaf encodings order as (adjacency bitstring, colour sequence), both in
// canonical position order. Adjacency bits are packed MSB-first so that
// word-wise comparison equals bitstring comparison.
struct LeafEncoding {
  std::vector<std::uint64_t> adj_bits;
  std::vector<int> color_seq;

  friend auto operator<=>(const LeafEncoding&, const LeafEncoding&) = default;
};

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct SearchState {
  const IndexedGraph& g;
  std::vector<int> initial_color;  // root colour class per vertex
  bool prune_by_orbits = false;

  std::optional<LeafEncoding> best;
  std::vector<int> best_order;
  std::map<LeafEncoding, std::vector<int>> first_leaf_by_encoding;
  std::vector<std::vector<int>> generators;  // generator[v] = image of v
  UnionFind orbit_sets;

  SearchState(const IndexedGraph& graph, std::vector<int> colors, bool prune)
      : g(graph),
        initial_color(std::move(colors)),
        prune_by_orbits(prune),
        orbit_sets(graph.n) {}
};

LeafEncoding encode_leaf(const SearchState& s, const std::vector<int>& order) {
  const int n = s.g.n;
  LeafEncoding enc;
  enc.adj_bits.assign((static_cast<std::size_t>(n) * n + 63) / 64, 0);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) {
    position[order[i]] = i;
  }
  for (int i = 0; i < n; ++i) {
    for (int w : s.g.out[order[i]]) {
      const std::size_t bit = static_cast<std::size_t>(i) * n + position[w];
      enc.adj_bits[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
    }
  }
  enc.color_seq.resize(n);
  for (int i = 0; i < n; ++i) {
    enc.color_seq[i] = s.initial_color[order[i]];
  }
  return enc;
}

void visit_leaf(SearchState& s, const Partition& p) {
  std::vector<int> order;
  order.reserve(p.size());
  for (const auto& cls : p) {
    order.push_back(cls.front());
  }
  LeafEncoding enc = encode_leaf(s, order);

  auto [it, inserted] = s.first_leaf_by_encoding.try_emplace(enc, order);
  if (!inserted) {
    // Two orderings with identical encodings induce a colour-preserving
    // automorphism mapping the first leaf onto this one.
    const std::vector<int>& first = it->second;
    std::vector<int> perm(s.g.n);
    bool is_identity = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      perm[first[i]] = order[i];
      is_identity = is_identity && first[i] == order[i];
    }
    if (!is_identity) {
      for (int v = 0; v < s.g.n; ++v) {
        s.orbit_sets.unite(v, perm[v]);
      }
      s.generators.push_back(std::move(perm));
    }
  }

  if (!s.best || enc < *s.best) {
    s.best = std::move(enc);
    s.best_order = std::move(order);
  }
}

void descend(SearchState& s, const Partition& p) {
  std::size_t target = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].size() > 1) {
      target = i;
      break;
    }
  }
  if (target == p.size()) {
    visit_leaf(s, p);
    return;
  }
  // Branch on every member of the first non-singleton class. When orbit
  // pruning is on, a candidate already known to share an orbit with an
  // earlier branch leads only to automorphic images of leaves explored
  // there, so it cannot change the minimum encoding.
  std::vector<int> branched;
  for (int v : p[target]) {
    if (s.prune_by_orbits) {
      const int rep = s.orbit_sets.find(v);
      bool redundant = false;
      for (int u : branched) {
        if (s.orbit_sets.find(u) == rep) {
          redundant = true;
          break;
        }
      }
      if (redundant) {
        continue;
      }
    }
    branched.push_back(v);
    descend(s, refine_partition(s.g, individualize(p, target, v)));
  }
}

// Below this vertex count the search keeps every leaf so that the
// discovered generators span the full automorphism group; above it,
// orbit pruning trades that completeness for speed while leaving the
// canonical (minimum) encoding unchanged.
constexpr int kExhaustiveSearchLimit = 6;

void validate_coloring(const LabeledDigraph& g, const Coloring& colors) {
  std::size_t covered = 0;
  std::set<NodeId> seen;
  for (const auto& cls : colors.classes) {
    if (cls.empty()) {
      throw std::invalid_argument("coloring contains an empty class");
    }
    for (const NodeId& id : cls) {
      if (!g.has_node(id)) {
        throw UnknownNodeError("coloring references unknown node: " + id);
      }
      if (!seen.insert(id).second) {
        throw std::invalid_argument("coloring repeats node: " + id);
      }
      ++covered;
    }
  }
  if (covered != g.node_count()) {
    throw std::invalid_argument("coloring does not cover the vertex set");
  }
}

}  // namespace

Coloring coloring_from_keys(const std::map<NodeId, std::string>& keys) {
  std::map<std::string, std::vector<NodeId>> by_key;
  for (const auto& [id, key] : keys) {
    by_key[key].push_back(id);  // ids arrive sorted from the map
  }
  Coloring colors;
  colors.classes.reserve(by_key.size());
  for (auto& [key, members] : by_key) {
    colors.classes.push_back(std::move(members));
  }
  return colors;
}

Coloring label_coloring(const LabeledDigraph& g) {
  std::map<NodeId, std::string> keys;
  for (const auto& [id, record] : g.nodes()) {
    keys.emplace(id, record.label);
  }
  return coloring_from_keys(keys);
}

Coloring refine(const LabeledDigraph& g, const Coloring& initial) {
  validate_coloring(g, initial);
  const std::vector<NodeId> ids = g.node_ids();
  std::map<NodeId, int> index_of;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
    index_of.emplace(ids[i], i);
  }
  const IndexedGraph ig = index_graph(g, ids, index_of);

  Partition root;
  root.reserve(initial.classes.size());
  for (const auto& cls : initial.classes) {
    std::vector<int> indices;
    indices.reserve(cls.size());
    for (const NodeId& id : cls) {
      indices.push_back(index_of.at(id));
    }
    std::sort(indices.begin(), indices.end());
    root.push_back(std::move(indices));
  }

  Partition refined = refine_partition(ig, std::move(root));

  Coloring result;
  result.classes.reserve(refined.size());
  for (const auto& cls : refined) {
    std::vector<NodeId> members;
    members.reserve(cls.size());
    for (int v : cls) {
      members.push_back(ids[v]);
    }
    result.classes.push_back(std::move(members));
  }
  return result;
}

CanonicalForm canonize(const LabeledDigraph& g, const Coloring& colors) {
  validate_coloring(g, colors);
  const std::vector<NodeId> ids = g.node_ids();
  const int n = static_cast<int>(ids.size());
  std::map<NodeId, int> index_of;
  for (int i = 0; i < n; ++i) {
    index_of.emplace(ids[i], i);
  }
  const IndexedGraph ig = index_graph(g, ids, index_of);

  Partition root;
  root.reserve(colors.classes.size());
  std::vector<int> initial_color(n, 0);
  for (std::size_t c = 0; c < colors.classes.size(); ++c) {
    std::vector<int> indices;
    indices.reserve(colors.classes[c].size());
    for (const NodeId& id : colors.classes[c]) {
      const int v = index_of.at(id);
      initial_color[v] = static_cast<int>(c);
      indices.push_back(v);
    }
    std::sort(indices.begin(), indices.end());
    root.push_back(std::move(indices));
  }

  SearchState state(ig, std::move(initial_color), n > kExhaustiveSearchLimit);
  descend(state, refine_partition(ig, std::move(root)));

  CanonicalForm form;
  form.order.reserve(n);
  std::vector<int> position(n, 0);
  for (int i = 0; i < n; ++i) {
    form.order.push_back(ids[state.best_order[i]]);
    position[state.best_order[i]] = i;
  }

  // Orbits are the union-find closure of the discovered generators,
  // ordered by the minimum canonical position among their members.
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) {
    by_root[state.orbit_sets.find(v)].push_back(v);
  }
  std::vector<std::pair<int, std::vector<int>>> keyed;
  keyed.reserve(by_root.size());
  for (auto& [root_v, members] : by_root) {
    int min_pos = n;
    for (int v : members) {
      min_pos = std::min(min_pos, position[v]);
    }
    keyed.emplace_back(min_pos, std::move(members));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  form.orbits.reserve(keyed.size());
  for (auto& [min_pos, members] : keyed) {
    std::vector<NodeId> orbit;
    orbit.reserve(members.size());
    for (int v : members) {
      orbit.push_back(ids[v]);  // ascending index = ascending id
    }
    form.orbits.push_back(std::move(orbit));
  }

  form.automorphism_generators.reserve(state.generators.size());
  for (const auto& perm : state.generators) {
    std::map<NodeId, NodeId> mapping;
    for (int v = 0; v < n; ++v) {
      mapping.emplace(ids[v], ids[perm[v]]);
    }
    form.automorphism_generators.push_back(std::move(mapping));
  }
  return form;
}

std::vector<std::vector<NodeId>> orbits(const LabeledDigraph& g,
                                        const Coloring& colors) {
  return canonize(g, colors).orbits;
}

bool brute_force_check(const LabeledDigraph& g1, const LabeledDigraph& g2) {
  constexpr std::size_t kBruteForceLimit = 8;
  if (g1.node_count() > kBruteForceLimit || g2.node_count() > kBruteForceLimit) {
    throw TooLargeError("brute-force isomorphism check is limited to 8 nodes");
  }
  if (g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count()) {
    return false;
  }

  const auto by_label = [](const LabeledDigraph& g) {
    std::vector<std::pair<std::string, NodeId>> keyed;
    keyed.reserve(g.node_count());
    for (const auto& [id, record] : g.nodes()) {
      keyed.emplace_back(record.label, id);
    }
    std::sort(keyed.begin(), keyed.end());
    return keyed;
  };
  const auto left = by_label(g1);
  auto right = by_label(g2);
  const std::size_t n = left.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (left[i].first != right[i].first) {
      return false;  // label multisets differ
    }
  }

  // Candidate bijections permute the right-hand vertices within blocks of
  // equal label; anything else could not preserve labels.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && right[j].first == right[i].first) {
      ++j;
    }
    blocks.emplace_back(i, j);
    i = j;
  }

  for (;;) {
    std::map<NodeId, NodeId> mapping;
    for (std::size_t i = 0; i < n; ++i) {
      mapping.emplace(left[i].second, right[i].second);
    }
    bool matches = true;
    for (const auto& [src, dst] : g1.edges()) {
      if (!g2.has_edge(mapping.at(src), mapping.at(dst))) {
        matches = false;
        break;
      }
    }
    // Equal edge counts make an injective edge embedding onto.
    if (matches) {
      return true;
    }

    std::size_t block = 0;
    while (block < blocks.size() &&
           !std::next_permutation(right.begin() + blocks[block].first,
                                  right.begin() + blocks[block].second)) {
      ++block;  // this block wrapped around to sorted order; carry on
    }
    if (block == blocks.size()) {
      return false;
    }
  }
}

}  // namespace dagmerkle
