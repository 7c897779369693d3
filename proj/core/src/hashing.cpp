#include "dagmerkle/hashing.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <limits>
#include <utility>

#include "dagmerkle/canonize.hpp"
#include "dagmerkle/errors.hpp"

namespace dagmerkle {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) {
      out.push_back(',');
    }
    out += parts[i];
  }
  return out;
}

}  // namespace

Digest sha256_hex(std::string_view data) {
  unsigned char raw[EVP_MAX_MD_SIZE];
  unsigned int raw_len = 0;
  EVP_Digest(data.empty() ? "" : data.data(), data.size(), raw, &raw_len,
             EVP_sha256(), nullptr);
  static constexpr char kHexDigits[] = "0123456789abcdef";
  std::string hex(2 * raw_len, '\0');
  for (unsigned int i = 0; i < raw_len; ++i) {
    hex[2 * i] = kHexDigits[raw[i] >> 4];
    hex[2 * i + 1] = kHexDigits[raw[i] & 0xf];
  }
  return hex;
}

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == '"') {
      out.push_back('\\');
    }
    out.push_back(c);
  }
  return out;
}

std::string adj_list_to_str(const std::vector<std::pair<int, int>>& adj) {
  std::string out = "[";
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (i != 0) {
      out.push_back(',');
    }
    out += "(" + std::to_string(adj[i].first) + "," +
           std::to_string(adj[i].second) + ")";
  }
  out.push_back(']');
  return out;
}

Digest hash_strs(std::vector<std::string> strs) {
  std::sort(strs.begin(), strs.end());
  return sha256_hex(join(strs));
}

std::map<NodeId, int> invert_list(const std::vector<NodeId>& lst) {
  std::map<NodeId, int> positions;
  for (int i = 0; i < static_cast<int>(lst.size()); ++i) {
    if (!positions.emplace(lst[i], i).second) {
      throw DuplicateElementError("repeated element: " + lst[i]);
    }
  }
  return positions;
}

std::map<NodeId, int> canonical_orbits_mapping(
    const std::map<NodeId, int>& canon_mapping,
    const std::vector<std::vector<NodeId>>& orbits) {
  std::vector<std::pair<int, const std::vector<NodeId>*>> keyed;
  keyed.reserve(orbits.size());
  for (const auto& orbit : orbits) {
    int min_pos = std::numeric_limits<int>::max();
    for (const NodeId& id : orbit) {
      min_pos = std::min(min_pos, canon_mapping.at(id));
    }
    keyed.emplace_back(min_pos, &orbit);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::map<NodeId, int> mapping;
  for (std::size_t j = 0; j < keyed.size(); ++j) {
    for (const NodeId& id : *keyed[j].second) {
      mapping[id] = static_cast<int>(j);
    }
  }
  return mapping;
}

namespace {

// Hashes one component whose successor components are all hashed already.
void emit_component_hash(const LabeledDigraph& g, Condensation& cond,
                         SccId scc, SccHashState& state, SccHashMode mode) {
  const std::set<NodeId>& members = cond.components[scc].members;

  for (const NodeId& n : members) {
    if (!g.has_node(n)) {
      throw InconsistentCondensationError("component member not in graph: " +
                                          n);
    }
    std::vector<std::string> succ_hashes;
    for (const NodeId& w : g.successors(n)) {
      if (members.count(w) != 0) {
        continue;
      }
      auto it = state.node_hashes.find(w);
      if (it == state.node_hashes.end()) {
        throw InconsistentCondensationError(
            "cross edge missing from condensation: " + n + " -> " + w);
      }
      succ_hashes.push_back(it->second);
    }
    state.nonrec_hashes[n] = sha256_hex("\"" + escape(g.label(n)) + "\"," +
                                        hash_strs(std::move(succ_hashes)));
  }

  const LabeledDigraph sub = g.subgraph(members);
  std::map<NodeId, std::string> color_keys;
  for (const NodeId& n : members) {
    color_keys.emplace(n, state.nonrec_hashes.at(n));
  }
  const CanonicalForm form = canonize(sub, coloring_from_keys(color_keys));
  const std::map<NodeId, int> position = invert_list(form.order);
  const std::map<NodeId, int> orbit_index =
      canonical_orbits_mapping(position, form.orbits);

  std::string encoding;
  if (mode == SccHashMode::exact) {
    std::vector<std::string> nonrec_in_order;
    nonrec_in_order.reserve(form.order.size());
    for (const NodeId& n : form.order) {
      nonrec_in_order.push_back(state.nonrec_hashes.at(n));
    }
    std::vector<std::pair<int, int>> adj;
    adj.reserve(sub.edge_count());
    for (const auto& [src, dst] : sub.edges()) {
      adj.emplace_back(position.at(src), position.at(dst));
    }
    std::sort(adj.begin(), adj.end());
    encoding = "[" + join(nonrec_in_order) + "]," + adj_list_to_str(adj);
  } else {
    // Quotient by orbits: one vertex per orbit in orbit-index order, one
    // edge per crossing pair, intra-orbit edges kept as self-loops. Orbit
    // members share a colour key, so any member's nonrec hash represents
    // the orbit.
    std::vector<std::string> orbit_nonrec(form.orbits.size());
    std::set<std::pair<int, int>> quotient_edges;
    for (const auto& orbit : form.orbits) {
      orbit_nonrec[orbit_index.at(orbit.front())] =
          state.nonrec_hashes.at(orbit.front());
    }
    for (const auto& [src, dst] : sub.edges()) {
      quotient_edges.emplace(orbit_index.at(src), orbit_index.at(dst));
    }
    const std::vector<std::pair<int, int>> adj(quotient_edges.begin(),
                                               quotient_edges.end());
    encoding = "[" + join(orbit_nonrec) + "]," + adj_list_to_str(adj);
  }

  const Digest scc_hash = sha256_hex(encoding);
  cond.components[scc].hash = scc_hash;
  for (const NodeId& n : members) {
    state.node_hashes[n] =
        sha256_hex(std::to_string(orbit_index.at(n)) + "," + scc_hash);
  }
}

}  // namespace

void hash_scc(const LabeledDigraph& g, Condensation& cond, SccId scc,
              SccHashState& state, SccHashMode mode) {
  const auto in_range = [&cond](SccId c) {
    return c >= 0 && static_cast<std::size_t>(c) < cond.size();
  };
  if (!in_range(scc)) {
    throw InconsistentCondensationError("no such component: " +
                                        std::to_string(scc));
  }
  // Explicit stack; each component is pushed once to schedule its
  // dependencies and once more to hash after they finish.
  std::vector<std::pair<SccId, bool>> stack;
  stack.emplace_back(scc, false);
  while (!stack.empty()) {
    const auto [c, deps_done] = stack.back();
    stack.pop_back();
    if (cond.components[c].hash) {
      continue;
    }
    if (deps_done) {
      emit_component_hash(g, cond, c, state, mode);
      continue;
    }
    stack.emplace_back(c, true);
    for (SccId succ : cond.successors(c)) {
      if (!in_range(succ)) {
        throw InconsistentCondensationError("edge to unknown component: " +
                                            std::to_string(succ));
      }
      if (!cond.components[succ].hash) {
        stack.emplace_back(succ, false);
      }
    }
  }
}

HashReport exact_hash_graph(const LabeledDigraph& g) {
  const CanonicalForm form = canonize(g, label_coloring(g));
  const std::map<NodeId, int> position = invert_list(form.order);

  std::vector<std::string> quoted_labels;
  quoted_labels.reserve(form.order.size());
  for (const NodeId& n : form.order) {
    quoted_labels.push_back("\"" + escape(g.label(n)) + "\"");
  }
  std::vector<std::pair<int, int>> adj;
  adj.reserve(g.edge_count());
  for (const auto& [src, dst] : g.edges()) {
    adj.emplace_back(position.at(src), position.at(dst));
  }
  std::sort(adj.begin(), adj.end());

  HashReport report;
  report.graph_digest =
      sha256_hex("[" + join(quoted_labels) + "]," + adj_list_to_str(adj));
  for (const auto& [n, idx] : canonical_orbits_mapping(position, form.orbits)) {
    report.node_hashes.emplace(
        n, sha256_hex(std::to_string(idx) + "," + report.graph_digest));
  }
  return report;
}

namespace {

HashReport hash_graph_impl(const LabeledDigraph& g, SccHashMode mode) {
  Condensation cond = condensation(g);
  SccHashState state;
  for (SccId c = 0; c < static_cast<SccId>(cond.size()); ++c) {
    hash_scc(g, cond, c, state, mode);
  }

  HashReport report;
  report.node_hashes = std::move(state.node_hashes);
  report.nonrec_hashes = std::move(state.nonrec_hashes);

  std::vector<std::string> rollup;
  rollup.reserve(g.node_count());
  for (SccId c = 0; c < static_cast<SccId>(cond.size()); ++c) {
    report.scc_hashes.emplace(c, *cond.components[c].hash);
    if (mode == SccHashMode::exact) {
      continue;
    }
    std::set<std::string> per_orbit;
    for (const NodeId& n : cond.components[c].members) {
      per_orbit.insert(report.node_hashes.at(n));
    }
    rollup.insert(rollup.end(), per_orbit.begin(), per_orbit.end());
  }
  if (mode == SccHashMode::exact) {
    for (const auto& [n, digest] : report.node_hashes) {
      rollup.push_back(digest);
    }
  }
  report.graph_digest = hash_strs(std::move(rollup));
  return report;
}

}  // namespace

HashReport hash_graph(const LabeledDigraph& g) {
  return hash_graph_impl(g, SccHashMode::exact);
}

HashReport hash_graph_collapsed(const LabeledDigraph& g) {
  return hash_graph_impl(g, SccHashMode::collapse_orbits);
}

}  // namespace dagmerkle
