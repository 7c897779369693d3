#include "dagmerkle/scc.hpp"

#include <algorithm>

namespace dagmerkle {

namespace {

// Tarjan's algorithm with an explicit frame stack. Deep graphs (long
// paths, long cycles) would overflow the machine stack in the recursive
// form well below the sizes this library is expected to handle.
std::vector<std::vector<int>> tarjan_components(
    const std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(out.size());
  constexpr int kUnvisited = -1;

  std::vector<int> disc(n, kUnvisited);
  std::vector<int> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> scc_stack;
  std::vector<std::vector<int>> components;

  struct Frame {
    int vertex;
    std::size_t next_child;
  };
  std::vector<Frame> frames;
  int timer = 0;

  for (int root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) {
      continue;
    }
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& frame = frames.back();
      const int v = frame.vertex;
      if (frame.next_child == 0) {
        disc[v] = low[v] = timer++;
        scc_stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (frame.next_child < out[v].size()) {
        const int w = out[v][frame.next_child++];
        if (disc[w] == kUnvisited) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) {
          low[v] = std::min(low[v], disc[w]);
        }
      }
      if (descended) {
        continue;
      }
      if (low[v] == disc[v]) {
        std::vector<int> component;
        for (;;) {
          const int w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
          if (w == v) {
            break;
          }
        }
        components.push_back(std::move(component));
      }
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().vertex] = std::min(low[frames.back().vertex], low[v]);
      }
    }
  }
  return components;
}

}  // namespace

std::vector<SccId> Condensation::successors(SccId id) const {
  std::vector<SccId> out;
  for (auto it = edges.lower_bound({id, 0}); it != edges.end() && it->first == id;
       ++it) {
    out.push_back(it->second);
  }
  return out;
}

std::vector<std::set<NodeId>> strongly_connected_components(
    const LabeledDigraph& g) {
  const std::vector<NodeId> ids = g.node_ids();
  const int n = static_cast<int>(ids.size());

  std::map<NodeId, int> index_of;
  for (int i = 0; i < n; ++i) {
    index_of.emplace(ids[i], i);
  }
  std::vector<std::vector<int>> out(n);
  for (const auto& [src, dst] : g.edges()) {
    out[index_of.at(src)].push_back(index_of.at(dst));
  }

  std::vector<std::vector<int>> raw = tarjan_components(out);

  // Order components by minimum member. The ids vector is sorted, so the
  // minimum index is also the minimum NodeId.
  for (auto& component : raw) {
    std::sort(component.begin(), component.end());
  }
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<std::set<NodeId>> result;
  result.reserve(raw.size());
  for (const auto& component : raw) {
    std::set<NodeId> members;
    for (int v : component) {
      members.insert(members.end(), ids[v]);
    }
    result.push_back(std::move(members));
  }
  return result;
}

Condensation condensation(const LabeledDigraph& g) {
  Condensation cond;
  for (auto& members : strongly_connected_components(g)) {
    const SccId id = static_cast<SccId>(cond.components.size());
    for (const NodeId& member : members) {
      cond.component_of.emplace(member, id);
    }
    cond.components.push_back({std::move(members), std::nullopt});
  }
  for (const auto& [src, dst] : g.edges()) {
    const SccId a = cond.component_of.at(src);
    const SccId b = cond.component_of.at(dst);
    if (a != b) {
      cond.edges.emplace(a, b);
    }
  }
  return cond;
}

}  // namespace dagmerkle
