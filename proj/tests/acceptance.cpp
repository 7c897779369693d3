#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "builders.hpp"
#include "dagmerkle/canonize.hpp"
#include "dagmerkle/hashing.hpp"
#include "dagmerkle/scc.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
// Each criterion also enforces a wall-clock budget.

namespace {

using dagmerkle::HashReport;
using dagmerkle::LabeledDigraph;
using dagmerkle::NodeId;

bool reference_graph_regressions() {
  using clock = std::chrono::steady_clock;
  const auto budget = std::chrono::seconds(1);

  auto start = clock::now();
  const LabeledDigraph shared = builders::load_fixture("diamond_shared");
  const LabeledDigraph expanded = builders::load_fixture("diamond_expanded");
  const HashReport rec_shared = dagmerkle::hash_graph(shared);
  const HashReport rec_expanded = dagmerkle::hash_graph(expanded);
  bool ok = rec_shared.node_hashes.at("a") == rec_expanded.node_hashes.at("a");
  ok = ok && !dagmerkle::brute_force_check(shared, expanded);
  ok = ok && dagmerkle::exact_hash_graph(shared).graph_digest !=
                 dagmerkle::exact_hash_graph(expanded).graph_digest;
  ok = ok && clock::now() - start < budget;

  start = clock::now();
  const LabeledDigraph triangle = builders::load_fixture("triangle_cycle");
  for (const HashReport& report : {dagmerkle::hash_graph(triangle),
                                   dagmerkle::hash_graph_collapsed(triangle)}) {
    ok = ok && report.node_hashes.at("a") == report.node_hashes.at("b");
    ok = ok && report.node_hashes.at("b") == report.node_hashes.at("c");
  }
  ok = ok && clock::now() - start < budget;

  start = clock::now();
  const LabeledDigraph chain_a = builders::load_fixture("cycle_chain_a");
  const LabeledDigraph chain_b = builders::load_fixture("cycle_chain_b");
  ok = ok && dagmerkle::hash_graph(chain_a).node_hashes.at("a") ==
                 dagmerkle::hash_graph(chain_b).node_hashes.at("a");
  ok = ok && !dagmerkle::brute_force_check(chain_a, chain_b);
  return ok && clock::now() - start < budget;
}

bool cycle_collapse() {
  const LabeledDigraph two = builders::load_fixture("cycle2");
  const LabeledDigraph three = builders::load_fixture("cycle3");
  bool ok = dagmerkle::hash_graph(two).graph_digest !=
            dagmerkle::hash_graph(three).graph_digest;
  return ok && dagmerkle::hash_graph_collapsed(two).graph_digest ==
                   dagmerkle::hash_graph_collapsed(three).graph_digest;
}

bool relabeling_invariance() {
  std::mt19937 rng(9003);
  std::uniform_int_distribution<int> size(1, 8);
  using Op = std::function<HashReport(const LabeledDigraph&)>;
  const std::array<Op, 3> ops = {dagmerkle::hash_graph,
                                 dagmerkle::hash_graph_collapsed,
                                 dagmerkle::exact_hash_graph};
  for (int trial = 0; trial < 1000; ++trial) {
    const LabeledDigraph g = random_graphs::random_graph(
        rng, size(rng), random_graphs::xyz_alphabet());
    std::map<NodeId, NodeId> mapping;
    const LabeledDigraph renamed = random_graphs::permute_ids(rng, g, &mapping);
    for (const Op& op : ops) {
      const HashReport before = op(g);
      const HashReport after = op(renamed);
      if (before.graph_digest != after.graph_digest) return false;
      for (const auto& [id, digest] : before.node_hashes) {
        if (after.node_hashes.at(mapping.at(id)) != digest) return false;
      }
    }
  }
  return true;
}

// Minimum over all vertex permutations of the 16-bit adjacency mask: a
// trivially correct canonical form for uniform 4-vertex digraphs.
std::uint32_t min_mask_code(std::uint32_t mask) {
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::uint32_t best = 0xffffffffu;
  do {
    std::uint32_t code = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (mask & (1u << (i * 4 + j))) code |= 1u << (perm[i] * 4 + perm[j]);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool exhaustive_four_vertex() {
  const std::array<NodeId, 4> ids = {"0", "1", "2", "3"};
  std::map<std::string, std::uint32_t> code_of_digest;
  std::map<std::uint32_t, std::string> digest_of_code;
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    LabeledDigraph g;
    for (const NodeId& id : ids) g.add_node(id, "v");
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (mask & (1u << (i * 4 + j))) g.add_edge(ids[i], ids[j]);
      }
    }
    const std::string digest = dagmerkle::exact_hash_graph(g).graph_digest;
    const std::uint32_t code = min_mask_code(mask);
    const auto [by_digest, fresh_digest] =
        code_of_digest.try_emplace(digest, code);
    if (!fresh_digest && by_digest->second != code) return false;
    const auto [by_code, fresh_code] = digest_of_code.try_emplace(code, digest);
    if (!fresh_code && by_code->second != digest) return false;
  }
  return code_of_digest.size() == digest_of_code.size();
}

bool orbit_detection() {
  std::mt19937 rng(9005);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_int_distribution<int> colors(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& xyz = random_graphs::xyz_alphabet();
    const std::vector<std::string> alphabet(xyz.begin(),
                                            xyz.begin() + colors(rng));
    const LabeledDigraph g = random_graphs::random_graph(rng, size(rng),
                                                         alphabet);
    if (oracles::normalize_partition(
            dagmerkle::orbits(g, dagmerkle::label_coloring(g))) !=
        oracles::brute_automorphism_orbits(g)) {
      return false;
    }
  }
  return true;
}

bool graft_stability() {
  std::mt19937 rng(9006);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<int> extra(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const LabeledDigraph g = random_graphs::random_graph(
        rng, size(rng), random_graphs::xyz_alphabet());
    const LabeledDigraph grafted = random_graphs::graft_upstream(
        rng, g, extra(rng), random_graphs::xyz_alphabet());
    const HashReport before = dagmerkle::hash_graph(g);
    const HashReport after = dagmerkle::hash_graph(grafted);
    for (const auto& [id, digest] : before.node_hashes) {
      if (after.node_hashes.at(id) != digest) return false;
    }
  }
  return true;
}

bool component_partitions() {
  std::mt19937 rng(9007);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 500; ++trial) {
    const LabeledDigraph g = random_graphs::random_graph(
        rng, size(rng), random_graphs::xyz_alphabet());
    if (oracles::normalize_partition(
            dagmerkle::strongly_connected_components(g)) !=
        oracles::reachability_scc_partition(g)) {
      return false;
    }
  }
  return true;
}

bool deep_path() {
  LabeledDigraph g;
  const int n = 100000;
  for (int i = 0; i < n; ++i) g.add_node("n" + std::to_string(i), "v");
  for (int i = 0; i + 1 < n; ++i) {
    g.add_edge("n" + std::to_string(i), "n" + std::to_string(i + 1));
  }
  const HashReport report = dagmerkle::hash_graph(g);
  return report.node_hashes.size() == static_cast<std::size_t>(n) &&
         !report.graph_digest.empty();
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<bool()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"reference-graph regressions (shared-tail pair, triangle, cycle chains)",
       3.0, reference_graph_regressions},
      {"2-cycle vs 3-cycle collapse", 1.0, cycle_collapse},
      {"relabeling invariance, 1000 random digraphs, all three hashers", 60.0,
       relabeling_invariance},
      {"exact digests partition all 4-vertex digraphs by isomorphism", 300.0,
       exhaustive_four_vertex},
      {"orbits match brute-force automorphism orbits, 500 graphs", 60.0,
       orbit_detection},
      {"digests unchanged under unreachable upstream grafts, 200 graphs", 30.0,
       graft_stability},
      {"component partitions match reachability oracle, 500 graphs", 10.0,
       component_partitions},
      {"100000-node path hashes without stack overflow", 30.0, deep_path},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %zu threw: %s\n", i + 1, e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.budget_seconds) ok = false;
    failures += ok ? 0 : 1;
    std::printf("%s  criterion %zu: %s (%.2fs, budget %.0fs)\n",
                ok ? "PASS" : "FAIL", i + 1, c.name, elapsed,
                c.budget_seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
