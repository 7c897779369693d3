#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "builders.hpp"
#include "dagmerkle/canonize.hpp"
#include "dagmerkle/graph.hpp"
#include "dagmerkle/hashing.hpp"
#include "dagmerkle/reductions.hpp"
#include "dagmerkle/scc.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace dagmerkle;

namespace {

EdgeLabeledDigraph random_edge_labeled(std::mt19937& rng, int max_nodes,
                                       int max_edges) {
  EdgeLabeledDigraph g;
  std::uniform_int_distribution<int> node_count(1, max_nodes);
  std::uniform_int_distribution<int> edge_count(0, max_edges);
  const int n = node_count(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_label(0, 2);
  for (int i = 0; i < n; ++i) {
    g.nodes.emplace("m" + std::to_string(i),
                    random_graphs::xyz_alphabet()[pick_label(rng)]);
  }
  const int m = edge_count(rng);
  for (int i = 0; i < m; ++i) {
    g.edges.emplace_back("m" + std::to_string(pick(rng)),
                         "m" + std::to_string(pick(rng)),
                         random_graphs::xyz_alphabet()[pick_label(rng)]);
  }
  return g;
}

}  // namespace

TEST_CASE("edge-label encoding shape") {
  EdgeLabeledDigraph g;
  g.nodes = {{"a", "a"}, {"b", "b"}};
  g.edges = {{"a", "b", "x"}};

  const LabeledDigraph encoded = encode_edge_labels(g);
  CHECK(encoded.node_count() == 3);
  CHECK(encoded.edge_count() == 2);
  CHECK_FALSE(encoded.has_edge("a", "b"));
  CHECK(encoded.label("a") == "N:a");
  CHECK(encoded.label("a|b|0") == "E:x");
  CHECK(encoded.has_edge("a", "a|b|0"));
  CHECK(encoded.has_edge("a|b|0", "b"));
}

TEST_CASE("parallel edges get one intermediate each") {
  EdgeLabeledDigraph g;
  g.nodes = {{"a", "a"}, {"b", "b"}};
  g.edges = {{"a", "b", "x"}, {"a", "b", "x"}};

  const LabeledDigraph doubled = encode_edge_labels(g);
  CHECK(doubled.node_count() == 4);
  CHECK(doubled.edge_count() == 4);

  EdgeLabeledDigraph single = g;
  single.edges.pop_back();
  CHECK(hash_graph(doubled).node_hashes.at("a") !=
        hash_graph(encode_edge_labels(single)).node_hashes.at("a"));
}

TEST_CASE("edge labels reach the digests") {
  EdgeLabeledDigraph g;
  g.nodes = {{"a", "a"}, {"b", "b"}};
  g.edges = {{"a", "b", "x"}};
  EdgeLabeledDigraph h = g;
  std::get<2>(h.edges[0]) = "y";

  CHECK(hash_graph(encode_edge_labels(g)).node_hashes.at("a") !=
        hash_graph(encode_edge_labels(h)).node_hashes.at("a"));
}

TEST_CASE("generated intermediate ids dodge clashing user ids") {
  EdgeLabeledDigraph g;
  g.nodes = {{"a", "a"}, {"b", "b"}, {"a|b|0", "imposter"}};
  g.edges = {{"a", "b", "x"}};

  const LabeledDigraph encoded = encode_edge_labels(g);
  CHECK(encoded.node_count() == 4);
  CHECK(encoded.label("a|b|0") == "N:imposter");
  CHECK(encoded.label("a|b|0|") == "E:x");
}

TEST_CASE("label namespaces cannot collide") {
  EdgeLabeledDigraph g;
  g.nodes = {{"a", "E:x"}, {"b", "N:a"}};
  g.edges = {{"a", "b", "x"}};

  const LabeledDigraph encoded = encode_edge_labels(g);
  for (const auto& [id, record] : encoded.nodes()) {
    const bool node_tagged = record.label.rfind("N:", 0) == 0;
    const bool edge_tagged = record.label.rfind("E:", 0) == 0;
    CHECK(node_tagged != edge_tagged);
  }
  CHECK(encoded.label("a") == "N:E:x");  // tagged after, so no confusion
}

TEST_CASE("edge list order never reaches the digests") {
  std::mt19937 rng(7401);
  for (int trial = 0; trial < 50; ++trial) {
    EdgeLabeledDigraph g = random_edge_labeled(rng, 5, 8);
    EdgeLabeledDigraph shuffled = g;
    std::shuffle(shuffled.edges.begin(), shuffled.edges.end(), rng);

    const auto before = hash_graph(encode_edge_labels(g));
    const auto after = hash_graph(encode_edge_labels(shuffled));
    CHECK(before.graph_digest == after.graph_digest);
    for (const auto& [id, label] : g.nodes) {
      CHECK(before.node_hashes.at(id) == after.node_hashes.at(id));
    }
  }
}

TEST_CASE("encoding preserves isomorphism both ways at small scale") {
  std::mt19937 rng(7402);
  int positives = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeLabeledDigraph g1 = random_edge_labeled(rng, 4, 4);
    EdgeLabeledDigraph g2;
    if (trial % 2 == 0) {
      g2 = random_edge_labeled(rng, 4, 4);
    } else {
      // Rename ids so roughly half the trials compare isomorphic pairs.
      std::map<NodeId, NodeId> mapping;
      int next = 0;
      for (const auto& [id, label] : g1.nodes) {
        mapping.emplace(id, "r" + std::to_string(9 - next++));
      }
      for (const auto& [id, label] : g1.nodes) {
        g2.nodes.emplace(mapping.at(id), label);
      }
      for (const auto& [src, dst, label] : g1.edges) {
        g2.edges.emplace_back(mapping.at(src), mapping.at(dst), label);
      }
    }
    const bool oracle = oracles::edge_labeled_isomorphic(g1, g2);
    positives += oracle ? 1 : 0;
    CHECK(oracle == brute_force_check(encode_edge_labels(g1),
                                      encode_edge_labels(g2)));
  }
  CHECK(positives >= 25);  // the renamed half must actually test positives
}

TEST_CASE("undirected encoding") {
  UndirectedGraph g;
  g.nodes = {{"a", "a"}, {"b", "b"}};
  g.add_edge("b", "a");

  const LabeledDigraph encoded = encode_undirected(g);
  CHECK(encoded.edge_count() == 2);
  CHECK(encoded.has_edge("a", "b"));
  CHECK(encoded.has_edge("b", "a"));
  CHECK(encoded.label("a") == "N:a");
  CHECK(strongly_connected_components(encoded) ==
        std::vector<std::set<NodeId>>{{"a", "b"}});

  UndirectedGraph empty_edges;
  empty_edges.nodes = {{"a", "a"}};
  CHECK(encode_undirected(empty_edges).edge_count() == 0);
}

TEST_CASE("connected undirected graphs become one component") {
  std::mt19937 rng(7403);
  for (int trial = 0; trial < 50; ++trial) {
    UndirectedGraph g;
    const int n = 2 + trial % 6;
    for (int i = 0; i < n; ++i) {
      g.nodes.emplace("m" + std::to_string(i), "v");
    }
    // Random spanning tree plus random extras keeps it connected.
    std::uniform_int_distribution<int> below(0, n - 1);
    for (int i = 1; i < n; ++i) {
      g.add_edge("m" + std::to_string(i),
                 "m" + std::to_string(below(rng) % i));
    }
    for (int i = 0; i < n; ++i) {
      const int u = below(rng);
      const int v = below(rng);
      if (u != v) {
        g.add_edge("m" + std::to_string(u), "m" + std::to_string(v));
      }
    }
    CHECK(strongly_connected_components(encode_undirected(g)).size() == 1);
  }
}
