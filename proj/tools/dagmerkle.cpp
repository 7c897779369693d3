#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "dagmerkle/canonize.hpp"
#include "dagmerkle/errors.hpp"
#include "dagmerkle/graph_json.hpp"
#include "dagmerkle/hashing.hpp"
#include "dagmerkle/reductions.hpp"
#include "dagmerkle/scc.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      throw dagmerkle::Error("cannot open " + path);
    }
    buffer << file.rdbuf();
  }
  return buffer.str();
}

dagmerkle::LabeledDigraph load_graph(const std::string& path,
                                     const std::string& kind) {
  const std::string text = read_input(path);
  if (kind == "edge-labeled") {
    return dagmerkle::encode_edge_labels(dagmerkle::parse_edge_labeled_json(text));
  }
  if (kind == "undirected") {
    return dagmerkle::encode_undirected(dagmerkle::parse_undirected_json(text));
  }
  return dagmerkle::parse_graph_json(text);
}

// nlohmann::json stores object keys sorted, so dump() emits them sorted.
void print_json(const json& j) { std::cout << j.dump() << "\n"; }

json report_json(const dagmerkle::HashReport& report) {
  json nodes = json::object();
  for (const auto& [id, digest] : report.node_hashes) {
    nodes[id] = digest;
  }
  return json{{"graph", report.graph_digest}, {"nodes", nodes}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural digests for directed graphs"};
  app.require_subcommand(1);

  std::string kind = "plain";
  bool collapse_orbits = false;
  std::string input;
  std::string second_input;

  const auto add_kind = [&kind](CLI::App* sub) {
    sub->add_option("--kind", kind,
                    "Input schema: plain, edge-labeled, or undirected")
        ->transform(CLI::IsMember({"plain", "edge-labeled", "undirected"}))
        ->capture_default_str();
  };
  const auto add_input = [&input](CLI::App* sub) {
    sub->add_option("input", input, "Graph JSON file, or - for standard input")
        ->required();
  };

  CLI::App* hash =
      app.add_subcommand("hash", "Recursive digests over the condensation");
  hash->add_flag("--collapse-orbits", collapse_orbits,
                 "Quotient each component by its orbits before hashing");
  add_kind(hash);
  add_input(hash);

  CLI::App* exact =
      app.add_subcommand("exact-hash", "Whole-graph canonical digest");
  add_kind(exact);
  add_input(exact);

  CLI::App* scc = app.add_subcommand("scc", "Strongly connected components");
  add_kind(scc);
  add_input(scc);

  CLI::App* canon =
      app.add_subcommand("canon", "Canonical order and orbit partition");
  add_kind(canon);
  add_input(canon);

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "Orbit partition");
  add_kind(orbits_cmd);
  add_input(orbits_cmd);

  CLI::App* verify = app.add_subcommand(
      "verify", "Brute-force isomorphism check of two graphs");
  add_kind(verify);
  add_input(verify);
  verify->add_option("input2", second_input, "Second graph JSON file")
      ->required();

  CLI::App* encode =
      app.add_subcommand("encode", "Reduce an extended graph to the plain schema");
  add_kind(encode);
  add_input(encode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(hash)) {
      const auto g = load_graph(input, kind);
      print_json(report_json(collapse_orbits ? dagmerkle::hash_graph_collapsed(g)
                                             : dagmerkle::hash_graph(g)));
    } else if (app.got_subcommand(exact)) {
      print_json(report_json(dagmerkle::exact_hash_graph(load_graph(input, kind))));
    } else if (app.got_subcommand(scc)) {
      print_json(json(
          dagmerkle::strongly_connected_components(load_graph(input, kind))));
    } else if (app.got_subcommand(canon)) {
      const auto g = load_graph(input, kind);
      const auto form = dagmerkle::canonize(g, dagmerkle::label_coloring(g));
      print_json(json{{"orbits", form.orbits}, {"order", form.order}});
    } else if (app.got_subcommand(orbits_cmd)) {
      const auto g = load_graph(input, kind);
      print_json(json(dagmerkle::orbits(g, dagmerkle::label_coloring(g))));
    } else if (app.got_subcommand(verify)) {
      if (input == "-" && second_input == "-") {
        throw dagmerkle::Error("only one input may be standard input");
      }
      const auto g1 = load_graph(input, kind);
      const auto g2 = load_graph(second_input, kind);
      print_json(json{{"isomorphic", dagmerkle::brute_force_check(g1, g2)}});
    } else if (app.got_subcommand(encode)) {
      if (kind == "plain") {
        throw dagmerkle::Error("encode requires --kind edge-labeled or undirected");
      }
      std::cout << dagmerkle::serialize_graph_json(load_graph(input, kind))
                << "\n";
    }
    return 0;
  } catch (const dagmerkle::TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
