#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symdyn/abstract_graph.hpp"

namespace symdyn {

// Vertex self-avoiding circuits with at least two edges, one per distinct
// edge sequence, starting at their least vertex. Stops after `cap`.
std::vector<NLoop> simple_circuits(const AbstractGraph& g, std::size_t cap = 100000);

// Loops colored 1..E in order, every other vertex and edge 0.
Coloring loop_coloring(const AbstractGraph& g, const std::vector<NLoop>& loops);

struct ColoringSearch {
  bool found = false;
  std::vector<NLoop> loops;
  Coloring coloring;
  bool exhaustive = true;           // false when capped or sampled
  std::uint64_t seed = 0;
  std::size_t families_examined = 0;
  std::size_t rules_valid = 0;      // families passing the one-graph rules
};

struct SearchOptions {
  std::size_t exhaustive_vertex_cap = 8;
  std::size_t family_cap = 2000000;
  std::size_t random_samples = 200000;
  std::uint64_t seed = 1;
  std::size_t max_loop_size = 0;    // 0: loops of any length
};

// A family of E vertex-disjoint circuits is attained when its loop coloring
// passes validate() and Xi built without moves is connected.
ColoringSearch search_colorings(const AbstractGraph& g, unsigned E, const SearchOptions& opt = {});

// All labeled graphs with the given K meeting the degree, no-self-loop and
// strong connectivity conditions, with at most max_vertices vertices.
// Degree sequences are taken non-increasing within each side.
std::vector<AbstractGraph> enumerate_abstract_graphs(long long K, std::size_t max_vertices);

struct TightnessProbe {
  long long K = 0;
  unsigned E = 0;
  bool found = false;
  AbstractGraph graph;
  ColoringSearch search;
  std::size_t graphs_examined = 0;
  std::size_t families_examined = 0;
  std::size_t rules_valid = 0;
  bool exhaustive = true;
};

TightnessProbe tightness_probe(long long K, unsigned E, std::size_t max_vertices,
                               const SearchOptions& opt = {});

}  // namespace symdyn
