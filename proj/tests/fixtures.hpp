#pragma once

#include "symdyn/abstract_graph.hpp"

namespace fixture {

using namespace symdyn;

// u -> v on a 2-loop plus one extra v -> u edge (K = 1).
inline AbstractGraph sturmian_shape() {
  return AbstractGraph({{"u", Side::left}, {"v", Side::right}}, {{0, 0, 1}, {1, 1, 0}, {2, 1, 0}});
}

inline Coloring sturmian_coloring(const AbstractGraph& g) {
  Coloring c = Coloring::blank(g, 1);
  c.vertex = {1, 1};
  c.edge = {{0, 1}, {1, 1}};
  return c;
}

// 4-loop u1 -> v1 -> v2 -> u2 -> u1 with outside vertices x1..x5 (K = 5).
inline AbstractGraph xi_shape() {
  std::vector<AbstractVertex> vs = {{"u1", Side::left},  {"v1", Side::right}, {"v2", Side::right},
                                    {"u2", Side::left},  {"x1", Side::right}, {"x2", Side::left},
                                    {"x3", Side::left},  {"x4", Side::right}, {"x5", Side::right}};
  auto at = [&](const char* n) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (vs[i].name == n) return i;
    return vs.size();
  };
  const char* pairs[][2] = {{"u1", "v1"}, {"v1", "v2"}, {"v2", "u2"}, {"u2", "u1"}, {"x1", "u1"},
                            {"v1", "x2"}, {"x5", "u2"}, {"x4", "u2"}, {"v2", "x3"}, {"x2", "x1"},
                            {"x3", "x4"}, {"x1", "x5"}, {"x4", "x2"}, {"x5", "x3"}};
  std::vector<AbstractEdge> es;
  for (const auto& p : pairs) es.push_back({es.size(), at(p[0]), at(p[1])});
  return AbstractGraph(vs, es);
}

inline NLoop xi_loop() { return NLoop{1, {0, 1, 2, 3}}; }

// Two 2-loops L1 <-> R1 and L2 <-> R2 joined by R1 -> L2 and R2 -> L1 (K = 3).
inline AbstractGraph two_loops_k3() {
  return AbstractGraph({{"L1", Side::left}, {"L2", Side::left}, {"R1", Side::right}, {"R2", Side::right}},
                       {{0, 0, 2}, {1, 1, 3}, {2, 2, 0}, {3, 2, 0}, {4, 2, 1}, {5, 3, 0}, {6, 3, 1}});
}

}  // namespace fixture
