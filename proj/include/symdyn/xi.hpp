#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symdyn/abstract_graph.hpp"

namespace symdyn {

// Weak components of the graph with loop edges removed, and per component
// the vertices of each loop it contains. Components are sorted by least
// vertex; tags[i][k] lists loop k's vertices in component i.
struct ComponentTags {
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::vector<std::vector<std::size_t>>> tags;
  bool operator==(const ComponentTags&) const = default;
};

ComponentTags components_and_tags(const AbstractGraph& g, const std::vector<NLoop>& loops);

enum class AppendixMove { A, B, C };
const char* appendix_move_name(AppendixMove m);

struct MoveEffect {
  AppendixMove kind = AppendixMove::A;
  bool unchanged = true;
  // For B: components of u and v before, the merged component after, and
  // the ejected vertex.
  std::size_t I1 = 0, I2 = 0, J = 0, removed = 0;
  ComponentTags before, after, predicted;
  bool matches = false;  // predicted == recomputed
  AbstractGraph graph;
  std::vector<NLoop> loops;
};

// Throws Error if the move is not a twist, a shrink on a loop of at least
// three vertices, or a move away from all loops; or if it is inadmissible.
MoveEffect move_effect(const AbstractGraph& g, const std::vector<NLoop>& loops, const RbsMove& m);

struct XiGraph {
  std::vector<std::string> vertices;                       // kept vertices, then 1_l, 1_r, ...
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // undirected
  std::vector<std::size_t> edge_ids;                       // source edge id per Xi edge
  AbstractGraph lambda_star;
  std::vector<NLoop> loops_star;
  long long K = 0;
  unsigned E = 0;
  std::size_t moves_applied = 0;
};

// Applies the twist and shrink moves of `moves` that act on the loops and
// skips moves away from them. Throws Error on a collapse or a malformed
// move; throws std::logic_error if the edge/vertex identity fails.
XiGraph build_xi(const AbstractGraph& g, const std::vector<NLoop>& loops,
                 const std::vector<RbsMove>& moves = {});

// Undirected DOT; merged loop vertices are drawn as double circles.
std::string to_dot(const XiGraph& xi, const std::string& name = "Xi");

struct BoundReport {
  bool xi_connected = false;
  unsigned E = 0;
  long long K = 0;
  bool bound_satisfied = false;       // 2E <= K + 1
  long long xi_edges = 0, xi_vertices = 0;
  bool counting_ok = true;            // connected implies edges >= vertices - 1
  std::vector<std::vector<std::string>> cut;  // components of a disconnected Xi
  std::string note;
};

BoundReport bound_check(const AbstractGraph& g, const std::vector<NLoop>& loops,
                        const std::vector<RbsMove>& moves = {});

// Random instance of vertex-disjoint colored loops in a graph meeting the
// degree and strong connectivity conditions. Each loop has both sides.
struct LoopInstance {
  AbstractGraph graph;
  std::vector<NLoop> loops;
  Coloring coloring;  // loops colored 1..E, everything else 0
};

struct InstanceParams {
  long long K = 3;
  unsigned E = 1;
  std::size_t max_tries = 10000;
};

std::optional<LoopInstance> random_loop_instance(std::mt19937_64& rng, const InstanceParams& p);

// Admissible moves of the three appendix kinds, in a fixed order.
struct CandidateMove {
  RbsMove move;
  AppendixMove kind;
};
std::vector<CandidateMove> candidate_moves(const AbstractGraph& g, const std::vector<NLoop>& loops);

}  // namespace symdyn
