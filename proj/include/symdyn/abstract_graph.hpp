#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/digraph.hpp"
#include "symdyn/language.hpp"

namespace symdyn {

struct AbstractVertex {
  std::string name;
  Side side = Side::left;
};

struct AbstractEdge {
  std::size_t id = 0;  // stable across moves
  std::size_t from = 0, to = 0;
};

// Directed multigraph on left/right special vertices. Edge ids are unique
// and kept in increasing order.
class AbstractGraph {
 public:
  AbstractGraph() = default;
  AbstractGraph(std::vector<AbstractVertex> vertices, std::vector<AbstractEdge> edges,
                std::optional<long long> declared_K = std::nullopt);

  const std::vector<AbstractVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<AbstractEdge>& edges() const noexcept { return edges_; }
  std::optional<long long> declared_K() const noexcept { return declared_K_; }

  std::size_t vertex_index(const std::string& name) const;  // throws Error if unknown
  const AbstractEdge& edge(std::size_t id) const;           // throws Error if unknown
  bool has_edge(std::size_t id) const;
  // Edge ids, increasing.
  std::vector<std::size_t> in_edges(std::size_t v) const;
  std::vector<std::size_t> out_edges(std::size_t v) const;

  std::size_t K_left() const;
  std::size_t K_right() const;
  // Declared K, else |edges| - |vertices|.
  long long K() const;

  EdgeList edge_list() const;
  bool strongly_connected() const;
  // Edges from a left special to a right special.
  std::vector<std::size_t> bispecial_edges() const;

  bool same_structure(const AbstractGraph& other) const;

 private:
  std::vector<AbstractVertex> vertices_;
  std::vector<AbstractEdge> edges_;
  std::optional<long long> declared_K_;
};

struct Coloring {
  unsigned E = 0;
  std::vector<unsigned> vertex;         // indexed like the graph's vertices
  std::map<std::size_t, unsigned> edge; // by edge id; missing ids are 0

  unsigned of_edge(std::size_t id) const {
    const auto it = edge.find(id);
    return it == edge.end() ? 0 : it->second;
  }
  static Coloring blank(const AbstractGraph& g, unsigned E);
  bool operator==(const Coloring&) const = default;
};

// Directed circuit given by edge ids in traversal order.
struct NLoop {
  unsigned color = 0;
  std::vector<std::size_t> edges;

  std::size_t size() const { return edges.size(); }
  bool operator==(const NLoop&) const = default;
};

std::vector<std::size_t> loop_vertices(const AbstractGraph& g, const NLoop& loop);

struct Violation {
  std::string item;  // e.g. "notation.2", "rules1.4", "loop"
  std::string detail;
};

std::vector<Violation> validate_graph(const AbstractGraph& g);
std::vector<Violation> validate_coloring(const AbstractGraph& g, const Coloring& c);
// Circuit, vertex self-avoiding, at least two edges, all edges colored.
std::vector<Violation> validate_loop(const AbstractGraph& g, const Coloring& c, const NLoop& loop);
std::vector<Violation> validate(const AbstractGraph& g, const Coloring& c,
                                const std::vector<NLoop>& loops = {});

// e0 = bispecial edge u -> v; entering ends at u, leaving starts at v.
struct RbsMove {
  std::size_t bispecial = 0;
  std::size_t entering = 0;
  std::size_t leaving = 0;
  bool operator==(const RbsMove&) const = default;
};

// Builds a move from 1-based choices. With a loop through e0, index 1 names
// the loop edge and the remaining edges follow in id order; otherwise all
// edges are in id order.
RbsMove rbs_from_indices(const AbstractGraph& g, std::size_t e0, std::size_t i0, std::size_t j0,
                         const NLoop* loop = nullptr);

// The rewiring alone, without the strong connectivity requirement.
AbstractGraph rewire(const AbstractGraph& g, const RbsMove& m);

struct RbsResult {
  AbstractGraph graph;
  Coloring coloring;
  bool coloring_valid = true;
  std::vector<Violation> violations;  // of the fallback coloring when invalid
};

// Throws Error("inadmissible RBS ...") if the result is not strongly connected.
RbsResult apply_rbs(const AbstractGraph& g, const Coloring& c, const RbsMove& m);

enum class MoveKind { twist, shrink_u, shrink_v, collapse, outside };
const char* move_kind_name(MoveKind k);

// Kind without the shrink admissibility rules.
MoveKind raw_move_kind(const AbstractGraph& g, const RbsMove& m, const NLoop& loop);
// Throws Error on a shrink in a 2-loop or one ejecting the loop's only
// special vertex of its side.
MoveKind classify_move(const AbstractGraph& g, const RbsMove& m, const NLoop& loop);

// The loop carried through the move onto `after`; nullopt after a collapse.
std::optional<NLoop> carry_loop(const AbstractGraph& before, const AbstractGraph& after,
                                const RbsMove& m, const NLoop& loop);

// Graphviz output; loops become clusters, colors come from a fixed palette.
std::string to_dot(const AbstractGraph& g, const Coloring* c = nullptr,
                   const std::vector<NLoop>& loops = {}, const std::string& name = "Lambda");

}  // namespace symdyn
