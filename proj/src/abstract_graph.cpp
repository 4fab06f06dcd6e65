#include "symdyn/abstract_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn {

AbstractGraph::AbstractGraph(std::vector<AbstractVertex> vertices, std::vector<AbstractEdge> edges,
                             std::optional<long long> declared_K)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), declared_K_(declared_K) {
  std::sort(edges_.begin(), edges_.end(),
            [](const AbstractEdge& a, const AbstractEdge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i > 0 && edges_[i].id == edges_[i - 1].id)
      throw Error("duplicate edge id " + std::to_string(edges_[i].id));
    if (edges_[i].from >= vertices_.size() || edges_[i].to >= vertices_.size())
      throw Error("edge " + std::to_string(edges_[i].id) + " has an unknown endpoint");
  }
  std::set<std::string> names;
  for (const auto& v : vertices_)
    if (!names.insert(v.name).second) throw Error("duplicate vertex name " + v.name);
}

std::size_t AbstractGraph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].name == name) return i;
  throw Error("unknown vertex " + name);
}

bool AbstractGraph::has_edge(std::size_t id) const {
  return std::binary_search(edges_.begin(), edges_.end(), AbstractEdge{id, 0, 0},
                            [](const AbstractEdge& a, const AbstractEdge& b) { return a.id < b.id; });
}

const AbstractEdge& AbstractGraph::edge(std::size_t id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const AbstractEdge& a, std::size_t x) { return a.id < x; });
  if (it == edges_.end() || it->id != id) throw Error("unknown edge " + std::to_string(id));
  return *it;
}

std::vector<std::size_t> AbstractGraph::in_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_)
    if (e.to == v) out.push_back(e.id);
  return out;
}

std::vector<std::size_t> AbstractGraph::out_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_)
    if (e.from == v) out.push_back(e.id);
  return out;
}

std::size_t AbstractGraph::K_left() const {
  return std::count_if(vertices_.begin(), vertices_.end(),
                       [](const AbstractVertex& v) { return v.side == Side::left; });
}

std::size_t AbstractGraph::K_right() const { return vertices_.size() - K_left(); }

long long AbstractGraph::K() const {
  if (declared_K_) return *declared_K_;
  return static_cast<long long>(edges_.size()) - static_cast<long long>(vertices_.size());
}

EdgeList AbstractGraph::edge_list() const {
  EdgeList out;
  for (const auto& e : edges_) out.emplace_back(e.from, e.to);
  return out;
}

bool AbstractGraph::strongly_connected() const {
  return symdyn::strongly_connected(vertices_.size(), edge_list());
}

std::vector<std::size_t> AbstractGraph::bispecial_edges() const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_)
    if (vertices_[e.from].side == Side::left && vertices_[e.to].side == Side::right)
      out.push_back(e.id);
  return out;
}

bool AbstractGraph::same_structure(const AbstractGraph& o) const {
  if (vertices_.size() != o.vertices_.size() || edges_.size() != o.edges_.size()) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].name != o.vertices_[i].name || vertices_[i].side != o.vertices_[i].side)
      return false;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id != o.edges_[i].id || edges_[i].from != o.edges_[i].from ||
        edges_[i].to != o.edges_[i].to)
      return false;
  return true;
}

Coloring Coloring::blank(const AbstractGraph& g, unsigned E) {
  Coloring c;
  c.E = E;
  c.vertex.assign(g.vertices().size(), 0);
  return c;
}

std::vector<std::size_t> loop_vertices(const AbstractGraph& g, const NLoop& loop) {
  std::vector<std::size_t> out;
  for (auto id : loop.edges) out.push_back(g.edge(id).from);
  return out;
}

namespace {

std::string vname(const AbstractGraph& g, std::size_t v) { return g.vertices()[v].name; }

void add(std::vector<Violation>& out, std::string item, std::string detail) {
  out.push_back({std::move(item), std::move(detail)});
}

}  // namespace

std::vector<Violation> validate_graph(const AbstractGraph& g) {
  std::vector<Violation> out;
  const auto& V = g.vertices();
  const std::size_t Kl = g.K_left(), Kr = g.K_right();
  const long long K = g.K();
  if (K < 1) add(out, "notation.K", "K = " + std::to_string(K) + " is below 1");
  if (Kl < 1 || Kr < 1 || static_cast<long long>(Kl) > K || static_cast<long long>(Kr) > K)
    add(out, "notation.1", "K_l = " + std::to_string(Kl) + ", K_r = " + std::to_string(Kr) +
                               " outside [1, K]");
  for (std::size_t v = 0; v < V.size(); ++v) {
    const auto in = g.in_edges(v).size(), outd = g.out_edges(v).size();
    if (V[v].side == Side::left && (in < 2 || outd != 1))
      add(out, "notation.2", vname(g, v) + " has in-degree " + std::to_string(in) +
                                 " and out-degree " + std::to_string(outd));
    if (V[v].side == Side::right && (in != 1 || outd < 2))
      add(out, "notation.3", vname(g, v) + " has in-degree " + std::to_string(in) +
                                 " and out-degree " + std::to_string(outd));
  }
  const long long want = K + static_cast<long long>(Kl + Kr);
  if (static_cast<long long>(g.edges().size()) != want)
    add(out, "notation.4", std::to_string(g.edges().size()) + " edges, expected " +
                               std::to_string(want));
  for (const auto& e : g.edges())
    if (e.from == e.to) add(out, "notation.self-loop", "edge " + std::to_string(e.id));
  if (!g.strongly_connected()) add(out, "notation.5", "not strongly connected");
  return out;
}

std::vector<Violation> validate_coloring(const AbstractGraph& g, const Coloring& c) {
  std::vector<Violation> out;
  const auto& V = g.vertices();
  if (c.vertex.size() != V.size()) {
    add(out, "notation.6", "vertex coloring has the wrong size");
    return out;
  }
  for (const auto& [id, col] : c.edge)
    if (!g.has_edge(id)) add(out, "notation.7", "color on unknown edge " + std::to_string(id));
  for (const auto& e : g.edges()) {
    const unsigned col = c.of_edge(e.id);
    if (col != 0 && (c.vertex[e.from] != col || c.vertex[e.to] != col))
      add(out, "notation.8", "edge " + std::to_string(e.id) + " colored " + std::to_string(col) +
                                 " between " + vname(g, e.from) + " and " + vname(g, e.to));
  }
  for (std::size_t v = 0; v < V.size(); ++v)
    if (c.vertex[v] > c.E) add(out, "rules1.1", vname(g, v) + " colored above E");
  for (const auto& e : g.edges())
    if (c.of_edge(e.id) > c.E) add(out, "rules1.1", "edge " + std::to_string(e.id) + " colored above E");
  for (unsigned nu = 1; nu <= c.E; ++nu) {
    bool l = false, r = false;
    for (std::size_t v = 0; v < V.size(); ++v)
      if (c.vertex[v] == nu) (V[v].side == Side::left ? l : r) = true;
    if (!l || !r) add(out, "rules1.2", "color " + std::to_string(nu) + " misses a side");
  }
  for (std::size_t v = 0; v < V.size(); ++v) {
    if (c.vertex[v] == 0) continue;
    auto has = [&](const std::vector<std::size_t>& ids) {
      return std::any_of(ids.begin(), ids.end(), [&](std::size_t id) { return c.of_edge(id) == c.vertex[v]; });
    };
    if (!has(g.in_edges(v)) || !has(g.out_edges(v)))
      add(out, "rules1.3", vname(g, v) + " lacks an in- or out-edge of its color");
  }
  // Rule 4: a colored edge u -> v lies on a monochromatic circuit iff v
  // reaches u through edges of the same color.
  for (const auto& e : g.edges()) {
    const unsigned col = c.of_edge(e.id);
    if (col == 0) continue;
    std::vector<bool> seen(V.size(), false);
    std::vector<std::size_t> stack{e.to};
    seen[e.to] = true;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto id : g.out_edges(x)) {
        const auto& f = g.edge(id);
        if (c.of_edge(id) == col && !seen[f.to]) {
          seen[f.to] = true;
          stack.push_back(f.to);
        }
      }
    }
    if (!seen[e.from]) add(out, "rules1.4", "edge " + std::to_string(e.id) + " is on no circuit of its color");
  }
  return out;
}

std::vector<Violation> validate_loop(const AbstractGraph& g, const Coloring& c, const NLoop& loop) {
  std::vector<Violation> out;
  const std::string tag = "loop " + std::to_string(loop.color);
  if (loop.edges.size() < 2) add(out, "loop", tag + " has fewer than two edges");
  for (auto id : loop.edges)
    if (!g.has_edge(id)) {
      add(out, "loop", tag + " uses unknown edge " + std::to_string(id));
      return out;
    }
  for (std::size_t i = 0; i < loop.edges.size(); ++i) {
    const auto& a = g.edge(loop.edges[i]);
    const auto& b = g.edge(loop.edges[(i + 1) % loop.edges.size()]);
    if (a.to != b.from) add(out, "loop", tag + " is not a circuit at edge " + std::to_string(a.id));
  }
  auto vs = loop_vertices(g, loop);
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    add(out, "loop", tag + " revisits a vertex");
  if (loop.color == 0) add(out, "loop", tag + " is uncolored");
  for (auto id : loop.edges)
    if (c.of_edge(id) != loop.color)
      add(out, "loop", tag + " edge " + std::to_string(id) + " has color " + std::to_string(c.of_edge(id)));
  return out;
}

std::vector<Violation> validate(const AbstractGraph& g, const Coloring& c, const std::vector<NLoop>& loops) {
  auto out = validate_graph(g);
  auto more = validate_coloring(g, c);
  out.insert(out.end(), more.begin(), more.end());
  std::set<unsigned> colors;
  std::set<std::size_t> used;
  for (const auto& L : loops) {
    auto lv = validate_loop(g, c, L);
    out.insert(out.end(), lv.begin(), lv.end());
    if (!colors.insert(L.color).second) add(out, "loop", "two loops share color " + std::to_string(L.color));
    if (lv.empty())
      for (auto v : loop_vertices(g, L))
        if (!used.insert(v).second) add(out, "loop", "loops share vertex " + vname(g, v));
  }
  return out;
}

namespace {

struct MoveSite {
  std::size_t u, v;
};

MoveSite check_move(const AbstractGraph& g, const RbsMove& m) {
  const auto& e0 = g.edge(m.bispecial);
  const auto& V = g.vertices();
  if (V[e0.from].side != Side::left || V[e0.to].side != Side::right)
    throw Error("edge " + std::to_string(m.bispecial) + " is not bispecial");
  if (g.edge(m.entering).to != e0.from || m.entering == m.bispecial)
    throw Error("edge " + std::to_string(m.entering) + " does not enter the bispecial edge");
  if (g.edge(m.leaving).from != e0.to || m.leaving == m.bispecial)
    throw Error("edge " + std::to_string(m.leaving) + " does not leave the bispecial edge");
  return {e0.from, e0.to};
}

std::vector<std::size_t> ordered_choices(std::vector<std::size_t> ids, const NLoop* loop) {
  if (!loop) return ids;
  auto it = std::find_if(ids.begin(), ids.end(), [&](std::size_t id) {
    return std::find(loop->edges.begin(), loop->edges.end(), id) != loop->edges.end();
  });
  if (it != ids.end()) std::rotate(ids.begin(), it, it + 1);
  return ids;
}

}  // namespace

RbsMove rbs_from_indices(const AbstractGraph& g, std::size_t e0, std::size_t i0, std::size_t j0,
                         const NLoop* loop) {
  const auto& e = g.edge(e0);
  const auto ins = ordered_choices(g.in_edges(e.from), loop);
  const auto outs = ordered_choices(g.out_edges(e.to), loop);
  if (i0 < 1 || i0 > ins.size() || j0 < 1 || j0 > outs.size())
    throw Error("RBS choice out of range");
  RbsMove m{e0, ins[i0 - 1], outs[j0 - 1]};
  check_move(g, m);
  return m;
}

AbstractGraph rewire(const AbstractGraph& g, const RbsMove& m) {
  const auto [u, v] = check_move(g, m);
  std::vector<AbstractEdge> edges = g.edges();
  for (auto& e : edges) {
    if (e.id == m.bispecial) {
      e.from = v;
      e.to = u;
      continue;
    }
    // Each end is read off the auxiliary vertex it was attached to, then Psi.
    const bool enters_u = e.to == u, leaves_v = e.from == v;
    if (enters_u) e.to = e.id == m.entering ? v : u;
    if (leaves_v) e.from = e.id == m.leaving ? u : v;
  }
  return AbstractGraph(g.vertices(), std::move(edges), g.declared_K());
}

RbsResult apply_rbs(const AbstractGraph& g, const Coloring& c, const RbsMove& m) {
  const auto [u, v] = check_move(g, m);
  AbstractGraph next = rewire(g, m);
  if (!next.strongly_connected())
    throw Error("inadmissible RBS move on edge " + std::to_string(m.bispecial) +
                ": result not strongly connected");
  RbsResult res{std::move(next), c, true, {}};
  // Least change: reset the smallest subset of {u, v, e0} that validates.
  static constexpr unsigned kOrder[] = {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  for (unsigned mask : kOrder) {
    Coloring trial = c;
    if (mask & 1) trial.vertex[u] = 0;
    if (mask & 2) trial.vertex[v] = 0;
    if (mask & 4) trial.edge.erase(m.bispecial);
    if (validate_coloring(res.graph, trial).empty()) {
      res.coloring = std::move(trial);
      return res;
    }
  }
  res.coloring_valid = false;
  res.violations = validate_coloring(res.graph, c);
  return res;
}

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::twist: return "twist";
    case MoveKind::shrink_u: return "shrink-u";
    case MoveKind::shrink_v: return "shrink-v";
    case MoveKind::collapse: return "collapse";
    case MoveKind::outside: return "outside";
  }
  return "?";
}

MoveKind raw_move_kind(const AbstractGraph& g, const RbsMove& m, const NLoop& loop) {
  check_move(g, m);
  auto on = [&](std::size_t id) {
    return std::find(loop.edges.begin(), loop.edges.end(), id) != loop.edges.end();
  };
  if (!on(m.bispecial)) return MoveKind::outside;
  const bool i1 = on(m.entering), j1 = on(m.leaving);
  if (i1 && j1) return MoveKind::twist;
  if (i1) return MoveKind::shrink_u;
  if (j1) return MoveKind::shrink_v;
  return MoveKind::collapse;
}

MoveKind classify_move(const AbstractGraph& g, const RbsMove& m, const NLoop& loop) {
  const MoveKind k = raw_move_kind(g, m, loop);
  if (k != MoveKind::shrink_u && k != MoveKind::shrink_v) return k;
  if (loop.size() == 2) throw Error("shrink move never allowed in a 2-loop");
  const auto& e0 = g.edge(m.bispecial);
  const std::size_t ejected = k == MoveKind::shrink_u ? e0.from : e0.to;
  const Side side = g.vertices()[ejected].side;
  std::size_t same = 0;
  for (auto x : loop_vertices(g, loop))
    if (g.vertices()[x].side == side) ++same;
  if (same < 2)
    throw Error("shrink move ejects the only " + std::string(side_name(side)) +
                " special vertex of the loop");
  return k;
}

std::optional<NLoop> carry_loop(const AbstractGraph& before, const AbstractGraph& after,
                                const RbsMove& m, const NLoop& loop) {
  const MoveKind k = raw_move_kind(before, m, loop);
  if (k == MoveKind::collapse) return std::nullopt;
  std::vector<std::size_t> ids = loop.edges;
  if (k == MoveKind::shrink_u || k == MoveKind::shrink_v)
    ids.erase(std::find(ids.begin(), ids.end(), m.bispecial));
  NLoop out{loop.color, {ids.front()}};
  while (out.edges.size() < ids.size()) {
    const auto at = after.edge(out.edges.back()).to;
    auto it = std::find_if(ids.begin(), ids.end(), [&](std::size_t id) { return after.edge(id).from == at; });
    if (it == ids.end()) throw std::logic_error("carried loop is not a circuit");
    out.edges.push_back(*it);
  }
  if (after.edge(out.edges.back()).to != after.edge(out.edges.front()).from)
    throw std::logic_error("carried loop does not close");
  return out;
}

namespace {

const char* palette(unsigned color) {
  static const char* kPalette[] = {"black",  "red",    "blue",      "darkgreen", "orange",
                                   "purple", "brown",  "magenta",   "cyan4",     "gold3"};
  return kPalette[color % 10];
}

}  // namespace

std::string to_dot(const AbstractGraph& g, const Coloring* c, const std::vector<NLoop>& loops,
                   const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (std::size_t k = 0; k < loops.size(); ++k) {
    os << "  subgraph cluster_" << k << " {\n    label=\"loop " << loops[k].color << "\";\n";
    for (auto v : loop_vertices(g, loops[k])) {
      os << "    \"" << g.vertices()[v].name << "\";\n";
    }
    os << "  }\n";
  }
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const auto& x = g.vertices()[v];
    os << "  \"" << x.name << "\" [shape=" << (x.side == Side::left ? "box" : "ellipse");
    if (c && c->vertex[v] != 0) os << ", color=" << palette(c->vertex[v]);
    os << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  \"" << g.vertices()[e.from].name << "\" -> \"" << g.vertices()[e.to].name
       << "\" [label=\"" << e.id << "\"";
    if (c && c->of_edge(e.id) != 0) os << ", color=" << palette(c->of_edge(e.id));
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace symdyn
