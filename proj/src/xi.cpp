#include "symdyn/xi.hpp"

#include <algorithm>
#include <sstream>
#include <set>
#include <stdexcept>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

std::set<std::size_t> loop_edge_set(const std::vector<NLoop>& loops) {
  std::set<std::size_t> s;
  for (const auto& L : loops) s.insert(L.edges.begin(), L.edges.end());
  return s;
}

// Sorts components by least vertex and rebuilds tags accordingly.
ComponentTags canonical(std::vector<std::vector<std::size_t>> comps,
                        const std::vector<std::vector<std::size_t>>& loop_vs) {
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end());
  ComponentTags out;
  out.components = std::move(comps);
  for (const auto& c : out.components) {
    std::vector<std::vector<std::size_t>> tag;
    for (const auto& lv : loop_vs) {
      std::vector<std::size_t> s;
      for (auto x : lv)
        if (std::binary_search(c.begin(), c.end(), x)) s.push_back(x);
      std::sort(s.begin(), s.end());
      tag.push_back(std::move(s));
    }
    out.tags.push_back(std::move(tag));
  }
  return out;
}

std::optional<std::size_t> loop_of_edge(const std::vector<NLoop>& loops, std::size_t id) {
  for (std::size_t k = 0; k < loops.size(); ++k)
    if (std::find(loops[k].edges.begin(), loops[k].edges.end(), id) != loops[k].edges.end()) return k;
  return std::nullopt;
}

}  // namespace

ComponentTags components_and_tags(const AbstractGraph& g, const std::vector<NLoop>& loops) {
  const auto skip = loop_edge_set(loops);
  EdgeList rest;
  for (const auto& e : g.edges())
    if (!skip.count(e.id)) rest.emplace_back(e.from, e.to);
  const auto label = weak_components(g.vertices().size(), rest);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t v = 0; v < label.size(); ++v) {
    if (label[v] >= comps.size()) comps.resize(label[v] + 1);
    comps[label[v]].push_back(v);
  }
  std::vector<std::vector<std::size_t>> loop_vs;
  for (const auto& L : loops) loop_vs.push_back(loop_vertices(g, L));
  return canonical(std::move(comps), loop_vs);
}

const char* appendix_move_name(AppendixMove m) {
  switch (m) {
    case AppendixMove::A: return "A";
    case AppendixMove::B: return "B";
    case AppendixMove::C: return "C";
  }
  return "?";
}

MoveEffect move_effect(const AbstractGraph& g, const std::vector<NLoop>& loops, const RbsMove& m) {
  MoveEffect eff;
  const auto k = loop_of_edge(loops, m.bispecial);
  MoveKind mk = MoveKind::outside;
  if (k) {
    mk = classify_move(g, m, loops[*k]);
    if (mk == MoveKind::collapse) throw Error("move not of kind A/B/C (collapse)");
    eff.kind = mk == MoveKind::twist ? AppendixMove::A : AppendixMove::B;
  } else {
    raw_move_kind(g, m, NLoop{});  // validates the move
    eff.kind = AppendixMove::C;
  }
  eff.graph = rewire(g, m);
  if (!eff.graph.strongly_connected()) throw Error("inadmissible RBS move: result not strongly connected");
  eff.loops = loops;
  if (k) eff.loops[*k] = *carry_loop(g, eff.graph, m, loops[*k]);

  eff.before = components_and_tags(g, loops);
  eff.after = components_and_tags(eff.graph, eff.loops);
  eff.predicted = eff.before;
  if (eff.kind == AppendixMove::B) {
    const auto& e0 = g.edge(m.bispecial);
    eff.removed = mk == MoveKind::shrink_u ? e0.from : e0.to;
    auto comp_of = [&](std::size_t v) {
      for (std::size_t i = 0; i < eff.before.components.size(); ++i)
        if (std::binary_search(eff.before.components[i].begin(), eff.before.components[i].end(), v)) return i;
      throw std::logic_error("vertex without component");
    };
    eff.I1 = comp_of(e0.from);
    eff.I2 = comp_of(e0.to);
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> merged;
    for (std::size_t i = 0; i < eff.before.components.size(); ++i) {
      if (i == eff.I1 || i == eff.I2)
        merged.insert(merged.end(), eff.before.components[i].begin(), eff.before.components[i].end());
      else
        comps.push_back(eff.before.components[i]);
    }
    comps.push_back(merged);
    std::vector<std::vector<std::size_t>> loop_vs;
    for (const auto& L : eff.loops) loop_vs.push_back(loop_vertices(eff.graph, L));
    eff.predicted = canonical(std::move(comps), loop_vs);
    std::sort(merged.begin(), merged.end());
    eff.J = static_cast<std::size_t>(
        std::find(eff.predicted.components.begin(), eff.predicted.components.end(), merged) -
        eff.predicted.components.begin());
  }
  eff.unchanged = eff.after == eff.before;
  eff.matches = eff.after == eff.predicted;
  return eff;
}

XiGraph build_xi(const AbstractGraph& g, const std::vector<NLoop>& loops, const std::vector<RbsMove>& moves) {
  XiGraph xi;
  xi.E = static_cast<unsigned>(loops.size());
  xi.K = static_cast<long long>(g.edges().size()) - static_cast<long long>(g.vertices().size());
  AbstractGraph cur = g;
  std::vector<NLoop> cur_loops = loops;
  for (const auto& m : moves) {
    const auto k = loop_of_edge(cur_loops, m.bispecial);
    if (!k) continue;
    const MoveKind kind = classify_move(cur, m, cur_loops[*k]);
    if (kind == MoveKind::collapse) throw Error("collapse move in the loop move log");
    AbstractGraph next = rewire(cur, m);
    cur_loops[*k] = *carry_loop(cur, next, m, cur_loops[*k]);
    cur = std::move(next);
    ++xi.moves_applied;
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const auto& V = cur.vertices();
  std::vector<std::size_t> psi(V.size(), kNone);
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < cur_loops.size(); ++k)
    for (auto v : loop_vertices(cur, cur_loops[k])) psi[v] = k;  // temporarily the loop index
  std::vector<std::size_t> image(V.size());
  for (std::size_t v = 0; v < V.size(); ++v)
    if (psi[v] == kNone) {
      image[v] = xi.vertices.size();
      xi.vertices.push_back(V[v].name);
    }
  const std::size_t base = xi.vertices.size();
  for (const auto& L : cur_loops) {
    xi.vertices.push_back(std::to_string(L.color) + "_l");
    xi.vertices.push_back(std::to_string(L.color) + "_r");
  }
  for (std::size_t v = 0; v < V.size(); ++v)
    if (psi[v] != kNone) image[v] = base + 2 * psi[v] + (V[v].side == Side::left ? 0 : 1);

  const auto skip = loop_edge_set(cur_loops);
  for (const auto& e : cur.edges()) {
    if (skip.count(e.id)) continue;
    xi.edges.emplace_back(image[e.from], image[e.to]);
    xi.edge_ids.push_back(e.id);
  }
  const long long lhs = static_cast<long long>(xi.edges.size()) - static_cast<long long>(xi.vertices.size());
  if (lhs != xi.K - 2 * static_cast<long long>(xi.E))
    throw std::logic_error("Xi edge/vertex identity failed: " + std::to_string(lhs) + " vs " +
                           std::to_string(xi.K - 2 * static_cast<long long>(xi.E)));
  xi.lambda_star = std::move(cur);
  xi.loops_star = std::move(cur_loops);
  return xi;
}

BoundReport bound_check(const AbstractGraph& g, const std::vector<NLoop>& loops, const std::vector<RbsMove>& moves) {
  const XiGraph xi = build_xi(g, loops, moves);
  BoundReport r;
  r.E = xi.E;
  r.K = xi.K;
  r.xi_edges = static_cast<long long>(xi.edges.size());
  r.xi_vertices = static_cast<long long>(xi.vertices.size());
  const auto label = weak_components(xi.vertices.size(), xi.edges);
  r.xi_connected = weakly_connected(xi.vertices.size(), xi.edges);
  r.bound_satisfied = 2 * static_cast<long long>(r.E) <= r.K + 1;
  // A connected graph needs at least |V| - 1 edges.
  r.counting_ok = !r.xi_connected || r.xi_edges >= r.xi_vertices - 1;
  if (!r.xi_connected) {
    for (std::size_t v = 0; v < label.size(); ++v) {
      if (label[v] >= r.cut.size()) r.cut.resize(label[v] + 1);
      r.cut[label[v]].push_back(xi.vertices[v]);
    }
    r.note = r.xi_edges < r.xi_vertices - 1
                 ? "Xi has too few edges to be connected; this many loops cannot occur"
                 : "Xi is disconnected; the coloring or the move log breaks the loop rules";
  }
  return r;
}

std::vector<CandidateMove> candidate_moves(const AbstractGraph& g, const std::vector<NLoop>& loops) {
  std::vector<CandidateMove> out;
  auto admissible = [&](const RbsMove& m) { return rewire(g, m).strongly_connected(); };
  for (auto e0 : g.bispecial_edges()) {
    const auto& e = g.edge(e0);
    const auto ins = g.in_edges(e.from), outs = g.out_edges(e.to);
    const auto k = loop_of_edge(loops, e0);
    for (auto i : ins)
      for (auto j : outs) {
        RbsMove m{e0, i, j};
        AppendixMove kind = AppendixMove::C;
        if (k) {
          MoveKind mk;
          try {
            mk = classify_move(g, m, loops[*k]);
          } catch (const Error&) {
            continue;
          }
          if (mk == MoveKind::collapse) continue;
          kind = mk == MoveKind::twist ? AppendixMove::A : AppendixMove::B;
        }
        if (admissible(m)) out.push_back({m, kind});
      }
  }
  return out;
}

std::optional<LoopInstance> random_loop_instance(std::mt19937_64& rng, const InstanceParams& p) {
  if (p.E == 0 || static_cast<long long>(p.E) > p.K) return std::nullopt;
  auto uniform = [&](long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  };
  for (std::size_t attempt = 0; attempt < p.max_tries; ++attempt) {
    const auto Kl = static_cast<std::size_t>(uniform(p.E, p.K));
    const auto Kr = static_cast<std::size_t>(uniform(p.E, p.K));
    const std::size_t n = Kl + Kr;
    // Branching degree: in-degree for left vertices, out-degree for right.
    std::vector<std::size_t> branch(n, 2);
    for (long long x = 0; x < p.K - static_cast<long long>(Kl); ++x) ++branch[uniform(0, Kl - 1)];
    for (long long x = 0; x < p.K - static_cast<long long>(Kr); ++x) ++branch[Kl + uniform(0, Kr - 1)];

    std::vector<std::size_t> lefts(Kl), rights(Kr);
    for (std::size_t i = 0; i < Kl; ++i) lefts[i] = i;
    for (std::size_t i = 0; i < Kr; ++i) rights[i] = Kl + i;
    std::shuffle(lefts.begin(), lefts.end(), rng);
    std::shuffle(rights.begin(), rights.end(), rng);
    std::vector<std::vector<std::size_t>> members(p.E);
    for (unsigned k = 0; k < p.E; ++k) members[k] = {lefts[k], rights[k]};
    for (std::size_t i = p.E; i < Kl; ++i)
      if (uniform(0, 2) == 0) members[uniform(0, p.E - 1)].push_back(lefts[i]);
    for (std::size_t i = p.E; i < Kr; ++i)
      if (uniform(0, 2) == 0) members[uniform(0, p.E - 1)].push_back(rights[i]);

    std::vector<std::size_t> out_rem(n), in_rem(n);
    for (std::size_t v = 0; v < n; ++v) {
      out_rem[v] = v < Kl ? 1 : branch[v];
      in_rem[v] = v < Kl ? branch[v] : 1;
    }
    std::vector<AbstractEdge> edges;
    std::vector<NLoop> loops;
    for (unsigned k = 0; k < p.E; ++k) {
      auto& mem = members[k];
      std::shuffle(mem.begin(), mem.end(), rng);
      NLoop L{k + 1, {}};
      for (std::size_t i = 0; i < mem.size(); ++i) {
        const auto a = mem[i], b = mem[(i + 1) % mem.size()];
        L.edges.push_back(edges.size());
        edges.push_back({edges.size(), a, b});
        --out_rem[a];
        --in_rem[b];
      }
      loops.push_back(std::move(L));
    }
    std::vector<std::size_t> outs, ins;
    for (std::size_t v = 0; v < n; ++v) {
      outs.insert(outs.end(), out_rem[v], v);
      ins.insert(ins.end(), in_rem[v], v);
    }
    if (outs.size() != ins.size()) throw std::logic_error("stub counts differ");
    std::shuffle(ins.begin(), ins.end(), rng);
    bool ok = true;
    for (std::size_t i = 0; i < outs.size() && ok; ++i) {
      if (outs[i] == ins[i]) ok = false;
      edges.push_back({edges.size(), outs[i], ins[i]});
    }
    if (!ok) continue;
    std::vector<AbstractVertex> vs;
    for (std::size_t v = 0; v < n; ++v)
      vs.push_back(v < Kl ? AbstractVertex{"L" + std::to_string(v + 1), Side::left}
                          : AbstractVertex{"R" + std::to_string(v - Kl + 1), Side::right});
    AbstractGraph g(std::move(vs), std::move(edges));
    if (!g.strongly_connected()) continue;
    Coloring c = Coloring::blank(g, p.E);
    for (const auto& L : loops)
      for (auto id : L.edges) {
        c.edge[id] = L.color;
        c.vertex[g.edge(id).from] = L.color;
      }
    return LoopInstance{std::move(g), std::move(loops), std::move(c)};
  }
  return std::nullopt;
}

std::string to_dot(const XiGraph& xi, const std::string& name) {
  const std::size_t kept = xi.vertices.size() - 2 * xi.loops_star.size();
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < xi.vertices.size(); ++v) {
    os << "  \"" << xi.vertices[v] << "\"";
    if (v >= kept) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (std::size_t k = 0; k < xi.edges.size(); ++k)
    os << "  \"" << xi.vertices[xi.edges[k].first] << "\" -- \"" << xi.vertices[xi.edges[k].second]
       << "\" [label=\"" << xi.edge_ids[k] << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace symdyn
