#include "symdyn/search.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "symdyn/xi.hpp"

namespace symdyn {

std::vector<NLoop> simple_circuits(const AbstractGraph& g, std::size_t cap) {
  std::vector<NLoop> out;
  const std::size_t n = g.vertices().size();
  std::vector<bool> on_path(n, false);
  std::vector<std::size_t> path;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) {
    for (auto id : g.out_edges(v)) {
      if (out.size() >= cap) return;
      const auto w = g.edge(id).to;
      if (w == start && path.size() >= 1) {
        NLoop L{0, path};
        L.edges.push_back(id);
        if (L.edges.size() >= 2) out.push_back(std::move(L));
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        path.push_back(id);
        dfs(start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n && out.size() < cap; ++s) {
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  return out;
}

Coloring loop_coloring(const AbstractGraph& g, const std::vector<NLoop>& loops) {
  Coloring c = Coloring::blank(g, static_cast<unsigned>(loops.size()));
  for (std::size_t k = 0; k < loops.size(); ++k)
    for (auto id : loops[k].edges) {
      c.edge[id] = static_cast<unsigned>(k + 1);
      c.vertex[g.edge(id).from] = static_cast<unsigned>(k + 1);
    }
  return c;
}

namespace {

// Returns true when the family is attained; updates counters.
bool try_family(const AbstractGraph& g, std::vector<NLoop> family, ColoringSearch& res) {
  ++res.families_examined;
  for (std::size_t k = 0; k < family.size(); ++k) family[k].color = static_cast<unsigned>(k + 1);
  Coloring c = loop_coloring(g, family);
  if (!validate(g, c, family).empty()) return false;
  ++res.rules_valid;
  if (!bound_check(g, family).xi_connected) return false;
  res.found = true;
  res.loops = std::move(family);
  res.coloring = std::move(c);
  return true;
}

std::uint64_t vertex_mask(const AbstractGraph& g, const NLoop& L) {
  std::uint64_t m = 0;
  for (auto v : loop_vertices(g, L)) m |= std::uint64_t{1} << (v % 64);
  return m;
}

}  // namespace

ColoringSearch search_colorings(const AbstractGraph& g, unsigned E, const SearchOptions& opt) {
  ColoringSearch res;
  res.seed = opt.seed;
  if (E == 0) return res;
  auto circuits = simple_circuits(g, opt.family_cap);
  if (opt.max_loop_size != 0)
    std::erase_if(circuits, [&](const NLoop& L) { return L.size() > opt.max_loop_size; });
  std::vector<std::uint64_t> masks;
  for (const auto& L : circuits) masks.push_back(vertex_mask(g, L));

  if (g.vertices().size() <= opt.exhaustive_vertex_cap && g.vertices().size() <= 64) {
    res.exhaustive = circuits.size() < opt.family_cap;
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t used) {
      if (pick.size() == E) {
        std::vector<NLoop> fam;
        for (auto i : pick) fam.push_back(circuits[i]);
        return try_family(g, std::move(fam), res);
      }
      if (res.families_examined >= opt.family_cap) {
        res.exhaustive = false;
        return false;
      }
      for (std::size_t i = from; i < circuits.size(); ++i) {
        if (masks[i] & used) continue;
        pick.push_back(i);
        if (rec(i + 1, used | masks[i])) return true;
        pick.pop_back();
      }
      return false;
    };
    rec(0, 0);
    return res;
  }

  res.exhaustive = false;
  if (circuits.size() < E) return res;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, circuits.size() - 1);
  for (std::size_t s = 0; s < opt.random_samples; ++s) {
    std::vector<NLoop> fam;
    std::vector<std::size_t> used_v;
    bool ok = true;
    for (unsigned k = 0; k < E && ok; ++k) {
      const auto& L = circuits[pick(rng)];
      for (auto v : loop_vertices(g, L)) {
        if (std::find(used_v.begin(), used_v.end(), v) != used_v.end()) ok = false;
        used_v.push_back(v);
      }
      fam.push_back(L);
    }
    if (ok && try_family(g, std::move(fam), res)) break;
  }
  return res;
}

namespace {

// Non-increasing sequences of `parts` values >= 2 whose excesses over 1 sum to K.
void branch_sequences(long long K, std::size_t parts, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(long long, std::size_t)> rec = [&](long long left, std::size_t maxv) {
    if (cur.size() == parts) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const long long remaining_parts = static_cast<long long>(parts - cur.size());
    const long long hi = std::min(static_cast<long long>(maxv), left - remaining_parts + 2);
    for (long long dd = hi; dd >= 2; --dd) {
      const auto d = static_cast<std::size_t>(dd);
      cur.push_back(d);
      rec(left - static_cast<long long>(d - 1), d);
      cur.pop_back();
    }
  };
  if (static_cast<long long>(parts) <= K) rec(K, static_cast<std::size_t>(K + 1));
}

}  // namespace

std::vector<AbstractGraph> enumerate_abstract_graphs(long long K, std::size_t max_vertices) {
  std::vector<AbstractGraph> out;
  for (std::size_t Kl = 1; static_cast<long long>(Kl) <= K; ++Kl)
    for (std::size_t Kr = 1; static_cast<long long>(Kr) <= K; ++Kr) {
      const std::size_t n = Kl + Kr;
      if (n > max_vertices) continue;
      std::vector<std::vector<std::size_t>> lseq, rseq;
      branch_sequences(K, Kl, lseq);
      branch_sequences(K, Kr, rseq);
      std::vector<AbstractVertex> vs;
      for (std::size_t i = 0; i < Kl; ++i) vs.push_back({"L" + std::to_string(i + 1), Side::left});
      for (std::size_t i = 0; i < Kr; ++i) vs.push_back({"R" + std::to_string(i + 1), Side::right});
      for (const auto& ls : lseq)
        for (const auto& rs : rseq) {
          std::vector<std::size_t> outdeg(n), cap(n);
          for (std::size_t i = 0; i < Kl; ++i) {
            outdeg[i] = 1;
            cap[i] = ls[i];
          }
          for (std::size_t i = 0; i < Kr; ++i) {
            outdeg[Kl + i] = rs[i];
            cap[Kl + i] = 1;
          }
          std::vector<AbstractEdge> edges;
          // Vertex v picks a non-decreasing list of targets.
          std::function<void(std::size_t, std::size_t, std::size_t)> rec =
              [&](std::size_t v, std::size_t placed, std::size_t min_target) {
                if (v == n) {
                  AbstractGraph g(vs, edges);
                  if (g.strongly_connected()) out.push_back(std::move(g));
                  return;
                }
                if (placed == outdeg[v]) {
                  rec(v + 1, 0, 0);
                  return;
                }
                for (std::size_t t = min_target; t < n; ++t) {
                  if (t == v || cap[t] == 0) continue;
                  --cap[t];
                  edges.push_back({edges.size(), v, t});
                  rec(v, placed + 1, t);
                  edges.pop_back();
                  ++cap[t];
                }
              };
          rec(0, 0, 0);
        }
    }
  return out;
}

TightnessProbe tightness_probe(long long K, unsigned E, std::size_t max_vertices, const SearchOptions& opt) {
  TightnessProbe p;
  p.K = K;
  p.E = E;
  for (auto& g : enumerate_abstract_graphs(K, max_vertices)) {
    ++p.graphs_examined;
    auto s = search_colorings(g, E, opt);
    p.families_examined += s.families_examined;
    p.rules_valid += s.rules_valid;
    p.exhaustive = p.exhaustive && s.exhaustive;
    if (s.found) {
      p.found = true;
      p.graph = std::move(g);
      p.search = std::move(s);
      return p;
    }
  }
  return p;
}

}  // namespace symdyn
