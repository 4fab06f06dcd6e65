#include "symdyn/rauzy.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "symdyn/error.hpp"

namespace symdyn {

std::optional<std::size_t> RauzyGraph::index_of(const Word& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

RauzyGraph build_rauzy(const LanguageOracle& oracle, std::size_t n) {
  if (n < 1) throw Error("Rauzy graph order must be at least 1");
  if (n + 2 > oracle.horizon()) throw HorizonExceeded("Rauzy graph of order " + std::to_string(n), n + 2);
  RauzyGraph g;
  g.n = n;
  g.vertices = oracle.factors(n);
  g.edges = oracle.factors(n + 1);
  g.in_adj.resize(g.vertices.size());
  g.out_adj.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    const auto a = g.index_of(e.sub(1, n)), b = g.index_of(e.sub(2, n + 1));
    if (!a || !b) throw std::logic_error("language is not factorial");
    g.ends.emplace_back(*a, *b);
    g.out_adj[*a].push_back(i);
    g.in_adj[*b].push_back(i);
  }
  return g;
}

std::optional<std::size_t> SpecialRauzyGraph::vertex_of(const Word& w, Side tag) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].word == w && vertices[i].tag == tag) return i;
  return std::nullopt;
}

std::optional<std::size_t> SpecialRauzyGraph::edge_of(const Word& path) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].path == path) return i;
  return std::nullopt;
}

EdgeList SpecialRauzyGraph::edge_list() const {
  EdgeList out;
  for (const auto& e : edges) out.emplace_back(e.from, e.to);
  return out;
}

SpecialRauzyGraph build_special_rauzy(const LanguageOracle& oracle, std::size_t n) {
  return build_special_rauzy(oracle, build_rauzy(oracle, n));
}

SpecialRauzyGraph build_special_rauzy(const LanguageOracle& oracle, const RauzyGraph& g) {
  SpecialRauzyGraph sp;
  sp.n = g.n;
  sp.alphabet = oracle.alphabet();
  sp.K = static_cast<long long>(g.edges.size()) - static_cast<long long>(g.vertices.size());
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> left_idx(g.vertices.size(), kNone), right_idx(g.vertices.size(), kNone);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const bool ls = g.left_special(v), rs = g.right_special(v);
    if (ls) {
      left_idx[v] = sp.vertices.size();
      sp.vertices.push_back({g.vertices[v], Side::left, ls && rs});
      ++sp.K_left;
    }
    if (rs) {
      right_idx[v] = sp.vertices.size();
      sp.vertices.push_back({g.vertices[v], Side::right, ls && rs});
      ++sp.K_right;
    }
  }
  auto arrival = [&](std::size_t v) { return g.left_special(v) ? left_idx[v] : right_idx[v]; };
  auto walk = [&](std::size_t from_vertex, std::size_t first_edge) {
    SpecialEdge e;
    e.from = from_vertex;
    e.path = g.edges[first_edge];
    std::size_t cur = g.ends[first_edge].second;
    std::size_t steps = 0;
    while (!g.special(cur)) {
      if (++steps > g.vertices.size()) {
        sp.partial = true;
        return std::optional<SpecialEdge>{};
      }
      const auto next = g.out_adj[cur].front();
      e.path.push_back(g.edges[next].back());
      cur = g.ends[next].second;
    }
    e.to = arrival(cur);
    return std::optional<SpecialEdge>{e};
  };
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!g.special(v)) continue;
    if (g.left_special(v) && g.right_special(v))
      sp.edges.push_back({left_idx[v], right_idx[v], g.vertices[v], true});
    const std::size_t dep = g.right_special(v) ? right_idx[v] : left_idx[v];
    for (auto id : g.out_adj[v])
      if (auto e = walk(dep, id)) sp.edges.push_back(*e);
  }
  std::sort(sp.edges.begin(), sp.edges.end(), [](const SpecialEdge& a, const SpecialEdge& b) {
    return std::tie(a.from, a.path) < std::tie(b.from, b.path);
  });
  for (const auto& e : sp.edges)
    if (e.from == e.to) sp.has_self_loop = true;
  return sp;
}

Connectivity connectivity(const RauzyGraph& g) {
  return {strongly_connected(g.vertices.size(), g.ends), weakly_connected(g.vertices.size(), g.ends)};
}

Connectivity connectivity(const SpecialRauzyGraph& g) {
  const auto el = g.edge_list();
  return {strongly_connected(g.vertices.size(), el), weakly_connected(g.vertices.size(), el)};
}

std::optional<std::vector<Word>> special_free_circuit(const RauzyGraph& g, Side side) {
  auto excluded = [&](std::size_t v) { return side == Side::left ? g.left_special(v) : g.right_special(v); };
  EdgeList kept;
  for (auto [a, b] : g.ends)
    if (!excluded(a) && !excluded(b)) kept.emplace_back(a, b);
  auto cyc = find_circuit(g.vertices.size(), kept);
  if (!cyc) return std::nullopt;
  std::vector<Word> out;
  for (auto v : *cyc) out.push_back(g.vertices[v]);
  return out;
}

namespace {

std::vector<std::pair<std::size_t, Word>> windows_of(const Word& path, std::size_t n, bool skip_first,
                                                     bool skip_last) {
  std::vector<std::pair<std::size_t, Word>> out;
  const std::size_t last = path.size() - n + 1;
  for (std::size_t j = 1; j <= last; ++j) {
    if ((skip_first && j == 1) || (skip_last && j == last)) continue;
    out.emplace_back(j, path.sub(j, j + n - 1));
  }
  return out;
}

}  // namespace

RepresentativeSet representatives(const LanguageOracle& oracle, const SpecialRauzyGraph& g, std::size_t edge) {
  const auto& e = g.edges.at(edge);
  RepresentativeSet rs;
  rs.internal = e.internal;
  rs.windows = windows_of(e.path, g.n, g.vertices[e.from].tag == Side::right,
                          g.vertices[e.to].tag == Side::left);
  if (e.internal) {
    const auto verdict = is_regular_bispecial(oracle, e.path);
    if (!verdict.regular) throw Error("internal edge of an irregular bispecial: " + verdict.violation);
    rs.rewritten = *verdict.a_hat + e.path + *verdict.b_hat;
    // In Gamma_{n+1} the rewritten edge leaves a right tag and enters a left tag.
    rs.rewritten_windows = windows_of(rs.rewritten, g.n + 1, true, true);
  }
  return rs;
}

std::vector<std::pair<int, std::size_t>> type_profile(const SpecialRauzyGraph& g) {
  std::vector<std::size_t> in(g.vertices.size(), 0), out(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    ++out[e.from];
    ++in[e.to];
  }
  std::vector<std::pair<int, std::size_t>> prof;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    prof.emplace_back(g.vertices[v].tag == Side::left ? 0 : 1, g.vertices[v].tag == Side::left ? in[v] : out[v]);
  std::sort(prof.begin(), prof.end());
  return prof;
}

namespace {

// One identification step m -> m+1.
struct StepMaps {
  std::vector<std::size_t> vertex, edge;
};

class Stepper {
 public:
  Stepper(const SpecialRauzyGraph& cur, const RauzyGraph& gm, const RauzyGraph& gnext)
      : cur_(cur), gm_(gm), g1_(gnext) {}

  StepMaps run(const SpecialRauzyGraph& next) {
    StepMaps maps;
    for (const auto& v : cur_.vertices) {
      const Word image = v.tag == Side::left ? left_image(v.word) : right_image(v.word);
      const auto idx = next.vertex_of(image, v.tag);
      if (!idx) throw std::logic_error("identified vertex missing at the next length");
      maps.vertex.push_back(*idx);
    }
    std::vector<bool> hit(next.edges.size(), false);
    for (const auto& e : cur_.edges) {
      const Word p = rewrite(e);
      const auto idx = next.edge_of(p);
      if (!idx) throw std::logic_error("rewritten path is not an edge at the next length");
      if (hit[*idx]) throw std::logic_error("two edges rewrite to the same path");
      hit[*idx] = true;
      maps.edge.push_back(*idx);
    }
    if (maps.edge.size() != next.edges.size()) throw std::logic_error("edge identification is not onto");
    return maps;
  }

 private:
  bool ls(const Word& w) const { return gm_.left_special(*gm_.index_of(w)); }
  bool rs(const Word& w) const { return gm_.right_special(*gm_.index_of(w)); }

  // Unique left special of length m+1 with prefix w.
  Word left_image(const Word& w) const {
    std::optional<Word> found;
    for (auto id : gm_.out_adj[*gm_.index_of(w)]) {
      const Word& x = gm_.edges[id];
      if (g1_.left_special(*g1_.index_of(x))) {
        if (found) throw Error("RBC violation: two left special extensions of a left special word");
        found = x;
      }
    }
    if (!found) throw Error("RBC violation: left special word without left special extension");
    return *found;
  }

  Word right_image(const Word& w) const {
    std::optional<Word> found;
    for (auto id : gm_.in_adj[*gm_.index_of(w)]) {
      const Word& x = gm_.edges[id];
      if (g1_.right_special(*g1_.index_of(x))) {
        if (found) throw Error("RBC violation: two right special extensions of a right special word");
        found = x;
      }
    }
    if (!found) throw Error("RBC violation: right special word without right special extension");
    return *found;
  }

  Word rewrite(const SpecialEdge& e) const {
    const std::size_t m = cur_.n;
    if (e.internal) return right_image(e.path).front() + e.path + left_image(e.path).back();
    Word p = e.path;
    const Word w = p.sub(1, m), z = p.sub(p.size() - m + 1, p.size());
    if (ls(w) && rs(w)) {
      std::size_t y = *g1_.index_of(p.sub(1, m + 1));
      std::size_t steps = 0;
      while (!g1_.special(y)) {
        if (++steps > g1_.vertices.size()) throw std::logic_error("backward walk without a special word");
        const auto id = g1_.in_adj[y].front();
        p = g1_.edges[id].front() + p;
        y = g1_.ends[id].first;
      }
    } else if (rs(w)) {
      p = right_image(w).front() + p;
    }
    if (ls(z) && rs(z)) {
      std::size_t y = *g1_.index_of(e.path.sub(e.path.size() - m, e.path.size()));
      std::size_t steps = 0;
      while (!g1_.special(y)) {
        if (++steps > g1_.vertices.size()) throw std::logic_error("forward walk without a special word");
        const auto id = g1_.out_adj[y].front();
        p.push_back(g1_.edges[id].back());
        y = g1_.ends[id].second;
      }
    } else if (ls(z)) {
      p.push_back(left_image(z).back());
    }
    return p;
  }

  const SpecialRauzyGraph& cur_;
  const RauzyGraph& gm_;
  const RauzyGraph& g1_;
};

std::string vertex_label(const SpecialRauzyGraph& g, std::size_t v) {
  return g.alphabet.render(g.vertices[v].word) + (g.vertices[v].tag == Side::left ? "|l" : "|r");
}

bool endpoints_match(const AbstractGraph& a, const EvolutionStep& st) {
  for (std::size_t e = 0; e < st.before.edges.size(); ++e) {
    const auto& x = a.edge(e);
    const auto& y = st.after.edges[st.edge_map[e]];
    if (st.vertex_map[x.from] != y.from || st.vertex_map[x.to] != y.to) return false;
  }
  return true;
}

}  // namespace

EvolutionStep evolve(const LanguageOracle& oracle, std::size_t n) {
  const std::size_t H = oracle.horizon();
  std::optional<std::size_t> n_tilde;
  std::size_t m = n;
  for (; m + 3 <= H; ++m)
    if (!special_words(oracle, m, SpecialKind::bi).empty()) {
      n_tilde = m;
      break;
    }
  if (!n_tilde)
    throw HorizonExceeded("no bispecial word of length >= " + std::to_string(n) + " within the horizon", m + 3);
  const auto rbc = check_rbc(oracle, n, *n_tilde);
  if (!rbc.holds)
    throw Error("RBC violation in [" + std::to_string(n) + ", " + std::to_string(*n_tilde) +
                "]: " + oracle.alphabet().render(rbc.violations.front().word) + " " + rbc.violations.front().reason);

  EvolutionStep st;
  st.n = n;
  st.n_tilde = *n_tilde;
  st.n_next = *n_tilde + 1;
  RauzyGraph gm = build_rauzy(oracle, n);
  SpecialRauzyGraph cur = build_special_rauzy(oracle, gm);
  st.before = cur;
  st.vertex_map.resize(cur.vertices.size());
  st.edge_map.resize(cur.edges.size());
  for (std::size_t i = 0; i < st.vertex_map.size(); ++i) st.vertex_map[i] = i;
  for (std::size_t i = 0; i < st.edge_map.size(); ++i) st.edge_map[i] = i;

  for (std::size_t len = n; len <= st.n_tilde; ++len) {
    RauzyGraph g1 = build_rauzy(oracle, len + 1);
    SpecialRauzyGraph next = build_special_rauzy(oracle, g1);
    if (len == st.n_tilde) {
      std::vector<std::size_t> back(cur.edges.size());
      for (std::size_t e = 0; e < st.edge_map.size(); ++e) back[st.edge_map[e]] = e;
      for (std::size_t v = 0; v < cur.vertices.size(); ++v) {
        const auto& sv = cur.vertices[v];
        if (!sv.bispecial || sv.tag != Side::left) continue;
        const auto verdict = is_regular_bispecial(oracle, sv.word);
        const std::size_t right = *cur.vertex_of(sv.word, Side::right);
        RbsEvent ev{sv.word, *verdict.a_hat, *verdict.b_hat, 0, 0, 0, 0, 0};
        std::size_t in_rank = 0, out_rank = 0, found = 0;
        for (std::size_t e = 0; e < cur.edges.size(); ++e) {
          const auto& ce = cur.edges[e];
          if (ce.internal && ce.from == v) {
            ev.internal_edge = back[e];
            ++found;
          }
          if (ce.to == v) {
            ++in_rank;
            if (ce.path.at(ce.path.size() - len) == ev.a_hat) {
              ev.entering_edge = back[e];
              ev.i0 = in_rank;
              ++found;
            }
          }
          if (ce.from == right) {
            ++out_rank;
            if (ce.path.at(len + 1) == ev.b_hat) {
              ev.leaving_edge = back[e];
              ev.j0 = out_rank;
              ++found;
            }
          }
        }
        if (found != 3) throw std::logic_error("bispecial edge neighbourhood is malformed");
        st.events.push_back(std::move(ev));
      }
    }
    const StepMaps maps = Stepper(cur, gm, g1).run(next);
    if (len < st.n_tilde)
      for (std::size_t e = 0; e < cur.edges.size(); ++e) {
        const auto& a = cur.edges[e];
        const auto& b = next.edges[maps.edge[e]];
        if (maps.vertex[a.from] != b.from || maps.vertex[a.to] != b.to)
          throw std::logic_error("special Rauzy graph changed without a bispecial word at length " +
                                 std::to_string(len) + ": " + oracle.alphabet().render(a.path) + " -> " +
                                 oracle.alphabet().render(b.path));
      }
    for (auto& x : st.vertex_map) x = maps.vertex[x];
    for (auto& x : st.edge_map) x = maps.edge[x];
    cur = std::move(next);
    gm = std::move(g1);
  }
  st.after = std::move(cur);

  const AbstractGraph start = to_abstract(st.before);
  auto apply_all = [&](bool reverse) {
    AbstractGraph a = start;
    std::vector<RbsEvent> evs = st.events;
    if (reverse) std::reverse(evs.begin(), evs.end());
    for (const auto& ev : evs) a = rewire(a, RbsMove{ev.internal_edge, ev.entering_edge, ev.leaving_edge});
    return a;
  };
  const AbstractGraph forward = apply_all(false), backward = apply_all(true);
  st.matches_moves = endpoints_match(forward, st);
  st.order_independent = endpoints_match(backward, st) && forward.same_structure(backward);
  if (!st.matches_moves || !st.order_independent)
    throw std::logic_error("evolved graph disagrees with the bispecial moves");
  st.profile_preserved = type_profile(st.before) == type_profile(st.after);
  return st;
}

AbstractGraph to_abstract(const SpecialRauzyGraph& g) {
  std::vector<AbstractVertex> vs;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) vs.push_back({vertex_label(g, v), g.vertices[v].tag});
  std::vector<AbstractEdge> es;
  for (std::size_t i = 0; i < g.edges.size(); ++i) es.push_back({i, g.edges[i].from, g.edges[i].to});
  return AbstractGraph(std::move(vs), std::move(es), g.K);
}

std::string to_dot(const RauzyGraph& g, const Alphabet& alphabet, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (const auto& v : g.vertices) os << "  \"" << alphabet.render(v) << "\";\n";
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    os << "  \"" << alphabet.render(g.vertices[g.ends[i].first]) << "\" -> \""
       << alphabet.render(g.vertices[g.ends[i].second]) << "\" [label=\"" << alphabet.render(g.edges[i])
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const SpecialRauzyGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    os << "  \"" << vertex_label(g, v) << "\" [shape=" << (g.vertices[v].tag == Side::left ? "box" : "ellipse")
       << "];\n";
  for (const auto& e : g.edges)
    os << "  \"" << vertex_label(g, e.from) << "\" -> \"" << vertex_label(g, e.to) << "\" [label=\""
       << e.path.size() << "\"" << (e.internal ? ", style=dashed" : "") << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace symdyn
