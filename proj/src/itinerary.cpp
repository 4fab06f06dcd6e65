#include "symdyn/itinerary.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

using json = nlohmann::json;

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

const NLoop* by_color(const std::vector<NLoop>& loops, unsigned color) {
  for (const auto& L : loops)
    if (L.color == color) return &L;
  return nullptr;
}

struct LoopTrack {
  NLoop loop;
  bool twisted_after_shrink = false;
  bool shrunk = false;
  bool broken = false;  // collapse or inadmissible shrink
  std::vector<std::size_t> ejected;
};

}  // namespace

ItineraryVerdict itinerary_check(const Itinerary& it) {
  ItineraryVerdict v;
  auto flag = [&](std::string item, std::size_t step, const std::string& detail) {
    v.violations.push_back({std::move(item), "step " + std::to_string(step) + ": " + detail});
  };
  if (it.steps.empty()) {
    v.valid = false;
    v.violations.push_back({"itinerary.7", "no steps"});
    return v;
  }
  if (it.moves.size() + 1 != it.steps.size()) {
    v.valid = false;
    v.violations.push_back({"itinerary.1", "expected one move list per step transition"});
    return v;
  }
  const std::size_t M = it.moves.size();
  for (std::size_t i = 0; i <= M; ++i) {
    const auto& s = it.steps[i];
    for (const auto& x : validate(s.graph, s.coloring, s.loops)) flag(x.item, i, x.detail);
    if (i < M && s.loops.empty()) flag("itinerary.7", i, "no loops followed before the last step");
    if (i == M && !s.loops.empty()) flag("itinerary.7", i, "loops still followed at the last step");
  }

  for (std::size_t i = 0; i < M; ++i) {
    const auto& s = it.steps[i];
    const auto& t = it.steps[i + 1];
    std::vector<LoopTrack> tracks;
    for (const auto& L : s.loops) tracks.push_back({L, false, false, false, {}});
    AbstractGraph g = s.graph;
    bool moves_ok = true;
    for (const auto& m : it.moves[i]) {
      LoopTrack* tr = nullptr;
      for (auto& x : tracks)
        if (!x.broken && std::find(x.loop.edges.begin(), x.loop.edges.end(), m.bispecial) != x.loop.edges.end())
          tr = &x;
      AbstractGraph next;
      try {
        next = rewire(g, m);
      } catch (const Error& e) {
        flag("itinerary.1", i, e.what());
        moves_ok = false;
        break;
      }
      if (!next.strongly_connected()) flag("itinerary.1", i, "inadmissible move on edge " + std::to_string(m.bispecial));
      if (tr) {
        MoveKind kind;
        try {
          kind = classify_move(g, m, tr->loop);
        } catch (const Error& e) {
          flag("itinerary.2", i, "loop " + std::to_string(tr->loop.color) + ": " + e.what());
          kind = raw_move_kind(g, m, tr->loop);
        }
        if (kind == MoveKind::collapse) {
          flag("itinerary.2", i, "collapse move on loop " + std::to_string(tr->loop.color));
          tr->broken = true;
        } else {
          if (kind == MoveKind::twist && tr->shrunk) tr->twisted_after_shrink = true;
          if (kind == MoveKind::shrink_u || kind == MoveKind::shrink_v) {
            tr->shrunk = true;
            const auto& e0 = g.edge(m.bispecial);
            tr->ejected.push_back(kind == MoveKind::shrink_u ? e0.from : e0.to);
          }
          v.loop_moves.push_back(m);
          tr->loop = *carry_loop(g, next, m, tr->loop);
        }
      }
      g = std::move(next);
    }
    if (!moves_ok) continue;
    if (!g.same_structure(t.graph)) flag("itinerary.1", i, "moves do not produce the next graph");

    bool any_event = false;
    std::vector<NLoop> expected_next;
    for (auto& tr : tracks) {
      if (tr.broken) continue;
      const unsigned nu = tr.loop.color;
      if (tr.twisted_after_shrink) flag("itinerary.4", i, "twist after shrink on loop " + std::to_string(nu));
      const auto lv = loop_vertices(t.graph, tr.loop);
      const auto ledges = as_set(tr.loop.edges);
      bool preserved = true;
      for (auto id : tr.loop.edges)
        if (t.coloring.of_edge(id) != nu) preserved = false;
      std::vector<std::size_t> in_edges, out_edges;
      for (const auto& e : t.graph.edges()) {
        if (ledges.count(e.id) || t.coloring.of_edge(e.id) != nu) continue;
        if (std::find(lv.begin(), lv.end(), e.to) != lv.end()) in_edges.push_back(e.id);
        if (std::find(lv.begin(), lv.end(), e.from) != lv.end()) out_edges.push_back(e.id);
      }
      const bool spread = preserved && !in_edges.empty() && !out_edges.empty();
      if (spread && tr.shrunk)
        flag("itinerary.3", i, "loop " + std::to_string(nu) + " both shrinks and spreads");
      if (tr.shrunk) v.events.push_back({i, nu, LoopEventKind::shrink, tr.ejected, {}});
      if (spread) {
        std::vector<std::size_t> ids = in_edges;
        ids.insert(ids.end(), out_edges.begin(), out_edges.end());
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        v.events.push_back({i, nu, LoopEventKind::spread, {}, ids});
      }
      any_event = any_event || spread || tr.shrunk;
      for (auto x : tr.ejected)
        if (t.coloring.vertex[x] != 0)
          flag("itinerary.6", i, "ejected vertex " + t.graph.vertices()[x].name + " keeps a color");
      // Colors on the carried loop must match the previous coloring.
      for (auto id : tr.loop.edges)
        if (t.coloring.of_edge(id) != s.coloring.of_edge(id))
          flag("itinerary.6", i, "loop " + std::to_string(nu) + " edge " + std::to_string(id) + " changes color");
      for (auto x : lv)
        if (t.coloring.vertex[x] != s.coloring.vertex[x])
          flag("itinerary.6", i, "loop " + std::to_string(nu) + " vertex " + t.graph.vertices()[x].name +
                                     " changes color");
      if (!spread) expected_next.push_back(tr.loop);
    }
    if (!any_event) flag("itinerary.3", i, "no loop shrinks or spreads");

    auto key = [](const std::vector<NLoop>& ls) {
      std::map<unsigned, std::set<std::size_t>> k;
      for (const auto& L : ls) k[L.color] = as_set(L.edges);
      return k;
    };
    if (key(expected_next) != key(t.loops)) flag("itinerary.5", i, "followed loops do not match the events");
  }
  v.valid = v.violations.empty();
  return v;
}

RestrictedItinerary restrict_itinerary(const Itinerary& it, const std::vector<unsigned>& colors) {
  if (it.steps.empty()) throw Error("empty itinerary");
  for (auto c : colors)
    if (!by_color(it.steps[0].loops, c)) throw Error("color " + std::to_string(c) + " is not followed at step 0");
  const auto verdict = itinerary_check(it);
  auto keep = [&](const std::vector<NLoop>& ls) {
    std::vector<NLoop> out;
    for (const auto& L : ls)
      if (std::find(colors.begin(), colors.end(), L.color) != colors.end()) out.push_back(L);
    return out;
  };
  RestrictedItinerary r;
  r.indices.push_back(0);
  r.itinerary.steps.push_back({it.steps[0].graph, it.steps[0].coloring, keep(it.steps[0].loops)});
  std::vector<RbsMove> pending;
  for (std::size_t i = 0; i + 1 < it.steps.size(); ++i) {
    if (r.itinerary.steps.back().loops.empty()) break;
    pending.insert(pending.end(), it.moves[i].begin(), it.moves[i].end());
    const bool touched = std::any_of(verdict.events.begin(), verdict.events.end(), [&](const LoopEvent& e) {
      return e.step == i && std::find(colors.begin(), colors.end(), e.color) != colors.end();
    });
    if (!touched) continue;
    r.indices.push_back(i + 1);
    r.itinerary.moves.push_back(std::move(pending));
    pending.clear();
    r.itinerary.steps.push_back({it.steps[i + 1].graph, it.steps[i + 1].coloring, keep(it.steps[i + 1].loops)});
  }
  return r;
}

BoundReport bound_check(const Itinerary& it) {
  if (it.steps.empty()) throw Error("empty itinerary");
  const auto verdict = itinerary_check(it);
  return bound_check(it.steps[0].graph, it.steps[0].loops, verdict.loop_moves);
}

Itinerary parse_itinerary(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed itinerary JSON: ") + e.what());
  }
  try {
    if (j.value("schema_version", 1) != 1) throw Error("unsupported itinerary schema_version");
    std::vector<AbstractVertex> vs;
    for (const auto& x : j.at("vertices")) {
      const auto side = x.at("side").get<std::string>();
      if (side != "l" && side != "r") throw Error("vertex side must be \"l\" or \"r\"");
      vs.push_back({x.at("name").get<std::string>(), side == "l" ? Side::left : Side::right});
    }
    std::vector<std::vector<RbsMove>> moves;
    if (j.contains("moves"))
      for (const auto& lst : j.at("moves")) {
        std::vector<RbsMove> ms;
        for (const auto& m : lst)
          ms.push_back({m.at("bispecial").get<std::size_t>(), m.at("entering").get<std::size_t>(),
                        m.at("leaving").get<std::size_t>()});
        moves.push_back(std::move(ms));
      }
    const auto& steps = j.at("steps");
    if (steps.empty()) throw Error("itinerary has no steps");
    std::optional<long long> K;
    if (j.contains("K")) K = j.at("K").get<long long>();
    unsigned E = j.value("E", 0u);
    if (!j.contains("E"))
      for (const auto& s : steps) {
        if (s.contains("vertex_colors"))
          for (const auto& [k, c] : s.at("vertex_colors").items()) E = std::max(E, c.get<unsigned>());
        if (s.contains("loops"))
          for (const auto& L : s.at("loops")) E = std::max(E, L.at("color").get<unsigned>());
      }

    Itinerary it;
    auto index = [&](const std::string& name) {
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i].name == name) return i;
      throw Error("unknown vertex " + name);
    };
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& s = steps[i];
      AbstractGraph g;
      if (s.contains("edges")) {
        std::vector<AbstractEdge> es;
        for (const auto& e : s.at("edges"))
          es.push_back({e.at(0).get<std::size_t>(), index(e.at(1).get<std::string>()),
                        index(e.at(2).get<std::string>())});
        g = AbstractGraph(vs, std::move(es), K);
      } else {
        if (i == 0) throw Error("step 0 must list its edges");
        if (i - 1 >= moves.size()) throw Error("step " + std::to_string(i) + " has no moves to derive its edges");
        g = it.steps[i - 1].graph;
        for (const auto& m : moves[i - 1]) g = rewire(g, m);
      }
      Coloring c = Coloring::blank(g, E);
      if (s.contains("vertex_colors"))
        for (const auto& [k, col] : s.at("vertex_colors").items()) c.vertex[index(k)] = col.get<unsigned>();
      if (s.contains("edge_colors"))
        for (const auto& [k, col] : s.at("edge_colors").items())
          if (col.get<unsigned>() != 0) c.edge[std::stoul(k)] = col.get<unsigned>();
      std::vector<NLoop> loops;
      if (s.contains("loops"))
        for (const auto& L : s.at("loops"))
          loops.push_back({L.at("color").get<unsigned>(), L.at("edges").get<std::vector<std::size_t>>()});
      it.steps.push_back({std::move(g), std::move(c), std::move(loops)});
    }
    it.moves = std::move(moves);
    return it;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed itinerary: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error("malformed itinerary: edge color key is not an edge id");
  }
}

Itinerary read_itinerary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_itinerary(ss.str());
}

std::string itinerary_to_json(const Itinerary& it) {
  json j;
  j["schema_version"] = 1;
  if (it.steps.empty()) return j.dump(2);
  const auto& g0 = it.steps[0].graph;
  j["vertices"] = json::array();
  for (const auto& v : g0.vertices())
    j["vertices"].push_back({{"name", v.name}, {"side", v.side == Side::left ? "l" : "r"}});
  if (g0.declared_K()) j["K"] = *g0.declared_K();
  j["E"] = it.steps[0].coloring.E;
  j["steps"] = json::array();
  for (const auto& s : it.steps) {
    json js;
    js["edges"] = json::array();
    for (const auto& e : s.graph.edges())
      js["edges"].push_back({e.id, s.graph.vertices()[e.from].name, s.graph.vertices()[e.to].name});
    js["vertex_colors"] = json::object();
    for (std::size_t v = 0; v < s.coloring.vertex.size(); ++v)
      if (s.coloring.vertex[v] != 0) js["vertex_colors"][s.graph.vertices()[v].name] = s.coloring.vertex[v];
    js["edge_colors"] = json::object();
    for (const auto& [id, c] : s.coloring.edge)
      if (c != 0) js["edge_colors"][std::to_string(id)] = c;
    js["loops"] = json::array();
    for (const auto& L : s.loops) js["loops"].push_back({{"color", L.color}, {"edges", L.edges}});
    j["steps"].push_back(std::move(js));
  }
  j["moves"] = json::array();
  for (const auto& lst : it.moves) {
    json jl = json::array();
    for (const auto& m : lst)
      jl.push_back({{"bispecial", m.bispecial}, {"entering", m.entering}, {"leaving", m.leaving}});
    j["moves"].push_back(std::move(jl));
  }
  return j.dump(2);
}

}  // namespace symdyn
