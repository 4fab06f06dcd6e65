#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "symdyn/error.hpp"
#include "symdyn/search.hpp"
#include "symdyn/xi.hpp"

using namespace symdyn;

namespace {

bool has_item(const std::vector<Violation>& vs, const std::string& item) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.item == item; });
}

std::pair<std::size_t, std::size_t> ends(const AbstractGraph& g, std::size_t id) {
  return {g.edge(id).from, g.edge(id).to};
}

}  // namespace

TEST_CASE("sturmian shape validates; broken variants name the item") {
  const auto g = fixture::sturmian_shape();
  auto c = fixture::sturmian_coloring(g);
  const NLoop loop{1, {0, 1}};
  CHECK(g.K() == 1);
  CHECK(validate(g, c, {loop}).empty());

  auto bad = c;
  bad.vertex[0] = 0;
  CHECK(has_item(validate(g, bad), "notation.8"));

  const AbstractGraph self({{"u", Side::left}, {"v", Side::right}}, {{0, 0, 1}, {1, 1, 0}, {2, 1, 1}});
  CHECK(has_item(validate_graph(self), "notation.self-loop"));
  CHECK(has_item(validate_graph(self), "notation.3"));

  auto orphan = c;
  orphan.edge.erase(1);
  CHECK(has_item(validate_coloring(g, orphan), "rules1.4"));
  CHECK(has_item(validate_coloring(g, orphan), "rules1.3"));
}

TEST_CASE("2-loop moves: twist swaps roles, collapse undoes, shrink is inadmissible") {
  const auto g = fixture::sturmian_shape();
  const auto c = fixture::sturmian_coloring(g);
  const NLoop loop{1, {0, 1}};

  const auto twist = rbs_from_indices(g, 0, 1, 1, &loop);
  CHECK(classify_move(g, twist, loop) == MoveKind::twist);
  const auto t = apply_rbs(g, c, twist);
  CHECK(ends(t.graph, 0) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(ends(t.graph, 1) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(ends(t.graph, 2) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(t.coloring_valid);
  CHECK(t.coloring == c);
  const auto carried = carry_loop(g, t.graph, twist, loop);
  REQUIRE(carried);
  CHECK(carried->edges.size() == 2);

  const auto collapse = rbs_from_indices(g, 0, 2, 2, &loop);
  CHECK(classify_move(g, collapse, loop) == MoveKind::collapse);
  const auto k = apply_rbs(g, c, collapse);
  CHECK(ends(k.graph, 0) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(ends(k.graph, 1) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK_FALSE(carry_loop(g, k.graph, collapse, loop));
  CHECK(validate_graph(k.graph).empty());

  const auto shrink = rbs_from_indices(g, 0, 1, 2, &loop);
  CHECK_THROWS_WITH_AS(classify_move(g, shrink, loop), "shrink move never allowed in a 2-loop", Error);
  CHECK_THROWS_AS(apply_rbs(g, c, shrink), Error);
}

TEST_CASE("coloring completion after a collapse") {
  const auto g = fixture::sturmian_shape();
  const NLoop loop{1, {0, 1}};
  const auto move = rbs_from_indices(g, 0, 2, 2, &loop);

  // The outside edge already carries the loop color: nothing to reset.
  auto spread = fixture::sturmian_coloring(g);
  spread.edge[2] = 1;
  const auto r = apply_rbs(g, spread, move);
  CHECK(r.coloring_valid);
  CHECK(r.coloring == spread);

  // Otherwise edge 1 keeps its color with no circuit to carry it.
  const auto plain = fixture::sturmian_coloring(g);
  const auto bad = apply_rbs(g, plain, move);
  CHECK_FALSE(bad.coloring_valid);
  CHECK(bad.coloring == plain);
  CHECK(has_item(bad.violations, "rules1.4"));
}

TEST_CASE("least-change completion resets the bispecial edge") {
  // Shrink on the 3-loop a -> b -> c -> a ejecting a: e0 loses its circuit.
  const AbstractGraph tri({{"a", Side::left}, {"b", Side::right}, {"c", Side::left}},
                          {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}, {3, 1, 0}, {4, 1, 2}});
  Coloring c = Coloring::blank(tri, 1);
  c.vertex = {1, 1, 1};
  c.edge = {{0, 1}, {1, 1}, {2, 1}};
  REQUIRE(validate_coloring(tri, c).empty());
  const auto r = apply_rbs(tri, c, RbsMove{0, 2, 4});
  CHECK(r.coloring_valid);
  CHECK(validate_coloring(r.graph, r.coloring).empty());
  CHECK(r.coloring.vertex[0] == 0);
  CHECK(r.coloring.of_edge(0) == 0);
  for (const auto& e : tri.edges())
    if (e.id != 0) CHECK(r.coloring.of_edge(e.id) == c.of_edge(e.id));
}

TEST_CASE("classification on larger loops") {
  const auto g = fixture::xi_shape();
  const auto loop = fixture::xi_loop();
  CHECK(validate_graph(g).empty());
  CHECK(g.K() == 5);
  // e0 = u1 -> v1; loop in-edge of u1 is 3, loop out-edge of v1 is 1.
  const RbsMove shrink_u{0, 3, 5};
  CHECK(classify_move(g, shrink_u, loop) == MoveKind::shrink_u);
  const RbsMove shrink_v{0, 4, 1};
  // v1 is not the only right special on the loop.
  CHECK(classify_move(g, shrink_v, loop) == MoveKind::shrink_v);
  CHECK(classify_move(g, RbsMove{0, 3, 1}, loop) == MoveKind::twist);
  CHECK(classify_move(g, RbsMove{0, 4, 5}, loop) == MoveKind::collapse);
  CHECK(rbs_from_indices(g, 0, 1, 2, &loop) == shrink_u);

  // 3-loop L -> R -> L' -> L with only one right special: twist ok, shrink-v refused.
  const AbstractGraph tri({{"a", Side::left}, {"b", Side::right}, {"c", Side::left}},
                          {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}, {3, 1, 0}, {4, 1, 2}});
  const NLoop t{1, {0, 1, 2}};
  CHECK(classify_move(tri, RbsMove{0, 2, 1}, t) == MoveKind::twist);
  CHECK_THROWS_AS(classify_move(tri, RbsMove{0, 3, 1}, t), Error);
  CHECK(classify_move(tri, RbsMove{0, 2, 3}, t) == MoveKind::shrink_u);
}

TEST_CASE("rewiring preserves counts and degree profile") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    auto inst = random_loop_instance(rng, {3 + i % 3, 1 + static_cast<unsigned>(i % 2), 1000});
    REQUIRE(inst);
    for (const auto& cm : candidate_moves(inst->graph, inst->loops)) {
      const auto h = rewire(inst->graph, cm.move);
      for (std::size_t v = 0; v < h.vertices().size(); ++v) {
        CHECK(h.in_edges(v).size() == inst->graph.in_edges(v).size());
        CHECK(h.out_edges(v).size() == inst->graph.out_edges(v).size());
      }
      CHECK(validate_graph(h).empty());
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("Xi of the 4-loop fixture") {
  const auto g = fixture::xi_shape();
  const auto xi = build_xi(g, {fixture::xi_loop()});
  CHECK(xi.vertices.size() == 7);
  CHECK(xi.edges.size() == 10);
  auto neighbours = [&](const std::string& name) {
    const auto at = static_cast<std::size_t>(std::find(xi.vertices.begin(), xi.vertices.end(), name) - xi.vertices.begin());
    std::vector<std::string> out;
    for (auto [a, b] : xi.edges) {
      if (a == at) out.push_back(xi.vertices[b]);
      if (b == at) out.push_back(xi.vertices[a]);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(neighbours("1_l") == std::vector<std::string>{"x1", "x4", "x5"});
  CHECK(neighbours("1_r") == std::vector<std::string>{"x2", "x3"});
  const auto r = bound_check(g, {fixture::xi_loop()});
  CHECK(r.xi_connected);
  CHECK(r.bound_satisfied);
  CHECK(r.xi_edges - r.xi_vertices == 3);
}

TEST_CASE("Xi after a shrink keeps the identity") {
  const auto g = fixture::xi_shape();
  const auto xi = build_xi(g, {fixture::xi_loop()}, {RbsMove{0, 3, 5}});
  CHECK(xi.moves_applied == 1);
  CHECK(xi.loops_star[0].edges.size() == 3);
  CHECK(xi.vertices.size() == 8);  // u1 is no longer a loop vertex
  CHECK(static_cast<long long>(xi.edges.size()) - static_cast<long long>(xi.vertices.size()) == 3);
}

TEST_CASE("bound verdicts on small shapes") {
  const auto s = fixture::sturmian_shape();
  const auto rs = bound_check(s, {NLoop{1, {0, 1}}});
  CHECK(rs.xi_connected);
  CHECK(rs.E == 1);
  CHECK(rs.K == 1);
  CHECK(rs.bound_satisfied);

  const auto g = fixture::two_loops_k3();
  const std::vector<NLoop> loops{{1, {0, 2}}, {2, {1, 6}}};
  CHECK(validate(g, loop_coloring(g, loops), loops).empty());
  const auto r2 = bound_check(g, loops);
  CHECK(r2.xi_connected);
  CHECK(r2.bound_satisfied);

  // Only one loop: Xi has 4 vertices and 5 edges.
  const auto xi1 = build_xi(g, {NLoop{1, {0, 2}}});
  CHECK(xi1.vertices.size() == 4);
  CHECK(xi1.edges.size() == 5);

  // Two 2-loops with K = 2 leave Xi with too few edges.
  const AbstractGraph k2({{"L1", Side::left}, {"L2", Side::left}, {"R1", Side::right}, {"R2", Side::right}},
                         {{0, 0, 2}, {1, 1, 3}, {2, 2, 0}, {3, 2, 1}, {4, 3, 1}, {5, 3, 0}});
  const std::vector<NLoop> two{{1, {0, 2}}, {2, {1, 4}}};
  CHECK(validate(k2, loop_coloring(k2, two), two).empty());
  const auto r3 = bound_check(k2, two);
  CHECK_FALSE(r3.xi_connected);
  CHECK_FALSE(r3.bound_satisfied);
  CHECK(r3.cut.size() == 2);
}

TEST_CASE("components and tags under moves A, B, C") {
  std::mt19937_64 rng(2024);
  int a = 0, b = 0, c = 0;
  for (int i = 0; i < 300; ++i) {
    auto inst = random_loop_instance(rng, {4, 2, 1000});
    REQUIRE(inst);
    for (const auto& cm : candidate_moves(inst->graph, inst->loops)) {
      const auto eff = move_effect(inst->graph, inst->loops, cm.move);
      CHECK(eff.matches);
      if (eff.kind != AppendixMove::B) CHECK(eff.unchanged);
      (eff.kind == AppendixMove::A ? a : eff.kind == AppendixMove::B ? b : c)++;
    }
  }
  CHECK(a > 0);
  CHECK(b > 0);
  CHECK(c > 0);
}

TEST_CASE("tags of the 4-loop fixture and a merging shrink") {
  const auto g = fixture::xi_shape();
  const auto ct = components_and_tags(g, {fixture::xi_loop()});
  // Without loop edges the graph is one component through x1..x5.
  CHECK(ct.components.size() == 1);
  const auto eff = move_effect(g, {fixture::xi_loop()}, RbsMove{0, 3, 5});
  CHECK(eff.kind == AppendixMove::B);
  CHECK(eff.removed == 0);
  CHECK(eff.matches);
  CHECK(eff.after.tags[0][0] == std::vector<std::size_t>{1, 2, 3});

  // Shrink on a 3-loop whose u and v start in different components.
  const AbstractGraph h({{"a", Side::left}, {"b", Side::right}, {"c", Side::left}, {"d", Side::right}},
                        {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 0}, {4, 1, 2}, {5, 3, 0}});
  const NLoop L{1, {0, 1, 2, 3}};
  REQUIRE(validate_graph(h).empty());
  const auto before = components_and_tags(h, {L});
  CHECK(before.components.size() == 2);
  const auto e2 = move_effect(h, {L}, RbsMove{0, 3, 4});
  CHECK(e2.kind == AppendixMove::B);
  CHECK(e2.matches);
  CHECK(e2.I1 != e2.I2);
  CHECK(e2.after.components.size() == 1);
  CHECK(e2.after.tags[0][0] == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("equal tags evolve equally under the same loop move") {
  std::mt19937_64 rng(99);
  int pairs = 0;
  for (int i = 0; i < 300 && pairs < 100; ++i) {
    auto inst = random_loop_instance(rng, {4, 1, 1000});
    REQUIRE(inst);
    const auto moves = candidate_moves(inst->graph, inst->loops);
    for (const auto& cmove : moves) {
      if (cmove.kind != AppendixMove::C) continue;
      const auto other = move_effect(inst->graph, inst->loops, cmove.move);
      REQUIRE(other.after == other.before);
      for (const auto& lm : moves) {
        if (lm.kind == AppendixMove::C) continue;
        try {
          const auto x = move_effect(inst->graph, inst->loops, lm.move);
          const auto y = move_effect(other.graph, other.loops, lm.move);
          CHECK(x.after == y.after);
          ++pairs;
        } catch (const Error&) {
          // The move may be inadmissible on the second graph.
        }
      }
      break;
    }
  }
  CHECK(pairs >= 50);
}

TEST_CASE("search and tightness") {
  const auto g = fixture::two_loops_k3();
  const auto s = search_colorings(g, 2);
  CHECK(s.found);
  CHECK(s.exhaustive);
  CHECK(s.loops.size() == 2);

  SearchOptions two;
  two.max_loop_size = 2;
  const auto s2 = search_colorings(g, 2, two);
  REQUIRE(s2.found);
  for (const auto& L : s2.loops) CHECK(L.size() == 2);
  SearchOptions none;
  none.max_loop_size = 1;
  CHECK_FALSE(search_colorings(g, 2, none).found);

  const auto k1 = tightness_probe(1, 2, 8);
  CHECK_FALSE(k1.found);
  const auto k2 = tightness_probe(2, 2, 8);
  CHECK_FALSE(k2.found);
  CHECK(k2.exhaustive);
  CHECK(k2.graphs_examined == 17);
  CHECK(k2.rules_valid == 2);
  const auto k3 = tightness_probe(3, 2, 8);
  CHECK(k3.found);

  CHECK(simple_circuits(fixture::sturmian_shape()).size() == 2);
}

TEST_CASE("dot output is deterministic") {
  const auto g = fixture::sturmian_shape();
  const auto c = fixture::sturmian_coloring(g);
  const auto a = to_dot(g, &c, {NLoop{1, {0, 1}}});
  CHECK(a == to_dot(g, &c, {NLoop{1, {0, 1}}}));
  CHECK(a.find("cluster_0") != std::string::npos);
  CHECK(a.find("color=red") != std::string::npos);
}
