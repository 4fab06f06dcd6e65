#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "symdyn/error.hpp"
#include "symdyn/itinerary.hpp"

using namespace symdyn;

namespace {

bool has_item(const std::vector<Violation>& vs, const std::string& item) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.item == item; });
}

std::string dump(const std::vector<Violation>& vs) {
  std::string s;
  for (const auto& v : vs) s += v.item + " " + v.detail + "\n";
  return s;
}

// Loops A = {0, 1} on L1/R1 and B = {2, 3} on L2/R2, each with a parallel
// extra edge (4 and 5) and joined by connectors 6 and 7 (K = 4).
AbstractGraph two_loop_k4() {
  return AbstractGraph({{"L1", Side::left}, {"L2", Side::left}, {"R1", Side::right}, {"R2", Side::right}},
                       {{0, 0, 2}, {1, 2, 0}, {2, 1, 3}, {3, 3, 1}, {4, 2, 0}, {5, 3, 1}, {6, 2, 1}, {7, 3, 0}});
}

Coloring two_loop_coloring(const AbstractGraph& g) {
  Coloring c = Coloring::blank(g, 2);
  c.vertex = {1, 2, 1, 2};
  c.edge = {{0, 1}, {1, 1}, {2, 2}, {3, 2}};
  return c;
}

Itinerary two_loop_itinerary() {
  const NLoop A{1, {0, 1}}, B{2, {2, 3}};
  Itinerary it;
  auto g0 = two_loop_k4();
  auto c0 = two_loop_coloring(g0);
  it.steps.push_back({g0, c0, {A, B}});

  const auto twist_b = rbs_from_indices(g0, 2, 1, 1, &B);
  auto g1 = rewire(g0, twist_b);
  auto c1 = c0;
  c1.edge[5] = 2;
  it.moves.push_back({twist_b});
  it.steps.push_back({g1, c1, {A}});

  const auto twist_a = rbs_from_indices(g1, 0, 1, 1, &A);
  auto g2 = rewire(g1, twist_a);
  auto c2 = c1;
  c2.edge[4] = 1;
  it.moves.push_back({twist_a});
  it.steps.push_back({g2, c2, {}});
  return it;
}

}  // namespace

TEST_CASE("one-step itinerary where the loop spreads at once") {
  const auto g = fixture::sturmian_shape();
  auto c = fixture::sturmian_coloring(g);
  c.edge[2] = 1;
  Itinerary it;
  it.steps.push_back({g, c, {NLoop{1, {0, 1}}}});
  it.steps.push_back({g, c, {}});
  it.moves.push_back({});
  const auto v = itinerary_check(it);
  CHECK_MESSAGE(v.valid, dump(v.violations));
  REQUIRE(v.events.size() == 1);
  CHECK(v.events[0].kind == LoopEventKind::spread);
  CHECK(v.events[0].edges == std::vector<std::size_t>{2});
}

TEST_CASE("a step without a shrink or spread is rejected") {
  const auto g = fixture::sturmian_shape();
  const auto c = fixture::sturmian_coloring(g);
  Itinerary it;
  it.steps.push_back({g, c, {NLoop{1, {0, 1}}}});
  it.steps.push_back({g, c, {}});
  it.moves.push_back({});
  const auto v = itinerary_check(it);
  CHECK_FALSE(v.valid);
  CHECK(has_item(v.violations, "itinerary.3"));
  CHECK(has_item(v.violations, "itinerary.5"));
}

TEST_CASE("loops must stay followed until the last step") {
  const auto g = fixture::sturmian_shape();
  auto c = fixture::sturmian_coloring(g);
  c.edge[2] = 1;
  Itinerary it;
  it.steps.push_back({g, c, {NLoop{1, {0, 1}}}});
  it.steps.push_back({g, c, {NLoop{1, {0, 1}}}});
  it.moves.push_back({});
  const auto v = itinerary_check(it);
  CHECK(has_item(v.violations, "itinerary.7"));
}

TEST_CASE("wrong next graph is an item-1 violation") {
  auto it = two_loop_itinerary();
  it.steps[1].graph = it.steps[0].graph;
  it.moves[0] = {rbs_from_indices(it.steps[0].graph, 2, 2, 1, &it.steps[0].loops[1])};
  const auto v = itinerary_check(it);
  CHECK(has_item(v.violations, "itinerary.1"));
}

TEST_CASE("two loops spreading one step apart") {
  const auto it = two_loop_itinerary();
  const auto v = itinerary_check(it);
  CHECK_MESSAGE(v.valid, dump(v.violations));
  REQUIRE(v.events.size() == 2);
  CHECK(v.events[0].color == 2);
  CHECK(v.events[0].step == 0);
  CHECK(v.events[1].color == 1);
  CHECK(v.events[1].step == 1);
  CHECK(v.loop_moves.size() == 2);

  const auto r = restrict_itinerary(it, {1});
  CHECK(r.indices == std::vector<std::size_t>{0, 2});
  REQUIRE(r.itinerary.moves.size() == 1);
  CHECK(r.itinerary.moves[0].size() == 2);
  const auto rv = itinerary_check(r.itinerary);
  CHECK_MESSAGE(rv.valid, dump(rv.violations));

  const auto rb = restrict_itinerary(it, {2});
  CHECK(rb.indices == std::vector<std::size_t>{0, 1});
  CHECK(itinerary_check(rb.itinerary).valid);

  CHECK_THROWS_AS(restrict_itinerary(it, {3}), Error);
}

TEST_CASE("itinerary bound check uses the followed loop moves") {
  const auto it = two_loop_itinerary();
  const auto b = bound_check(it);
  CHECK(b.E == 2);
  CHECK(b.K == 4);
}

TEST_CASE("itinerary JSON round trip") {
  const auto it = two_loop_itinerary();
  const auto text = itinerary_to_json(it);
  const auto back = parse_itinerary(text);
  REQUIRE(back.steps.size() == it.steps.size());
  for (std::size_t i = 0; i < it.steps.size(); ++i) {
    CHECK(back.steps[i].graph.same_structure(it.steps[i].graph));
    CHECK(back.steps[i].coloring == it.steps[i].coloring);
    CHECK(back.steps[i].loops.size() == it.steps[i].loops.size());
  }
  CHECK(itinerary_to_json(back) == text);
  CHECK(itinerary_check(back).valid);
}

TEST_CASE("itinerary JSON derives later graphs from moves") {
  const std::string text = R"({
    "schema_version": 1,
    "vertices": [{"name": "u", "side": "l"}, {"name": "v", "side": "r"}],
    "steps": [
      {"edges": [[0, "u", "v"], [1, "v", "u"], [2, "v", "u"]],
       "vertex_colors": {"u": 1, "v": 1}, "edge_colors": {"0": 1, "1": 1, "2": 1},
       "loops": [{"color": 1, "edges": [0, 1]}]},
      {"vertex_colors": {"u": 1, "v": 1}, "edge_colors": {"0": 1, "1": 1, "2": 1}}
    ],
    "moves": [[]]
  })";
  const auto it = parse_itinerary(text);
  CHECK(it.steps[0].coloring.E == 1);
  CHECK(it.steps[1].graph.edges().size() == 3);
  CHECK(itinerary_check(it).valid);

  CHECK_THROWS_AS(parse_itinerary("{"), Error);
  CHECK_THROWS_AS(parse_itinerary(R"({"vertices": [{"name": "u", "side": "x"}], "steps": []})"), Error);
  CHECK_THROWS_AS(parse_itinerary(R"({"vertices": [], "steps": [{}]})"), Error);
}
