#pragma once

#include <string>
#include <vector>

#include "symdyn/abstract_graph.hpp"
#include "symdyn/xi.hpp"

namespace symdyn {

struct ItineraryStep {
  AbstractGraph graph;
  Coloring coloring;
  std::vector<NLoop> loops;  // loops still followed, distinct nonzero colors
};

// steps[0..M]; moves[i] turns steps[i] into steps[i+1].
struct Itinerary {
  std::vector<ItineraryStep> steps;
  std::vector<std::vector<RbsMove>> moves;
};

enum class LoopEventKind { shrink, spread };

struct LoopEvent {
  std::size_t step = 0;  // event between steps[step] and steps[step+1]
  unsigned color = 0;
  LoopEventKind kind = LoopEventKind::shrink;
  std::vector<std::size_t> vertices;  // ejected vertices (shrink)
  std::vector<std::size_t> edges;     // colored outside edges (spread)
};

struct ItineraryVerdict {
  bool valid = true;
  std::vector<Violation> violations;  // items "itinerary.1" .. "itinerary.7", or per-step graph rules
  std::vector<LoopEvent> events;
  std::vector<RbsMove> loop_moves;    // twist and shrink moves on followed loops, in order
};

ItineraryVerdict itinerary_check(const Itinerary& it);

struct RestrictedItinerary {
  Itinerary itinerary;
  std::vector<std::size_t> indices;  // i_0 = 0 < i_1 < ... into the original steps
};

// Keeps the loops whose colors are listed; merges steps in which none of
// them has an event. Throws Error if a color is not followed at step 0.
RestrictedItinerary restrict_itinerary(const Itinerary& it, const std::vector<unsigned>& colors);

// Xi verdict from the twist and shrink moves of a checked itinerary.
BoundReport bound_check(const Itinerary& it);

// JSON layout:
//   {"schema_version": 1, "vertices": [{"name": "u", "side": "l"}, ...],
//    "steps": [{"edges": [[id, "from", "to"], ...],
//               "vertex_colors": {"u": 1}, "edge_colors": {"0": 1},
//               "loops": [{"color": 1, "edges": [0, 1]}]}, ...],
//    "moves": [[{"bispecial": 0, "entering": 1, "leaving": 1}], ...]}
// "edges" may be omitted after step 0; the graph is then derived from the
// previous step's moves. "E" defaults to the largest color present.
Itinerary parse_itinerary(const std::string& json_text);
Itinerary read_itinerary(const std::string& path);
std::string itinerary_to_json(const Itinerary& it);

}  // namespace symdyn
