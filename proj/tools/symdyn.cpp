// Command-line front end: builds a language from a sequence source and
// writes JSON reports or DOT graphs. Exit codes: 0 ok, 1 bad input, 2 horizon.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "symdyn/density.hpp"
#include "symdyn/error.hpp"
#include "symdyn/exit_words.hpp"
#include "symdyn/generators.hpp"
#include "symdyn/itinerary.hpp"
#include "symdyn/language.hpp"
#include "symdyn/rauzy.hpp"
#include "symdyn/search.hpp"
#include "symdyn/steps.hpp"
#include "symdyn/xi.hpp"

#ifndef SYMDYN_VERSION
#define SYMDYN_VERSION "0.0.0"
#endif

using namespace symdyn;
using json = nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct Config {
  std::string command;
  std::optional<std::string> substitution, iet, seq, rotation;
  std::size_t length = 100000;
  std::size_t horizon = 40;
  std::optional<std::size_t> n, n_max;
  std::optional<long long> K;
  std::optional<double> theta;
  double theta_tol = kDefaultThetaTol;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  // exitwords
  std::string w, z;
  std::size_t q = 0;
  // density
  std::string side = "both";
  bool special = true;
  // abstract / xi
  std::string graph_path, itinerary_path, itinerary_out;
  std::string move;
  unsigned loop_color = 0;
  unsigned E = 2;
  std::size_t max_vertices = 6;
  bool probe = false;
};

struct Source {
  SequencePrefix prefix;
  std::string description;
};

json config_json(const Config& c) {
  json j;
  j["command"] = c.command;
  if (c.substitution) j["substitution"] = *c.substitution;
  if (c.iet) j["iet"] = *c.iet;
  if (c.seq) j["seq"] = *c.seq;
  if (c.rotation) j["rotation"] = *c.rotation;
  j["length"] = c.length;
  j["horizon"] = c.horizon;
  if (c.n) j["n"] = *c.n;
  if (c.n_max) j["n_max"] = *c.n_max;
  if (c.K) j["K"] = *c.K;
  if (c.theta) j["theta"] = *c.theta;
  j["theta_tol"] = c.theta_tol;
  j["format"] = c.format;
  j["seed"] = c.seed;
  return j;
}

Source load_source(const Config& c) {
  const int given = !!c.substitution + !!c.iet + !!c.seq + !!c.rotation;
  if (given > 1) throw Error("give at most one of --substitution, --iet, --seq, --rotation");
  if (c.iet) return {iet_encode(read_iet_spec(*c.iet), c.length).prefix, "iet:" + *c.iet};
  if (c.seq) return {read_sequence_file(*c.seq), "seq:" + *c.seq};
  if (c.rotation) return {rotation_coding(Rational::parse(*c.rotation), c.length), "rotation:" + *c.rotation};
  if (c.substitution)
    return {substitution_fixed_point(read_substitution_spec(*c.substitution), c.length),
            "substitution:" + *c.substitution};
  return {substitution_fixed_point(SubstitutionSpec::fibonacci(), c.length), "substitution:fibonacci"};
}

void require_range(const Config& c, std::size_t n) {
  if (n < 1 || n + 3 > c.horizon)
    throw HorizonExceeded("length " + std::to_string(n) + " outside [1, H-3] for H=" + std::to_string(c.horizon),
                          n + 3);
}

json word_list(const Alphabet& a, const std::vector<Word>& ws) {
  json j = json::array();
  for (const auto& w : ws) j.push_back(a.render(w));
  return j;
}

json violations_json(const std::vector<Violation>& vs) {
  json j = json::array();
  for (const auto& v : vs) j.push_back({{"item", v.item}, {"detail", v.detail}});
  return j;
}

json loops_json(const std::vector<NLoop>& loops) {
  json j = json::array();
  for (const auto& L : loops) j.push_back({{"color", L.color}, {"edges", L.edges}});
  return j;
}

json bound_json(const BoundReport& b) {
  return {{"xi_connected", b.xi_connected}, {"E", b.E},
          {"K", b.K},                       {"bound_satisfied", b.bound_satisfied},
          {"xi_edges", b.xi_edges},         {"xi_vertices", b.xi_vertices},
          {"counting_ok", b.counting_ok},   {"cut", b.cut},
          {"note", b.note}};
}

long long resolve_K(const Config& c, const LanguageOracle& oracle) {
  if (c.K) return *c.K;
  const auto g = growth_profile(oracle);
  if (!g.constant_tail || g.K < 1) throw Error("no constant complexity difference within the horizon; pass --K");
  return g.K;
}

// ---- subcommands -----------------------------------------------------------

json cmd_analyze(const Config& c, std::string&) {
  if (c.horizon < 4) throw Error("horizon must be at least 4");
  const auto src = load_source(c);
  const auto oracle = oracle_from_prefix(src.prefix, c.horizon);
  const auto g = growth_profile(oracle);
  const auto rbc = check_rbc(oracle, c.n.value_or(1));
  const auto per = periodicity_check(oracle);
  std::size_t non_dendric = 0, checked = 0;
  std::vector<Word> non_dendric_examples;
  for (std::size_t n = 1; n + 3 <= c.horizon; ++n)
    for (const auto& w : oracle.factors(n)) {
      ++checked;
      if (!is_dendric(extensions(oracle, w))) {
        ++non_dendric;
        if (non_dendric_examples.size() < 10) non_dendric_examples.push_back(w);
      }
    }
  json rbc_j = {{"holds", rbc.holds},
                {"n_min", rbc.n_min},
                {"max_length", rbc.max_length},
                {"bispecial_count", rbc.bispecial_count},
                {"n0_estimate", rbc.n0_estimate},
                {"violations", json::array()}};
  for (const auto& v : rbc.violations)
    rbc_j["violations"].push_back({{"word", oracle.alphabet().render(v.word)}, {"reason", v.reason}});
  json per_j = {{"periodic", per.periodic}};
  if (per.n0) per_j["n0"] = *per.n0;
  if (per.period) per_j["period"] = *per.period;
  return {{"source", src.description},
          {"alphabet", oracle.alphabet().tokens()},
          {"trimmed", oracle.trimmed()},
          {"complexity", g.p},
          {"differences", g.differences},
          {"constant_tail", g.constant_tail},
          {"K", g.K},
          {"N0", g.N0},
          {"rbc", rbc_j},
          {"periodicity", per_j},
          {"dendric", {{"max_length", c.horizon - 3},
                       {"checked", checked},
                       {"non_dendric", non_dendric},
                       {"examples", word_list(oracle.alphabet(), non_dendric_examples)}}}};
}

json cmd_rauzy(const Config& c, std::string& dot) {
  const std::size_t n = c.n.value_or(4);
  require_range(c, n);
  const auto src = load_source(c);
  const auto oracle = oracle_from_prefix(src.prefix, c.horizon);
  const auto g = build_rauzy(oracle, n);
  const auto sp = build_special_rauzy(oracle, g);
  dot = to_dot(g, oracle.alphabet(), "Gamma_" + std::to_string(n)) +
        to_dot(sp, "Gamma_sp_" + std::to_string(n));
  const auto& a = oracle.alphabet();
  json verts = json::array(), edges = json::array();
  for (const auto& v : sp.vertices)
    verts.push_back({{"word", a.render(v.word)}, {"tag", v.tag == Side::left ? "l" : "r"}, {"bispecial", v.bispecial}});
  for (const auto& e : sp.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"path", a.render(e.path)}, {"internal", e.internal}});
  const auto cg = connectivity(g);
  const auto cs = connectivity(sp);
  return {{"source", src.description},
          {"n", n},
          {"rauzy", {{"vertices", g.vertices.size()}, {"edges", g.edges.size()},
                     {"strongly_connected", cg.strong}, {"weakly_connected", cg.weak}}},
          {"special", {{"vertices", verts}, {"edges", edges}, {"K", sp.K}, {"K_left", sp.K_left},
                       {"K_right", sp.K_right}, {"partial", sp.partial}, {"has_self_loop", sp.has_self_loop},
                       {"strongly_connected", cs.strong}}}};
}

json event_json(const Alphabet& a, const RbsEvent& e) {
  return {{"bispecial", a.render(e.bispecial)},
          {"a_hat", a.token(e.a_hat)},
          {"b_hat", a.token(e.b_hat)},
          {"internal_edge", e.internal_edge},
          {"entering_edge", e.entering_edge},
          {"leaving_edge", e.leaving_edge},
          {"i0", e.i0},
          {"j0", e.j0}};
}

json cmd_evolve(const Config& c, std::string& dot) {
  const std::size_t n0 = c.n.value_or(1);
  require_range(c, n0);
  if (c.n_max) require_range(c, *c.n_max);
  const std::size_t n_max = c.n_max.value_or(c.horizon - 3);
  const auto src = load_source(c);
  const auto oracle = oracle_from_prefix(src.prefix, c.horizon);
  const auto& a = oracle.alphabet();

  // Skeleton itinerary: edge ids of the first graph, carried through the moves.
  Itinerary skeleton;
  std::vector<std::size_t> carried;  // current edge index -> carried id

  json steps = json::array();
  std::size_t n = n0;
  bool truncated = false;
  while (true) {
    EvolutionStep s;
    try {
      s = evolve(oracle, n);
    } catch (const HorizonExceeded&) {
      truncated = c.n_max.has_value() && n < *c.n_max;
      break;
    }
    if (s.n_next > n_max) break;
    if (skeleton.steps.empty()) {
      auto g0 = to_abstract(s.before);
      skeleton.steps.push_back({g0, Coloring::blank(g0, 0), {}});
      carried.resize(s.before.edges.size());
      for (std::size_t k = 0; k < carried.size(); ++k) carried[k] = k;
      dot += to_dot(s.before, "Gamma_sp_" + std::to_string(s.n));
    }
    std::vector<RbsMove> moves;
    json events = json::array();
    for (const auto& e : s.events) {
      events.push_back(event_json(a, e));
      moves.push_back({carried[e.internal_edge], carried[e.entering_edge], carried[e.leaving_edge]});
    }
    std::vector<std::size_t> next(s.after.edges.size());
    for (std::size_t k = 0; k < s.edge_map.size(); ++k) next[s.edge_map[k]] = carried[k];
    carried = std::move(next);
    auto g = skeleton.steps.back().graph;
    for (const auto& m : moves) g = rewire(g, m);
    skeleton.moves.push_back(moves);
    skeleton.steps.push_back({g, Coloring::blank(g, 0), {}});
    dot += to_dot(s.after, "Gamma_sp_" + std::to_string(s.n_next));
    steps.push_back({{"n", s.n},
                     {"n_tilde", s.n_tilde},
                     {"n_next", s.n_next},
                     {"events", events},
                     {"matches_moves", s.matches_moves},
                     {"order_independent", s.order_independent},
                     {"profile_preserved", s.profile_preserved},
                     {"vertices_after", s.after.vertices.size()},
                     {"edges_after", s.after.edges.size()}});
    n = s.n_next;
  }
  if (!c.itinerary_out.empty()) {
    std::ofstream f(c.itinerary_out);
    if (!f) throw Error("cannot write " + c.itinerary_out);
    f << itinerary_to_json(skeleton) << "\n";
  }
  return {{"source", src.description}, {"n", n0}, {"n_max", n_max}, {"truncated", truncated}, {"steps", steps}};
}

json exit_json(const Alphabet& a, const ExitRepresentation& r) {
  return {{"q", r.q}, {"p", a.render(r.p)}, {"r", r.r}, {"s", a.render(r.s)}, {"canonical", r.canonical}};
}

json cmd_exitwords(const Config& c, std::string&) {
  if (c.w.empty()) throw Error("--w is required");
  const auto src = load_source(c);
  const auto oracle = oracle_from_prefix(src.prefix, c.horizon);
  const auto& a = oracle.alphabet();
  const Word w = a.parse(c.w);
  oracle.check_alphabet(w);
  std::size_t q = c.q;
  if (q == 0) {
    const auto m = minimal_step(w, oracle);
    if (!m) throw Error("w has no valid step within the horizon; pass --q");
    q = *m;
  }
  json out = {{"source", src.description}, {"w", c.w}, {"q", q}, {"trimmed", oracle.trimmed()}};
  if (!c.z.empty()) {
    const Word z = a.parse(c.z);
    json reps = json::array();
    for (const auto& r : decompose(z, w, q)) reps.push_back(exit_json(a, r));
    out["z"] = c.z;
    out["decompositions"] = reps;
    return out;
  }
  std::optional<long long> K;
  try {
    K = resolve_K(c, oracle);
  } catch (const Error&) {
  }
  const auto en = enumerate_exit_words(w, q, oracle, K);
  json words = json::array();
  for (const auto& x : en.words) {
    json reps = json::array();
    for (const auto& r : representations(x.z, w, oracle)) reps.push_back(exit_json(a, r));
    words.push_back({{"z", a.render(x.z)}, {"canonical", exit_json(a, x.rep)}, {"representations", reps}});
  }
  out["exit_words"] = words;
  out["partial"] = en.partial;
  out["entries"] = en.entries;
  out["exits"] = en.exits;
  out["r_values_ok"] = en.r_values_ok;
  if (en.bound) out["bound"] = *en.bound;
  out["within_bound"] = en.within_bound;
  return out;
}

json cmd_density(const Config& c, std::string&) {
  const std::size_t n = c.n.value_or(4);
  require_range(c, n);
  const auto src = load_source(c);
  const auto oracle = oracle_from_prefix(src.prefix, c.horizon);
  const auto& a = oracle.alphabet();
  const long long K = resolve_K(c, oracle);
  json out = {{"source", src.description}, {"n", n}, {"K", K}, {"theta_tol", c.theta_tol}};
  if (!c.w.empty()) {
    const auto d = density_estimate(a.parse(c.w), src.prefix.view(), K);
    out["word"] = {{"w", c.w}, {"block", d.block}, {"N_max", d.N_max}, {"D_est", d.D_est}};
  }
  if (c.special) {
    json sides = json::object();
    bool pass = true;
    for (Side s : {Side::left, Side::right}) {
      if (c.side != "both" && c.side != side_name(s)) continue;
      const auto f = special_density_floor(oracle, src.prefix.view(), n, s, K, c.theta_tol);
      const auto win = special_window_check(oracle, src.prefix.view(), n, s, K);
      json est = json::array();
      for (const auto& [w, d] : f.estimates) est.push_back({{"w", a.render(w)}, {"D_est", d}});
      json wj = {{"windows", win.windows}, {"pass", win.pass}};
      if (win.first_failure) wj["first_failure"] = *win.first_failure;
      sides[side_name(s)] = {{"estimates", est},   {"best", a.render(f.best)}, {"best_density", f.best_density},
                             {"floor", f.floor},   {"pass", f.pass},           {"window_check", wj}};
      pass = pass && f.pass && win.pass;
    }
    out["special"] = sides;
    out["pass"] = pass;
  }
  return out;
}

// Reads a graph (and optional coloring/loops) from step 0 of an itinerary file.
json cmd_abstract(const Config& c, std::string& dot) {
  if (c.probe) {
    const std::size_t K = c.K.value_or(3);
    SearchOptions opt;
    opt.seed = c.seed;
    const auto t = tightness_probe(static_cast<long long>(K), c.E, c.max_vertices, opt);
    json out = {{"probe", {{"K", t.K}, {"E", t.E}, {"max_vertices", c.max_vertices}, {"found", t.found},
                           {"graphs_examined", t.graphs_examined}, {"families_examined", t.families_examined},
                           {"rules_valid", t.rules_valid}, {"exhaustive", t.exhaustive}}}};
    if (t.found) {
      Itinerary one;
      one.steps.push_back({t.graph, t.search.coloring, t.search.loops});
      out["probe"]["witness"] = json::parse(itinerary_to_json(one));
      dot = to_dot(t.graph, &t.search.coloring, t.search.loops, "witness");
    }
    return out;
  }
  if (c.graph_path.empty()) throw Error("--graph or --probe is required");
  const auto it = read_itinerary(c.graph_path);
  const auto& s = it.steps.front();
  json out = {{"graph", c.graph_path},
              {"vertices", s.graph.vertices().size()},
              {"edges", s.graph.edges().size()},
              {"K", s.graph.K()},
              {"strongly_connected", s.graph.strongly_connected()},
              {"bispecial_edges", s.graph.bispecial_edges()},
              {"violations", violations_json(validate(s.graph, s.coloring, s.loops))}};
  dot = to_dot(s.graph, &s.coloring, s.loops, "Lambda");
  if (!c.move.empty()) {
    std::size_t e0 = 0, i0 = 0, j0 = 0;
    char sep1 = 0, sep2 = 0;
    std::istringstream in(c.move);
    if (!(in >> e0 >> sep1 >> i0 >> sep2 >> j0) || sep1 != ',' || sep2 != ',')
      throw Error("--move expects e0,i0,j0");
    const NLoop* loop = nullptr;
    for (const auto& L : s.loops)
      if (L.color == c.loop_color) loop = &L;
    if (c.loop_color != 0 && !loop) throw Error("no loop of color " + std::to_string(c.loop_color));
    const auto m = rbs_from_indices(s.graph, e0, i0, j0, loop);
    const auto r = apply_rbs(s.graph, s.coloring, m);
    json mj = {{"bispecial", m.bispecial}, {"entering", m.entering}, {"leaving", m.leaving},
               {"coloring_valid", r.coloring_valid}, {"violations", violations_json(r.violations)}};
    if (loop) {
      try {
        mj["kind"] = move_kind_name(classify_move(s.graph, m, *loop));
      } catch (const Error& e) {
        mj["kind"] = std::string("inadmissible: ") + e.what();
      }
    }
    Itinerary after;
    after.steps.push_back({r.graph, r.coloring, {}});
    mj["result"] = json::parse(itinerary_to_json(after));
    out["move"] = mj;
    dot += to_dot(r.graph, &r.coloring, {}, "Lambda_after");
  }
  return out;
}

json cmd_xi(const Config& c, std::string& dot) {
  if (c.itinerary_path.empty()) throw Error("--itinerary is required");
  const auto it = read_itinerary(c.itinerary_path);
  const auto v = itinerary_check(it);
  json events = json::array();
  for (const auto& e : v.events)
    events.push_back({{"step", e.step}, {"color", e.color},
                      {"kind", e.kind == LoopEventKind::shrink ? "shrink" : "spread"},
                      {"vertices", e.vertices}, {"edges", e.edges}});
  const auto& s0 = it.steps.front();
  const auto xi = build_xi(s0.graph, s0.loops, v.loop_moves);
  const auto b = bound_check(s0.graph, s0.loops, v.loop_moves);
  dot = to_dot(xi, "Xi");
  json verts = xi.vertices;
  json edges = json::array();
  for (std::size_t k = 0; k < xi.edges.size(); ++k)
    edges.push_back({xi.vertices[xi.edges[k].first], xi.vertices[xi.edges[k].second], xi.edge_ids[k]});
  return {{"itinerary", c.itinerary_path},
          {"steps", it.steps.size()},
          {"valid", v.valid},
          {"violations", violations_json(v.violations)},
          {"events", events},
          {"loops", loops_json(s0.loops)},
          {"xi", {{"vertices", verts}, {"edges", edges}, {"moves_applied", xi.moves_applied},
                  {"K", xi.K}, {"E", xi.E}}},
          {"bound", bound_json(b)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor complexity, Rauzy graph and loop-coloring toolkit"};
  app.set_version_flag("--version", SYMDYN_VERSION);
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--horizon", c.horizon, "Longest factor length H")->check(CLI::Range(4, 100000));
    s->add_option("--out", c.out, "Write output to this file instead of stdout");
    s->add_option("--seed", c.seed, "Seed for randomized searches");
    s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    s->add_option("--theta", c.theta, "Color-estimate threshold (default 1/(4K))");
    s->add_option("--theta-tol", c.theta_tol, "Density floor tolerance");
    s->add_option("--K", c.K, "Override the complexity difference K");
  };
  auto add_input = [&](CLI::App* s) {
    s->add_option("--substitution", c.substitution, "Substitution JSON file");
    s->add_option("--iet", c.iet, "Interval exchange JSON file");
    s->add_option("--seq", c.seq, "Sequence text file");
    s->add_option("--rotation", c.rotation, "Rotation angle p/q");
    s->add_option("--length", c.length, "Prefix length for generated sequences")->check(CLI::PositiveNumber);
    s->add_option("--n", c.n, "Word length n");
  };

  std::map<CLI::App*, json (*)(const Config&, std::string&)> handlers;
  auto sub = [&](const char* name, const char* help, json (*fn)(const Config&, std::string&)) {
    auto* s = app.add_subcommand(name, help);
    add_common(s);
    handlers[s] = fn;
    return s;
  };

  auto* analyze = sub("analyze", "Complexity, regular bispecial condition and periodicity", cmd_analyze);
  add_input(analyze);
  auto* rauzy = sub("rauzy", "Rauzy graph and special Rauzy graph at length n", cmd_rauzy);
  add_input(rauzy);
  auto* evolve = sub("evolve", "Special Rauzy graph evolution with its move log", cmd_evolve);
  add_input(evolve);
  evolve->add_option("--n-max", c.n_max, "Stop once the next length would exceed this");
  evolve->add_option("--itinerary-out", c.itinerary_out, "Write the uncolored move itinerary here");
  auto* exitw = sub("exitwords", "Exit words of w with step q", cmd_exitwords);
  add_input(exitw);
  exitw->add_option("--w", c.w, "The word w")->required();
  exitw->add_option("--q", c.q, "Step q (default: minimal step)");
  exitw->add_option("--z", c.z, "Decompose this word instead of enumerating");
  auto* dens = sub("density", "Block densities of special words", cmd_density);
  add_input(dens);
  dens->add_flag("--special", c.special, "Check the special-word density floor (default on)");
  dens->add_option("--side", c.side, "Which special side")->check(CLI::IsMember({"left", "right", "both"}));
  dens->add_option("--w", c.w, "Also estimate the density of this word");
  auto* abs = sub("abstract", "Validate an abstract graph, apply a move, or run the tightness probe", cmd_abstract);
  abs->add_option("--graph", c.graph_path, "Itinerary-format JSON; step 0 is used");
  abs->add_option("--move", c.move, "RBS move as e0,i0,j0");
  abs->add_option("--loop", c.loop_color, "Loop color giving index 1 in --move");
  abs->add_flag("--probe", c.probe, "Search for E distinctly colored loops on graphs with the given K");
  abs->add_option("--E", c.E, "Number of loops for --probe");
  abs->add_option("--max-vertices", c.max_vertices, "Vertex bound for --probe");
  auto* xi = sub("xi", "Check an itinerary and build its Xi graph", cmd_xi);
  xi->add_option("--itinerary", c.itinerary_path, "Itinerary JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  CLI::App* chosen = app.get_subcommands().front();
  c.command = chosen->get_name();
  // Long factors of a short sample occur once and are trimmed away, so exit
  // words default to a horizon that keeps them.
  if (c.command == "exitwords" && chosen->count("--horizon") == 0) c.horizon = 20;
  try {
    std::string dot;
    json report;
    report["schema_version"] = kSchemaVersion;
    report["tool"] = {{"name", "symdyn"}, {"version", SYMDYN_VERSION}};
    report["config"] = config_json(c);
    report["horizon"] = c.horizon;
    report["result"] = handlers.at(chosen)(c, dot);
    if (c.format == "dot" && dot.empty()) throw Error(c.command + " has no DOT output");
    const std::string text = c.format == "dot" ? dot : report.dump(2) + "\n";
    if (c.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(c.out);
      if (!f) throw Error("cannot write " + c.out);
      f << text;
    }
    return 0;
  } catch (const HorizonExceeded& e) {
    std::cerr << "horizon error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
