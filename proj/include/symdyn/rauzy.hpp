#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdyn/abstract_graph.hpp"
#include "symdyn/digraph.hpp"
#include "symdyn/language.hpp"

namespace symdyn {

// Vertices L_n (sorted), edges L_{n+1} (sorted), edge w -> from w[1..n] to w[2..n+1].
struct RauzyGraph {
  std::size_t n = 0;
  std::vector<Word> vertices;
  std::vector<Word> edges;
  EdgeList ends;
  std::vector<std::vector<std::size_t>> in_adj, out_adj;  // edge indices

  std::optional<std::size_t> index_of(const Word& w) const;
  bool left_special(std::size_t v) const { return in_adj[v].size() >= 2; }
  bool right_special(std::size_t v) const { return out_adj[v].size() >= 2; }
  bool special(std::size_t v) const { return left_special(v) || right_special(v); }
};

// Requires n <= H-2.
RauzyGraph build_rauzy(const LanguageOracle& oracle, std::size_t n);

struct SpecialVertex {
  Word word;
  Side tag = Side::left;
  bool bispecial = false;
};

struct SpecialEdge {
  std::size_t from = 0, to = 0;
  Word path;              // |path| = n exactly for the internal edge of a bispecial
  bool internal = false;
};

// Vertices sorted by (word, tag) with the left tag first; edges sorted by
// (from, path).
struct SpecialRauzyGraph {
  std::size_t n = 0;
  Alphabet alphabet;
  std::vector<SpecialVertex> vertices;
  std::vector<SpecialEdge> edges;
  long long K = 0;                  // p(n+1) - p(n)
  std::size_t K_left = 0, K_right = 0;
  bool partial = false;             // some walk never met a special word
  bool has_self_loop = false;

  std::optional<std::size_t> vertex_of(const Word& w, Side tag) const;
  std::optional<std::size_t> edge_of(const Word& path) const;
  EdgeList edge_list() const;
};

SpecialRauzyGraph build_special_rauzy(const LanguageOracle& oracle, std::size_t n);
SpecialRauzyGraph build_special_rauzy(const LanguageOracle& oracle, const RauzyGraph& g);

struct Connectivity {
  bool strong = false;
  bool weak = false;
};

Connectivity connectivity(const RauzyGraph& g);
Connectivity connectivity(const SpecialRauzyGraph& g);

// Circuit in Gamma_n through no s-special vertex, as its vertex words.
std::optional<std::vector<Word>> special_free_circuit(const RauzyGraph& g, Side side);

struct RepresentativeSet {
  std::vector<std::pair<std::size_t, Word>> windows;  // (1-based position, window)
  bool internal = false;
  // Internal edges only: the rewritten path a w b and its windows, which
  // are always excluded, so `rewritten_windows` is empty.
  Word rewritten;
  std::vector<std::pair<std::size_t, Word>> rewritten_windows;
};

// Windows w_j of the path word, excluding j = 1 when the edge leaves a
// right-tagged vertex and the last j when it enters a left-tagged one.
RepresentativeSet representatives(const LanguageOracle& oracle, const SpecialRauzyGraph& g,
                                  std::size_t edge);

struct RbsEvent {
  Word bispecial;
  Symbol a_hat = 0, b_hat = 0;
  // Edge indices in the starting graph.
  std::size_t internal_edge = 0, entering_edge = 0, leaving_edge = 0;
  std::size_t i0 = 0, j0 = 0;  // 1-based among in-edges / out-edges by index
};

// (tag, branching degree) pairs, sorted: in-degree for left tags,
// out-degree for right tags.
std::vector<std::pair<int, std::size_t>> type_profile(const SpecialRauzyGraph& g);

struct EvolutionStep {
  std::size_t n = 0, n_tilde = 0, n_next = 0;
  SpecialRauzyGraph before, after;
  std::vector<std::size_t> vertex_map;  // before vertex -> after vertex
  std::vector<std::size_t> edge_map;    // before edge -> after edge
  std::vector<RbsEvent> events;         // lexicographic by bispecial word
  bool matches_moves = false;           // after == moves applied in lex order
  bool order_independent = false;       // same result in reverse order
  bool profile_preserved = false;
};

// Steps n -> n' = 1 + least bispecial length >= n, checking each
// intermediate graph against the previous one under the identification.
// Throws HorizonExceeded without a bispecial length m with m + 3 <= H,
// Error on an irregular bispecial in [n, n'-1], and std::logic_error if a
// rewritten path or identity check fails.
EvolutionStep evolve(const LanguageOracle& oracle, std::size_t n);

// Vertex names are "<word>|l" and "<word>|r"; edge ids are edge indices.
AbstractGraph to_abstract(const SpecialRauzyGraph& g);

std::string to_dot(const RauzyGraph& g, const Alphabet& alphabet, const std::string& name = "Gamma");
std::string to_dot(const SpecialRauzyGraph& g, const std::string& name = "Gamma_sp");

}  // namespace symdyn
