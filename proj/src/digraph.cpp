#include "symdyn/digraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace symdyn {

namespace {

std::vector<std::vector<std::size_t>> adjacency(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) adj[a].push_back(b);
  return adj;
}

}  // namespace

std::vector<std::size_t> strong_components(std::size_t n, const EdgeList& edges) {
  const auto adj = adjacency(n, edges);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, ncomp = 0;
  // Iterative Tarjan: frames hold (vertex, next child position).
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adj[v].size()) {
        const std::size_t w = adj[v][pos++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
    }
  }
  return comp;
}

bool strongly_connected(std::size_t n, const EdgeList& edges) {
  if (n == 0) return true;
  const auto c = strong_components(n, edges);
  return std::all_of(c.begin(), c.end(), [&](std::size_t x) { return x == c[0]; });
}

std::vector<std::size_t> weak_components(std::size_t n, const EdgeList& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [a, b] : edges) {
    const auto ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::size_t> label(n, static_cast<std::size_t>(-1)), out(n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto r = find(v);
    if (label[r] == static_cast<std::size_t>(-1)) label[r] = next++;
    out[v] = label[r];
  }
  return out;
}

bool weakly_connected(std::size_t n, const EdgeList& edges) {
  if (n == 0) return true;
  const auto c = weak_components(n, edges);
  return std::all_of(c.begin(), c.end(), [](std::size_t x) { return x == 0; });
}

std::optional<std::vector<std::size_t>> find_circuit(std::size_t n, const EdgeList& edges) {
  const auto adj = adjacency(n, edges);
  std::vector<int> state(n, 0);  // 0 new, 1 on path, 2 done
  std::vector<std::size_t> parent(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    state[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adj[v].size()) {
        const std::size_t w = adj[v][pos++];
        if (state[w] == 1) {
          std::vector<std::size_t> cyc{w};
          for (std::size_t u = v; u != w; u = parent[u]) cyc.push_back(u);
          std::reverse(cyc.begin() + 1, cyc.end());
          return cyc;
        }
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = v;
          frames.emplace_back(w, 0);
        }
        continue;
      }
      state[v] = 2;
      frames.pop_back();
    }
  }
  return std::nullopt;
}

}  // namespace symdyn
