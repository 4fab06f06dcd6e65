#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace symdyn {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

// Strongly connected component index per vertex (Tarjan), numbered from 0.
std::vector<std::size_t> strong_components(std::size_t n, const EdgeList& edges);
bool strongly_connected(std::size_t n, const EdgeList& edges);
// Weak component index per vertex, numbered in order of least member.
std::vector<std::size_t> weak_components(std::size_t n, const EdgeList& edges);
bool weakly_connected(std::size_t n, const EdgeList& edges);
// Vertices of some directed circuit (including self-loops), if any.
std::optional<std::vector<std::size_t>> find_circuit(std::size_t n, const EdgeList& edges);

}  // namespace symdyn
