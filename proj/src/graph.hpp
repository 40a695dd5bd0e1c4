#ifndef WFADIS_SRC_GRAPH_HPP_
#define WFADIS_SRC_GRAPH_HPP_

#include <cstdint>
#include <vector>

namespace wfadis::internal {

// Packs a state pair into a hashable key.
inline std::uint64_t PairKey(std::int32_t p, std::int32_t q) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p)) << 32) |
         static_cast<std::uint32_t>(q);
}

// Strongly connected components of a digraph given as adjacency lists.
// Returns the component index of every node (iterative Tarjan).
std::vector<int> StronglyConnectedComponents(
    const std::vector<std::vector<int>> &adjacency);

// Nodes reachable from seeds.
std::vector<bool> Reachable(const std::vector<std::vector<int>> &adjacency,
                            const std::vector<int> &seeds);

}  // namespace wfadis::internal

#endif  // WFADIS_SRC_GRAPH_HPP_
