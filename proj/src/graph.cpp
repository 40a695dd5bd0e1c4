#include "graph.hpp"

#include <algorithm>

namespace wfadis::internal {

std::vector<int> StronglyConnectedComponents(
    const std::vector<std::vector<int>> &adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> index(n, -1), low(n, 0), component(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  // (node, next child position)
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0, num_components = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto &[v, pos] = call.back();
      if (pos < adjacency[v].size()) {
        int w = adjacency[v][pos++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = num_components;
        } while (w != v);
        ++num_components;
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return component;
}

std::vector<bool> Reachable(const std::vector<std::vector<int>> &adjacency,
                            const std::vector<int> &seeds) {
  std::vector<bool> seen(adjacency.size(), false);
  std::vector<int> queue;
  for (int s : seeds) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int w : adjacency[queue[head]]) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace wfadis::internal
