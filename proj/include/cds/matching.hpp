#pragma once

#include <vector>

namespace cds::detail {

// Maximum bipartite matching where each holder h may take up to cap[h]
// candidates and each candidate is assigned at most once. Implemented as
// plain Kuhn augmenting paths after expanding holders into unit slots.
class SlotMatcher {
 public:
  SlotMatcher(const std::vector<int>& caps) {
    for (std::size_t h = 0; h < caps.size(); ++h)
      for (int s = 0; s < caps[h]; ++s) slot_holder_.push_back(static_cast<int>(h));
    holder_slots_.assign(caps.size(), {});
    for (std::size_t s = 0; s < slot_holder_.size(); ++s)
      holder_slots_[slot_holder_[s]].push_back(static_cast<int>(s));
  }

  // edges[c] lists holder indexes candidate c may go to.
  int solve(const std::vector<std::vector<int>>& edges) {
    owner_.assign(slot_holder_.size(), -1);
    int matched = 0;
    std::vector<char> visited(slot_holder_.size(), 0);
    for (std::size_t c = 0; c < edges.size(); ++c) {
      std::fill(visited.begin(), visited.end(), 0);
      if (augment(static_cast<int>(c), edges, visited)) ++matched;
    }
    return matched;
  }

 private:
  bool augment(int c, const std::vector<std::vector<int>>& edges, std::vector<char>& visited) {
    for (int h : edges[c])
      for (int s : holder_slots_[h]) {
        if (visited[s]) continue;
        visited[s] = 1;
        if (owner_[s] < 0 || augment(owner_[s], edges, visited)) {
          owner_[s] = c;
          return true;
        }
      }
    return false;
  }

  std::vector<int> slot_holder_;
  std::vector<std::vector<int>> holder_slots_;
  std::vector<int> owner_;
};

}  // namespace cds::detail
