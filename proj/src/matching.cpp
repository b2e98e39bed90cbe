#include "multipers/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "multipers/errors.hpp"

namespace multipers {

std::vector<std::size_t> maximum_matching(std::size_t left, std::size_t right,
                                          const std::vector<std::vector<std::size_t>>& adjacency) {
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> match_left(left, npos), match_right(right, npos), dist(left);

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < left; ++u) {
      dist[u] = match_left[u] == npos ? 0 : inf;
      if (dist[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adjacency[u]) {
        std::size_t w = match_right[v];
        if (w == npos) {
          found = true;
        } else if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    for (std::size_t v : adjacency[u]) {
      std::size_t w = match_right[v];
      if (w == npos || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = inf;
    return false;
  };

  while (bfs())
    for (std::size_t u = 0; u < left; ++u)
      if (match_left[u] == npos) dfs(u);
  return match_left;
}

assignment bottleneck_assignment(std::size_t left, std::size_t right,
                                 const std::function<extended(std::size_t, std::size_t)>& pair_cost,
                                 const std::vector<extended>& delete_left, const std::vector<extended>& delete_right) {
  if (delete_left.size() != left || delete_right.size() != right)
    throw dimension_error("deletion cost lists do not match the item counts");
  assignment out{extended(0L), std::vector<std::optional<std::size_t>>(left)};
  if (left == 0 && right == 0) return out;

  // Costs are replaced by their rank among the finite candidates.
  std::vector<extended> raw(left * right);
  std::vector<rational> candidates;
  for (std::size_t i = 0; i < left; ++i)
    for (std::size_t j = 0; j < right; ++j) {
      raw[i * right + j] = pair_cost(i, j);
      if (raw[i * right + j].is_finite()) candidates.push_back(raw[i * right + j].value());
    }
  for (const auto& d : delete_left)
    if (d.is_finite()) candidates.push_back(d.value());
  for (const auto& d : delete_right)
    if (d.is_finite()) candidates.push_back(d.value());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  constexpr std::size_t forbidden = std::numeric_limits<std::size_t>::max();
  auto rank = [&](const extended& c) -> std::size_t {
    if (c.is_infinite()) return forbidden;
    return static_cast<std::size_t>(std::lower_bound(candidates.begin(), candidates.end(), c.value()) -
                                    candidates.begin());
  };
  std::vector<std::size_t> pair_rank(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) pair_rank[k] = rank(raw[k]);
  std::vector<std::size_t> left_rank(left), right_rank(right);
  for (std::size_t i = 0; i < left; ++i) left_rank[i] = rank(delete_left[i]);
  for (std::size_t j = 0; j < right; ++j) right_rank[j] = rank(delete_right[j]);

  // Left vertices: items i < left, then diagonal copies of right items.
  // Right vertices: items j < right, then diagonal copies of left items.
  auto solve = [&](std::size_t level) {
    std::vector<std::vector<std::size_t>> adj(left + right);
    for (std::size_t i = 0; i < left; ++i) {
      for (std::size_t j = 0; j < right; ++j)
        if (pair_rank[i * right + j] <= level) adj[i].push_back(j);
      if (left_rank[i] <= level) adj[i].push_back(right + i);
    }
    for (std::size_t j = 0; j < right; ++j) {
      if (right_rank[j] <= level) adj[left + j].push_back(j);
      for (std::size_t i = 0; i < left; ++i) adj[left + j].push_back(right + i);
    }
    return maximum_matching(left + right, left + right, adj);
  };
  auto perfect = [&](const std::vector<std::size_t>& m) {
    return std::none_of(m.begin(), m.end(), [](std::size_t v) { return v == npos; });
  };

  if (candidates.empty() || !perfect(solve(candidates.size() - 1))) {
    out.value = extended::infinity();
    return out;
  }
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (perfect(solve(mid)))
      hi = mid;
    else
      lo = mid + 1;
  }
  auto m = solve(lo);
  out.value = candidates[lo];
  for (std::size_t i = 0; i < left; ++i)
    if (m[i] < right) out.partner[i] = m[i];
  return out;
}

}  // namespace multipers
