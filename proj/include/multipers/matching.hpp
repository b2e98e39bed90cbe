#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "multipers/rational.hpp"

namespace multipers {

struct assignment {
  extended value;
  /// Partner on the right for each left item, empty when the item is deleted.
  std::vector<std::optional<std::size_t>> partner;
};

/// Minimum over partial matchings of the largest cost paid: matched pairs pay
/// `pair_cost`, unmatched items pay their deletion cost. Infinite costs forbid
/// the choice; the result is infinite when no finite choice exists.
assignment bottleneck_assignment(std::size_t left, std::size_t right,
                                 const std::function<extended(std::size_t, std::size_t)>& pair_cost,
                                 const std::vector<extended>& delete_left, const std::vector<extended>& delete_right);

/// Hopcroft-Karp maximum matching; adjacency lists map left to right vertices.
/// Returns the right partner of each left vertex (npos when unmatched).
std::vector<std::size_t> maximum_matching(std::size_t left, std::size_t right,
                                          const std::vector<std::vector<std::size_t>>& adjacency);

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace multipers
