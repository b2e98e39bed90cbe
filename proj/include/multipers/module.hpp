#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "multipers/presentation.hpp"

namespace multipers {

/// A minimal presentation together with the isomorphism back to the input.
struct minimization {
  presentation result;
  /// Image of each input generator as a combination of result generators.
  std::vector<sparse_column> to_result;
  /// Input index of each result generator.
  std::vector<std::size_t> from_result;
};

/// Cancels relation/generator pairs of equal grade, then drops relations that
/// lie in the span of earlier relations below them.
minimization minimize_with_map(const presentation& p);
presentation minimize(const presentation& p);

/// True when no relation has a nonzero coefficient on a generator of equal
/// grade and no relation is redundant.
bool is_minimal(const presentation& p);

struct betti_data {
  std::vector<grade> xi0;
  std::vector<grade> xi1;
  grid_function grid;
  extended controlling;
  /// |xi0| + |xi1|; higher syzygies are not counted.
  std::size_t partial_complexity() const;
};

/// Betti grades of the minimized presentation and the grid they span.
betti_data betti_and_grid(const presentation& p);

/// dim M_a.
std::size_t hilbert(const presentation& p, const grade& a);

/// Rank of the sum of structure maps from M_s (s in sources) into M_target.
/// Every source must lie below the target.
std::size_t image_rank(const presentation& p, std::span<const grade> sources, const grade& target);

/// rank(M_a -> M_b).
std::size_t rank_invariant(const presentation& p, const grade& a, const grade& b);

}  // namespace multipers
