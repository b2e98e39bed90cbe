#pragma once

#include <cstddef>
#include <vector>

#include "multipers/field.hpp"
#include "multipers/rational.hpp"

namespace multipers {

/// Candidate epsilon-interleaving between presentations P and Q: f sends each
/// generator of P to a combination of generators of Q, g the other way.
struct interleaving_witness {
  rational epsilon;
  std::vector<sparse_column> f;
  std::vector<sparse_column> g;
};

/// Unit maps between presentations with matching generator lists.
interleaving_witness identity_witness(std::size_t generators, const rational& epsilon);

/// P -> Q then Q -> R; epsilons add.
interleaving_witness compose(const prime_field& field, const interleaving_witness& first,
                             const interleaving_witness& second);

/// Q -> P from P -> Q.
interleaving_witness reversed(const interleaving_witness& w);

/// Block-diagonal witness between direct sums; epsilons must agree.
interleaving_witness direct_sum(const interleaving_witness& a, const interleaving_witness& b,
                                std::size_t a_targets, std::size_t a_sources);

/// Image of the column x under the map given by `images` (one column per source index).
sparse_column apply(const prime_field& field, const std::vector<sparse_column>& images, const sparse_column& x);

}  // namespace multipers
