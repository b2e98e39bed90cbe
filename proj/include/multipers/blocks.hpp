#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multipers/presentation.hpp"
#include "multipers/witness.hpp"

namespace multipers {

/// Interval types of blocks on the half-plane y >= -x; the letters record
/// whether the left and right ends of the level-set interval are open or closed.
enum class block_kind { oo, co, oc, cc };

std::string to_string(block_kind k);
block_kind parse_block_kind(const std::string& s);

struct block {
  block_kind kind = block_kind::oo;
  rational a;
  extended b;

  friend bool operator==(const block&, const block&) = default;
};

/// Throws when b is infinite or the extended rectangle is empty.
void validate(const block& blk);

/// Rectangle [lower, upper) in Q^2; upper coordinates may be infinite.
struct rectangle {
  grade lower;
  std::array<extended, 2> upper;

  friend bool operator==(const rectangle&, const rectangle&) = default;
};

/// oo -> [-b,-a) x [a,b), co -> [-b,inf) x [a,b), oc -> [-b,a) x [a,inf), cc -> [-b,inf) x [a,inf).
rectangle extend_block(const block& blk);

/// Half the shortest finite side; infinite when no side is finite.
extended rectangle_radius(const rectangle& r);

/// Interleaving distance between two rectangle modules with the same infinite sides.
extended rectangle_distance(const rectangle& r, const rectangle& s);

/// Direct sum of the rectangle modules of the extended blocks.
presentation block_presentation(std::span<const block> blocks, prime_field field = prime_field(2));

/// Bottleneck distance between extended block decompositions; blocks match only blocks of their kind.
extended block_matching_distance(std::span<const block> a, std::span<const block> b);

struct block_matching_result {
  extended value;
  /// Present when the value is finite; relates block_presentation(a) and block_presentation(b).
  std::optional<interleaving_witness> witness;
};

/// The optimal block matching turned into an interleaving witness: matched pairs
/// within corner distance map by the identity, all other blocks map to zero.
block_matching_result block_matching_witness(std::span<const block> a, std::span<const block> b);

/// Interleaving distance between two same-kind blocks restricted to y >= -x.
extended unextended_block_distance(const block& x, const block& y);

/// Distance from a block restricted to y >= -x to the zero module.
extended unextended_block_radius(const block& x);

/// Same-kind bottleneck matching with the restricted block costs.
extended unextended_matching_distance(std::span<const block> a, std::span<const block> b);

}  // namespace multipers
