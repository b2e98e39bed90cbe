#pragma once

#include <cstdint>
#include <vector>

#include "multipers/blocks.hpp"
#include "multipers/metrics.hpp"

namespace multipers {

/// Two non-isomorphic modules with identical fibered barcodes.
struct incompleteness_pair {
  presentation n;
  presentation o;
  /// eps-interleaving between n and o.
  interleaving_witness witness;
};

/// N = <a at (e,0), b at (0,e)> with deaths at 10e; O adds c at (e,e), identifies a and b at (e,e),
/// and truncates c at 10e.
incompleteness_pair make_incompleteness_pair(const rational& epsilon, prime_field field = prime_field(2));

struct incompleteness_report {
  incompleteness_pair pair;
  distance_report d0;
  distance_report rank_bound;
  verification_report witness_check;
  bool pass = false;
};

/// d0(N, O) sampled, the rank lower bound, and the witness check.
incompleteness_report run_incompleteness(const rational& epsilon, const sample_config& config);

/// Local equivalence on M + N versus M + O for the incompleteness pair.
local_equivalence_report run_anchor_counterexample(const presentation& m, const rational& kappa,
                                                   const sample_config& config);

struct sandwich_row {
  block a;
  block b;
  extended restricted;
  extended extended_distance;
  bool within = false;
};

/// Random same-kind block pairs; each row checks d <= d_ext <= 2d.
std::vector<sandwich_row> run_block_sandwich(std::size_t pairs, std::uint64_t seed);

}  // namespace multipers
