#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multipers/fibered.hpp"
#include "multipers/matching.hpp"
#include "multipers/witness.hpp"

namespace multipers {

/// Bottleneck distance; infinite bars only match infinite bars.
extended bottleneck(const barcode& a, const barcode& b);

/// Bottleneck distance with an optimal matching (indices into a.bars() and b.bars()).
assignment bottleneck_matching(const barcode& a, const barcode& b);

enum class bound_kind { exact, lower_bound, upper_bound };

std::string to_string(bound_kind k);

struct distance_report {
  extended value;
  bound_kind kind = bound_kind::lower_bound;
  std::optional<line_spec> argmax;
  std::size_t lines_evaluated = 0;
};

struct sample_config {
  /// Number of slopes (two parameters) or random directions (otherwise).
  std::size_t directions = 64;
  /// Rounds of local refinement around the best line.
  std::size_t adaptive_rounds = 4;
  /// Refinement stops once a round improves by no more than this.
  rational improvement_threshold = 0;
  /// Extra jittered lines drawn from this seed.
  std::uint64_t seed = 0;
  std::size_t jitter_lines = 0;
  /// Worker threads; 0 reads MULTIPERS_THREADS and falls back to 1.
  unsigned threads = 0;
};

/// Lines used to estimate the matching distance between p and q.
std::vector<line_spec> sample_lines(const presentation& p, const presentation& q, const sample_config& config);

/// Slopes between 1/16 and 16 produced by repeated mediant subdivision.
std::vector<rational> sample_slopes(std::size_t count);

/// max over lines of w(L) * d_B on the given lines.
distance_report matching_distance_on(const presentation& p, const presentation& q, std::span<const line_spec> lines,
                                     unsigned threads = 1);

/// Sampled matching distance with adaptive refinement; a lower bound on the true value.
distance_report matching_distance(const presentation& p, const presentation& q, const sample_config& config = {});

struct verification_report {
  bool accepted = false;
  std::string reason;
};

/// Checks grade compatibility, that relations map into relations, and that both
/// composites agree with the eps-shift maps modulo relations.
verification_report verify_interleaving(const presentation& p, const presentation& q, const interleaving_witness& w);

/// Default probe set: every point of the product grid of both Betti grids.
std::vector<grade> default_probes(const presentation& p, const presentation& q);

/// Largest breakpoint below which a two-source rank obstruction rules out every interleaving.
distance_report rank_lower_bound(const presentation& p, const presentation& q, std::span<const grade> probes);
distance_report rank_lower_bound(const presentation& p, const presentation& q);

/// Sum of sampled matching distances between consecutive presentations.
extended path_length_d0(std::span<const presentation> path, const sample_config& config = {});

/// Interleaving bound from an optional witness, checked before use.
extended certified_upper_bound(const presentation& p, const presentation& q,
                               const std::optional<interleaving_witness>& w);

enum class local_verdict { pass, fail_at_resolution, hypothesis_failed, hypothesis_unverified, trivial };

std::string to_string(local_verdict v);

struct local_equivalence_report {
  rational kappa;
  extended controlling;
  extended eps_lower;
  extended eps_upper;
  /// c_M / (2(34 kappa + 1)).
  extended hypothesis_bound;
  bool hypothesis_holds = false;
  distance_report d0;
  /// kappa times the certified upper bound.
  extended kappa_eps;
  bool strict_pass = false;
  bool nonstrict_pass = false;
  local_verdict verdict = local_verdict::fail_at_resolution;
  std::string note;
};

/// Tests d_0(M, N) > kappa * eps for N close to M relative to M's controlling constant.
local_equivalence_report local_equivalence_experiment(const presentation& m, const presentation& n,
                                                      const rational& kappa,
                                                      const std::optional<interleaving_witness>& witness,
                                                      const sample_config& config = {});

}  // namespace multipers
