#pragma once

#include <functional>

#include "multipers/module.hpp"
#include "multipers/witness.hpp"

namespace multipers {

/// A presentation together with a witness interleaving it with the input.
struct transformed {
  presentation module;
  interleaving_witness witness;
};

/// 0-interleaving witness between p and its minimization.
interleaving_witness minimization_witness(const minimization& m);

/// Regrades generators and relations, then minimizes unless `raw`.
/// The witness is the identity at `epsilon`, composed with the minimization isomorphism.
transformed regrade(const presentation& p, const std::function<grade(const grade&)>& generator_map,
                    const std::function<grade(const relation&)>& relation_map, const rational& epsilon,
                    bool raw = false);

/// Merge functor: every grade snapped onto the grid.
transformed merge_module(const presentation& p, const grid_function& grid, const rational& delta,
                         merge_variant variant = merge_variant::two_sided, bool raw = false);

/// Image of the structure map M -> M(eps): generators move up by eps, relations to the
/// join of their grade with the moved grades of their support.
transformed translate_image(const presentation& p, const rational& epsilon, bool raw = false);

/// Translated image shifted back by eps: generators stay, relations move down by at most eps.
transformed simplify(const presentation& p, const rational& epsilon, bool raw = false);

/// Multipliers of kappa*eps used by the grid alignment pipeline.
struct grid_align_schedule {
  static constexpr int first_simplify = 2;
  static constexpr int first_merge = 2;
  static constexpr int second_simplify = 10;
  static constexpr int second_merge = 20;
  static constexpr int total = first_simplify + first_merge + second_simplify + second_merge;
  /// The grid's controlling constant must exceed this multiple of kappa*eps.
  static constexpr int required_gap = 40;
};

/// S(2ke), then merge(2ke), then S(10ke), then merge(20ke) onto `grid`, with a
/// composite witness at 34ke.
transformed grid_align(const presentation& p, const grid_function& grid, const rational& kappa_eps);

enum class transform_kind { shift, merge, simplify };

struct transform_spec {
  transform_kind kind = transform_kind::shift;
  rational amount;
  grid_function grid;
  merge_variant variant = merge_variant::two_sided;
};

/// The transformed presentation with its witness; shift witnesses are at the shift amount.
transformed interleaving_witness_for(const presentation& p, const transform_spec& spec);

/// A presentation of the ambient module of a path of presentations from M to N.
struct joint_presentation {
  std::size_t n = 0;
  prime_field field;
  rational epsilon;
  /// Generators of M then of N; N's grades are read on N's side.
  std::vector<generator> m_generators;
  std::vector<generator> n_generators;
  /// Columns index the combined generator list.
  std::vector<relation> m_relations;
  std::vector<relation> n_relations;
};

/// Throws unless both endpoints are homogeneous.
void validate(const joint_presentation& j);

/// Presentation at t in [0,1]: M-side grades move by +t eps, N-side grades by +(1-t) eps.
presentation interpolate(const joint_presentation& j, const rational& t, bool raw = false);

/// Joint presentation built from an eps-interleaving witness between P and Q.
joint_presentation joint_from_witness(const presentation& p, const presentation& q, const interleaving_witness& w);

}  // namespace multipers
