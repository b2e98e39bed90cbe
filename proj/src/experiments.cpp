#include "multipers/experiments.hpp"

#include "multipers/random.hpp"

namespace multipers {

incompleteness_pair make_incompleteness_pair(const rational& epsilon, prime_field field) {
  if (epsilon <= 0) throw precondition_error("epsilon must be positive");
  const rational e = epsilon, z = 0, ten = 10 * epsilon;
  auto add_common = [&](presentation& p) {
    p.add_generator(grade{e, z}, "a");
    p.add_generator(grade{z, e}, "b");
  };
  auto add_deaths = [&](presentation& p) {
    p.add_relation(grade{ten, z}, unit_column(0));
    p.add_relation(grade{z, ten}, unit_column(1));
    p.add_relation(grade{e, ten}, unit_column(0));
    p.add_relation(grade{ten, e}, unit_column(1));
  };

  presentation n(2, field);
  add_common(n);
  add_deaths(n);

  presentation o(2, field);
  add_common(o);
  o.add_generator(grade{e, e}, "c");
  add_deaths(o);
  o.add_relation(grade{e, e}, {entry{0, field.neg(1)}, entry{1, 1}});
  o.add_relation(grade{ten, e}, unit_column(2));
  o.add_relation(grade{e, ten}, unit_column(2));

  // a -> a, b -> c; back: a -> a, b -> a, c -> b.
  interleaving_witness w{epsilon, {unit_column(0), unit_column(2)}, {unit_column(0), unit_column(0), unit_column(1)}};
  return {std::move(n), std::move(o), std::move(w)};
}

incompleteness_report run_incompleteness(const rational& epsilon, const sample_config& config) {
  incompleteness_report r{make_incompleteness_pair(epsilon), {}, {}, {}, false};
  r.d0 = matching_distance(r.pair.n, r.pair.o, config);
  r.rank_bound = rank_lower_bound(r.pair.n, r.pair.o);
  r.witness_check = verify_interleaving(r.pair.n, r.pair.o, r.pair.witness);
  r.pass = r.d0.value == extended(0L) && extended(0L) < r.rank_bound.value && r.witness_check.accepted;
  return r;
}

local_equivalence_report run_anchor_counterexample(const presentation& m, const rational& kappa,
                                                   const sample_config& config) {
  auto pair = make_incompleteness_pair(rational(1), m.field());
  presentation left = direct_sum(m, pair.n);
  presentation right = direct_sum(m, pair.o);
  auto id = identity_witness(m.num_generators(), rational(1));
  auto w = direct_sum(id, pair.witness, m.num_generators(), m.num_generators());
  return local_equivalence_experiment(left, right, kappa, w, config);
}

std::vector<sandwich_row> run_block_sandwich(std::size_t pairs, std::uint64_t seed) {
  instance_generator gen(seed);
  std::vector<sandwich_row> rows;
  const block_kind kinds[] = {block_kind::oo, block_kind::co, block_kind::oc, block_kind::cc};
  for (std::size_t k = 0; k < pairs; ++k) {
    block_kind kind = kinds[gen.integer(0, 3)];
    sandwich_row row{gen.random_block(kind, 8, 4), gen.random_block(kind, 8, 4), {}, {}, false};
    std::vector<block> a{row.a}, b{row.b};
    row.restricted = unextended_matching_distance(a, b);
    row.extended_distance = block_matching_distance(a, b);
    row.within = row.restricted <= row.extended_distance && row.extended_distance <= rational(2) * row.restricted;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace multipers
