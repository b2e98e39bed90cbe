#include <doctest.h>

#include <algorithm>

#include "multipers/experiments.hpp"
#include "multipers/fibered.hpp"
#include "multipers/functors.hpp"
#include "multipers/metrics.hpp"
#include "multipers/random.hpp"
#include "oracles.hpp"

using namespace multipers;

namespace {

rational q(long n, long d = 1) { return rational(n) / d; }

}  // namespace

TEST_CASE("merge collapses a generator and its equal-grade relation") {
  presentation p(2);
  p.add_generator(grade{q(0), q(1, 8)});
  p.add_relation(grade{q(1, 8), q(1, 8)}, unit_column(0));
  grid_function g({{q(0)}, {q(0)}});
  auto out = merge_module(p, g, q(1, 4));
  CHECK(out.module.num_generators() == 0);
  CHECK(out.module.num_relations() == 0);
  CHECK(verify_interleaving(p, out.module, out.witness).accepted);
}

TEST_CASE("merge leaves grades away from the grid") {
  auto box = box_module(grade{q(1), q(1)}, {extended(q(3)), extended(q(3))});
  grid_function g({{q(0), q(10)}, {q(0), q(10)}});
  auto out = merge_module(box, g, q(1, 4));
  CHECK(out.module == box);
  CHECK_THROWS_AS(merge_module(box, g, q(6)), precondition_error);
}

TEST_CASE("translate_image and simplify kill short bars") {
  presentation p(1);
  p.add_generator(grade{q(0)});
  p.add_relation(grade{q(3)}, unit_column(0));
  auto t = translate_image(p, q(4));
  CHECK(t.module.num_generators() == 0);
  auto raw = translate_image(p, q(4), true);
  CHECK(raw.module.relations()[0].degree == grade{q(4)});

  auto box = box_module(grade{q(0), q(0)}, {extended(q(2)), extended(q(2))});
  CHECK(simplify(box, q(3)).module.num_generators() == 0);
  auto kept = simplify(box, q(1, 2));
  CHECK(hilbert(kept.module, grade{q(1), q(1)}) == 1);
  CHECK(hilbert(kept.module, grade{q(3, 2), q(1)}) == 0);
}

TEST_CASE("functor witnesses verify at their parameter") {
  instance_generator gen(4);
  for (int k = 0; k < 15; ++k) {
    auto p = gen.staircase_sum(2, 3, 6);
    for (auto eps : {q(1, 8), q(1, 4), q(1, 2)}) {
      auto s = simplify(p, eps);
      CHECK(verify_interleaving(p, s.module, s.witness).accepted);
      CHECK(s.witness.epsilon == eps);
      auto t = translate_image(p, eps);
      CHECK(verify_interleaving(p, t.module, t.witness).accepted);
      grid_function grid({{q(0), q(2), q(5)}, {q(1), q(3), q(6)}});
      auto m = merge_module(p, grid, eps);
      CHECK(verify_interleaving(p, m.module, m.witness).accepted);
    }
  }
}

TEST_CASE("shrunken witnesses are rejected") {
  auto box = box_module(grade{q(0), q(0)}, {extended(q(2)), extended(q(2))});
  auto s = shift(box, q(1, 2));
  auto spec = transform_spec{transform_kind::shift, q(1, 2), {}, merge_variant::two_sided};
  auto w = interleaving_witness_for(box, spec).witness;
  CHECK(verify_interleaving(box, s, w).accepted);
  w.epsilon = q(1, 4);
  auto r = verify_interleaving(box, s, w);
  CHECK_FALSE(r.accepted);
  CHECK(r.reason.find("generator 0") != std::string::npos);
}

TEST_CASE("plus merge matches the module at the floor point") {
  // For a coordinate in [g - delta, g) the merged module reads the input just below g - delta.
  instance_generator gen(8);
  grid_function grid({{q(0), q(2), q(4)}, {q(0), q(2), q(4)}});
  rational delta = q(1, 2);
  rational eta = q(1, 997);
  for (int k = 0; k < 20; ++k) {
    auto p = gen.general(2, 4, 5, 5, 4);
    auto merged = merge_module(p, grid, delta, merge_variant::plus).module;
    for (int s = 0; s < 30; ++s) {
      grade a{gen.fraction(-1, 6, 8), gen.fraction(-1, 6, 8)};
      grade floor = a;
      for (std::size_t i = 0; i < 2; ++i)
        for (const auto& g : grid.axis(i))
          if (g - delta <= a[i] && a[i] < g) floor[i] = g - delta - eta;
      CHECK(hilbert(merged, a) == oracle::dim_oracle(p, floor));
    }
  }
}

TEST_CASE("grid alignment lands on the grid with a 34 kappa eps witness") {
  auto pair = make_incompleteness_pair(q(1));
  auto grid = betti_and_grid(pair.n).grid;
  rational ke = q(1, 50);
  // Perturb N by less than kappa*eps per coordinate.
  auto moved = shift(pair.n, q(1, 100));
  auto out = grid_align(moved, grid, ke);
  for (const auto& g : all_grades(out.module)) CHECK(grid.in_image(g));
  CHECK(out.witness.epsilon == 34 * ke);
  CHECK(verify_interleaving(moved, out.module, out.witness).accepted);
  CHECK_THROWS_AS(grid_align(moved, grid, q(1, 20)), precondition_error);
}

TEST_CASE("interpolation moves along the joint presentation") {
  // Bar [0,2) and the zero module, glued at eps = 1.
  joint_presentation j{1, prime_field(2), q(1), {{"m", grade{q(0)}}}, {}, {{grade{q(2)}, unit_column(0)}},
                       {{grade{q(1)}, unit_column(0)}}};
  validate(j);
  for (auto t : {q(0), q(1, 4), q(1, 2), q(1)}) {
    auto bc = barcode_of(interpolate(j, t));
    if (t == q(1)) {
      CHECK(bc.empty());
    } else {
      REQUIRE(bc.size() == 1);
      CHECK(bc.bars()[0].birth == t);
      CHECK(bc.bars()[0].death == extended(rational(2 - t)));
    }
  }
  CHECK_THROWS_AS(interpolate(j, q(3, 2)), precondition_error);
}

TEST_CASE("joint presentation from a witness recovers the endpoints") {
  auto pair = make_incompleteness_pair(q(1));
  auto j = joint_from_witness(pair.n, pair.o, pair.witness);
  auto start = interpolate(j, q(0));
  auto end = interpolate(j, q(1));
  auto grid = grid_from_grades(all_grades(pair.o), 2);
  for (const auto& a : grid.image_points()) {
    CHECK(hilbert(start, a) == hilbert(pair.n, a));
    CHECK(hilbert(end, a) == hilbert(pair.o, a));
  }
  // The endpoints are isomorphic, not merely equal in dimension: ranks of two sources agree.
  std::vector<grade> sources{{q(1), q(0)}, {q(0), q(1)}};
  CHECK(image_rank(end, sources, grade{q(1), q(1)}) == 1);
  CHECK(image_rank(start, sources, grade{q(1), q(1)}) == 2);
}

TEST_CASE("simplify uses relations with a shared generator") {
  // a@0, b@2, b dies at 3 and a+b at 7/2: the bar of a is [0, 7/2), not decided by either relation alone.
  presentation p(1);
  p.add_generator(grade{q(0)});
  p.add_generator(grade{q(2)});
  p.add_relation(grade{q(3)}, unit_column(1));
  p.add_relation(grade{q(7, 2)}, {entry{0, 1}, entry{1, 1}});
  auto s = simplify(p, q(2));
  CHECK(hilbert(s.module, grade{q(1)}) == 1);
  CHECK(hilbert(s.module, grade{q(3, 2)}) == 0);
  CHECK(verify_interleaving(p, s.module, s.witness).accepted);
}

TEST_CASE("simplify is the image of the structure map") {
  instance_generator gen(41);
  for (int k = 0; k < 25; ++k) {
    auto p = gen.general(2, 5, 7, 6, 2, prime_field(k % 2 ? 3 : 2));
    rational eps = gen.fraction(0, 2, 4);
    auto s = simplify(p, eps);
    auto t = translate_image(p, eps);
    for (int i = 0; i < 15; ++i) {
      grade a{gen.fraction(-1, 8, 4), gen.fraction(-1, 8, 4)};
      auto expected = oracle::rank_oracle(p, a, shifted(a, eps));
      CHECK(hilbert(s.module, a) == expected);
      CHECK(hilbert(t.module, shifted(a, eps)) == expected);
    }
  }
}

TEST_CASE("simplify regrades a single relation") {
  presentation p(2);
  p.add_generator(grade{q(0), q(0)});
  p.add_relation(grade{q(3), q(1)}, unit_column(0));
  auto s = simplify(p, q(2), true).module;
  REQUIRE(s.num_relations() == 1);
  CHECK(s.relations()[0].degree == grade{q(1), q(0)});
  CHECK(simplify(p, q(0)).module == p);
  CHECK(translate_image(p, q(0)).module == p);
}

TEST_CASE("simplification is a semigroup") {
  instance_generator gen(47);
  for (int k = 0; k < 10; ++k) {
    auto p = gen.general(2, 4, 6, 6, 2);
    rational a = gen.fraction(0, 2, 4), b = gen.fraction(0, 2, 4);
    auto twice = simplify(simplify(p, a).module, b).module;
    auto once = simplify(p, rational(a + b)).module;
    for (int s = 0; s < 100; ++s) {
      grade x{gen.fraction(-1, 9, 4), gen.fraction(-1, 9, 4)};
      CHECK(hilbert(twice, x) == hilbert(once, x));
    }
  }
}

TEST_CASE("simplification commutes with restriction to slope one lines") {
  instance_generator gen(48);
  for (int k = 0; k < 10; ++k) {
    auto p = gen.general(2, 5, 7, 6, 2);
    rational eps = gen.fraction(0, 2, 4);
    auto s = simplify(p, eps).module;
    for (int i = 0; i < 10; ++i) {
      auto l = line_spec::diagonal_through(grade{gen.fraction(-3, 3, 4), q(0)});
      CHECK(barcode_of(restrict(s, l)) == simplify_barcode(barcode_of(restrict(p, l)), eps));
    }
  }
}

TEST_CASE("merge is idempotent and stays within delta in sampled distance") {
  instance_generator gen(49);
  grid_function grid({{q(1, 4), q(7, 4), q(13, 4), q(19, 4)}, {q(1, 4), q(7, 4), q(13, 4), q(19, 4)}});
  sample_config c;
  c.directions = 8;
  c.adaptive_rounds = 1;
  for (int k = 0; k < 8; ++k) {
    auto p = gen.staircase_sum(2, 3, 6);
    rational delta = q(1, 2);
    auto once = merge_module(p, grid, delta).module;
    auto twice = merge_module(once, grid, delta).module;
    auto b1 = betti_and_grid(once), b2 = betti_and_grid(twice);
    auto sorted = [](std::vector<grade> v) {
      std::sort(v.begin(), v.end(), lex_less);
      return v;
    };
    CHECK(sorted(b1.xi0) == sorted(b2.xi0));
    CHECK(sorted(b1.xi1) == sorted(b2.xi1));
    CHECK(matching_distance(p, once, c).value <= extended(delta));
    CHECK(matching_distance(p, simplify(p, delta).module, c).value <= extended(delta));
  }
}
