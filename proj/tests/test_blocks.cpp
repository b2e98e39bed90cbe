#include <doctest.h>

#include "multipers/blocks.hpp"
#include "multipers/experiments.hpp"
#include "multipers/metrics.hpp"
#include "multipers/module.hpp"
#include "multipers/random.hpp"
#include "oracles.hpp"

using namespace multipers;

namespace {

rational q(long n, long d = 1) { return rational(n) / d; }

block blk(block_kind k, long a, long b) { return {k, q(a), extended(q(b))}; }

const extended inf = extended::infinity();

}  // namespace

TEST_CASE("extension table") {
  CHECK(extend_block(blk(block_kind::oo, 1, 3)) == rectangle{grade{q(-3), q(1)}, {extended(q(-1)), extended(q(3))}});
  CHECK(extend_block(blk(block_kind::cc, 0, 0)) == rectangle{grade{q(0), q(0)}, {inf, inf}});
  CHECK(extend_block(blk(block_kind::co, 2, 5)) == rectangle{grade{q(-5), q(2)}, {inf, extended(q(5))}});
  CHECK(extend_block(blk(block_kind::oc, 1, 2)) == rectangle{grade{q(-2), q(1)}, {extended(q(1)), inf}});
}

TEST_CASE("degenerate blocks are rejected") {
  CHECK_THROWS_AS(extend_block(blk(block_kind::oo, 2, 2)), precondition_error);
  CHECK_THROWS_AS(extend_block(blk(block_kind::oc, -3, 2)), precondition_error);
  CHECK_THROWS_AS(extend_block(block{block_kind::cc, q(0), inf}), precondition_error);
  CHECK_THROWS_AS(parse_block_kind("ob"), precondition_error);
  CHECK_NOTHROW(extend_block(blk(block_kind::cc, 1, 1)));
}

TEST_CASE("block presentations") {
  std::vector<block> one{blk(block_kind::oo, 1, 3)};
  auto p = block_presentation(one);
  REQUIRE(p.num_generators() == 1);
  CHECK(p.generators()[0].degree == grade{q(-3), q(1)});
  REQUIRE(p.num_relations() == 2);
  CHECK(p.relations()[0].degree == grade{q(-1), q(1)});
  CHECK(p.relations()[1].degree == grade{q(-3), q(3)});
  for (long x = -4; x <= 0; ++x)
    for (long y = 0; y <= 4; ++y) {
      std::size_t inside = (-3 <= x && x < -1 && 1 <= y && y < 3) ? 1 : 0;
      CHECK(hilbert(p, grade{q(x), q(y)}) == inside);
    }

  std::vector<block> two{blk(block_kind::oo, 1, 3), blk(block_kind::co, 2, 5)};
  auto s = block_presentation(two);
  CHECK(s.num_generators() == 2);
  CHECK(s.num_relations() == 3);
  auto t = block_presentation(std::span<const block>(two).subspan(1));
  for (long x = -6; x <= 1; ++x)
    for (long y = -1; y <= 6; ++y) {
      grade a{q(x), q(y)};
      CHECK(hilbert(s, a) == hilbert(p, a) + hilbert(t, a));
    }

  CHECK(block_presentation({}).num_generators() == 0);
  std::vector<block> free{blk(block_kind::cc, 0, 0)};
  CHECK(block_presentation(free) == free_module(std::vector<grade>{grade{q(0), q(0)}}));
}

TEST_CASE("extension keeps the number of summands") {
  instance_generator gen(5);
  const block_kind kinds[] = {block_kind::oo, block_kind::co, block_kind::oc, block_kind::cc};
  for (int k = 0; k < 20; ++k) {
    std::vector<block> bs;
    for (int i = 0; i < 1 + k % 4; ++i) bs.push_back(gen.random_block(kinds[gen.integer(0, 3)], 6, 2));
    CHECK(betti_and_grid(block_presentation(bs)).xi0.size() == bs.size());
  }
}

TEST_CASE("block matching distance examples") {
  std::vector<block> a{blk(block_kind::oo, 1, 3), blk(block_kind::co, 2, 5)};
  CHECK(block_matching_distance(a, a) == extended(q(0)));
  std::vector<block> bar{blk(block_kind::oo, 0, 2)};
  CHECK(block_matching_distance(bar, {}) == extended(q(1)));
  std::vector<block> c0{blk(block_kind::cc, 0, 0)}, c1{blk(block_kind::cc, 1, 1)};
  CHECK(block_matching_distance(c0, c1) == extended(q(1)));
  // Different kinds never match; a cc block cannot be deleted.
  std::vector<block> o{blk(block_kind::oc, 0, 1)};
  CHECK(block_matching_distance(c0, o).is_infinite());
}

TEST_CASE("block matching distance is certified on both sides") {
  instance_generator gen(23);
  const block_kind kinds[] = {block_kind::oo, block_kind::co, block_kind::oc};
  for (int k = 0; k < 40; ++k) {
    std::vector<block> a, b;
    for (long i = 0, n = gen.integer(0, 3); i < n; ++i) a.push_back(gen.random_block(kinds[gen.integer(0, 2)], 5, 2));
    for (long i = 0, n = gen.integer(0, 3); i < n; ++i) b.push_back(gen.random_block(kinds[gen.integer(0, 2)], 5, 2));
    auto m = block_matching_witness(a, b);
    REQUIRE(m.witness.has_value());
    auto pa = block_presentation(a), pb = block_presentation(b);
    CHECK(verify_interleaving(pa, pb, *m.witness).accepted);
    CHECK(rank_lower_bound(pa, pb).value <= m.value);
  }
}

TEST_CASE("restricted block distances agree with the sampled interleaving oracle") {
  instance_generator gen(9);
  const rational step = q(1, 16), eta = q(1, 16);
  auto pts = oracle::sample_u(q(4), step);
  const block_kind kinds[] = {block_kind::oo, block_kind::co, block_kind::oc};
  for (int k = 0; k < 24; ++k) {
    block_kind kind = kinds[k % 3];
    block x = gen.random_block(kind, 3, 2), y = gen.random_block(kind, 3, 2);
    auto d = unextended_block_distance(x, y);
    REQUIRE(d.is_finite());
    CHECK(oracle::sampled_interleaved(x, y, d.value(), pts, step));
    if (d.value() > 0) CHECK_FALSE(oracle::sampled_interleaved(x, y, rational(d.value() - eta), pts, step));
  }
}

TEST_CASE("extended distance is between the restricted distance and twice it") {
  for (const auto& row : run_block_sandwich(60, 3)) {
    CHECK(row.within);
    CHECK(row.a.kind == row.b.kind);
  }
}
