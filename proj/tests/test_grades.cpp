#include <doctest.h>

#include <random>

#include "multipers/grade.hpp"
#include "oracles.hpp"

using namespace multipers;

namespace {

rational q(long n, long d = 1) { return rational(n) / d; }

}  // namespace

TEST_CASE("rational literals round trip in canonical form") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-3")) == "-3/1");
  CHECK(to_string(parse_rational("0/5")) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), precondition_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), precondition_error);
  CHECK_THROWS_AS(parse_rational("x"), precondition_error);
  CHECK(to_decimal(q(1, 3)) == "0.333333");
  CHECK(to_decimal(q(-2, 3)) == "-0.666667");
  CHECK(to_report(q(1, 2)) == "1/2 (0.500000)");
}

TEST_CASE("extended rationals order infinity last") {
  CHECK(extended(q(5)) < extended::infinity());
  CHECK(extended::infinity() == extended::infinity());
  CHECK(max(extended(q(1)), extended::infinity()).is_infinite());
  CHECK((extended(q(1)) + extended(q(1, 2))) == extended(q(3, 2)));
  CHECK(to_string(parse_extended("inf")) == "inf");
}

TEST_CASE("product order, join and distance") {
  grade a{q(1), q(3)}, b{q(2), q(2)};
  CHECK_FALSE(leq(a, b));
  CHECK(leq(a, join(a, b)));
  CHECK(join(a, b) == grade{q(2), q(3)});
  CHECK(meet(a, b) == grade{q(1), q(2)});
  CHECK(linf_distance(a, b) == 1);
  CHECK_THROWS_AS(leq(a, grade{q(1)}), dimension_error);
}

TEST_CASE("push onto lines") {
  line_spec l(grade{q(1, 2), q(1)}, grade{q(0), q(0)});
  CHECK(push(l, grade{q(1), q(1)}) == 2);
  CHECK(l.at(q(2)) == grade{q(1), q(2)});

  auto diag = line_spec::diagonal_through(grade{q(0), q(0)});
  CHECK(push(diag, grade{q(3), q(-1)}) == 3);
  CHECK(line_weight(diag) == 1);

  // Directions are normalized and the base lies on x_n = 0.
  line_spec steep(grade{q(1), q(4)}, grade{q(2), q(8)});
  CHECK(steep.direction() == grade{q(1, 4), q(1)});
  CHECK(steep.base() == grade{q(0), q(0)});
  CHECK(line_weight(steep) == q(1, 4));

  CHECK_THROWS_AS(line_spec(grade{q(0), q(1)}, grade{q(0), q(0)}), precondition_error);
}

TEST_CASE("push agrees with the candidate-scan oracle and is the least admissible parameter") {
  std::mt19937_64 rng(7);
  auto r = [&] { return q(static_cast<long>(rng() % 41) - 20, static_cast<long>(1 + rng() % 8)); };
  for (int k = 0; k < 300; ++k) {
    grade d{q(static_cast<long>(1 + rng() % 9), 3), q(static_cast<long>(1 + rng() % 9), 3)};
    line_spec l(d, grade{r(), r()});
    grade p{r(), r()};
    rational t = push(l, p);
    CHECK(t == oracle::push_oracle(l, p));
    CHECK(leq(p, l.at(t)));
    CHECK_FALSE(leq(p, l.at(t - q(1, 1000000))));
  }
}

TEST_CASE("grid from grades and the controlling constant") {
  std::vector<grade> gs{{q(0), q(0)}, {q(1), q(3)}};
  auto g = grid_from_grades(gs, 2);
  CHECK(g.axis(0) == std::vector<rational>{q(0), q(1)});
  CHECK(g.axis(1) == std::vector<rational>{q(0), q(3)});
  CHECK(g.controlling_constant() == extended(q(1)));

  std::vector<grade> none;
  CHECK(grid_from_grades(none, 2).controlling_constant().is_infinite());
  std::vector<grade> single{{q(2), q(5)}};
  CHECK(grid_from_grades(single, 2).controlling_constant().is_infinite());
}

TEST_CASE("controlling constant matches the all-pairs oracle") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    std::vector<grade> gs;
    auto count = 1 + rng() % 6;
    for (std::size_t i = 0; i < count; ++i)
      gs.push_back(grade{q(static_cast<long>(rng() % 30), 4), q(static_cast<long>(rng() % 30), 4)});
    auto g = grid_from_grades(gs, 2);
    CHECK(g.controlling_constant() == oracle::controlling_oracle(g));
    for (const auto& x : gs) CHECK(g.in_image(x) == true);
  }
}

TEST_CASE("merge variants snap to the axis values") {
  grid_function g({{q(0), q(2)}, {q(0), q(2)}});
  CHECK(merge_grade(g, q(1, 2), grade{q(1, 4), q(17, 10)}) == grade{q(0), q(2)});
  CHECK(merge_grade(g, q(1, 2), grade{q(1), q(1)}) == grade{q(1), q(1)});
  CHECK_THROWS_AS(merge_grade(g, q(1), grade{q(0), q(0)}), precondition_error);
  CHECK_THROWS_AS(merge_grade(g, q(-1, 4), grade{q(0), q(0)}), precondition_error);

  CHECK(merge_grade(g, q(1, 2), grade{q(-1, 4), q(1, 4)}, merge_variant::plus) == grade{q(0), q(1, 4)});
  CHECK(merge_grade(g, q(1, 2), grade{q(-1, 4), q(1, 4)}, merge_variant::minus) == grade{q(-1, 4), q(0)});
}

TEST_CASE("merge invariants on random points") {
  std::mt19937_64 rng(5);
  grid_function g({{q(0), q(3), q(7)}, {q(-2), q(1), q(5)}});
  for (int k = 0; k < 400; ++k) {
    rational delta = q(static_cast<long>(rng() % 6), 4);  // below half the minimal gap 3
    grade p{q(static_cast<long>(rng() % 80) - 20, 8), q(static_cast<long>(rng() % 80) - 30, 8)};
    grade m = merge_grade(g, delta, p);
    CHECK(linf_distance(m, p) <= delta);
    CHECK(merge_grade(g, delta, m) == m);
    // two-sided = minus after plus.
    grade composed = merge_grade(g, delta, merge_grade(g, delta, p, merge_variant::plus), merge_variant::minus);
    CHECK(composed == m);
    // Monotone in the product order.
    grade p2 = join(p, grade{q(static_cast<long>(rng() % 80) - 20, 8), q(static_cast<long>(rng() % 80) - 30, 8)});
    CHECK(leq(m, merge_grade(g, delta, p2)));
  }
}

TEST_CASE("unmerge lands exactly delta from the grid") {
  grid_function g({{q(0), q(4)}, {q(0), q(4)}});
  rational delta = q(1, 2);
  CHECK(unmerge(g, delta, grade{q(0), q(2)}) == grade{q(1, 2), q(2)});
  CHECK(unmerge(g, delta, grade{q(4), q(1, 4)}) == grade{q(9, 2), q(1, 2)});
  CHECK_THROWS_AS(unmerge(g, delta, grade{q(1), q(1)}), precondition_error);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    grade p{q(static_cast<long>(rng() % 2) * 4), q(static_cast<long>(rng() % 60) - 10, 8)};
    if (rng() % 2) std::swap(p[0], p[1]);
    grade u = unmerge(g, delta, p);
    // Distance to the grid hyperplanes is exactly delta.
    rational best = -1;
    for (std::size_t i = 0; i < 2; ++i)
      for (const auto& v : g.axis(i)) {
        rational d = abs(rational(u[i] - v));
        if (best < 0 || d < best) best = d;
      }
    CHECK(best == delta);
  }
}
