#include "multipers/random.hpp"

#include <algorithm>
#include <set>

namespace multipers {

long instance_generator::integer(long lo, long hi) {
  if (hi < lo) throw precondition_error("empty integer range");
  auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % width);
}

rational instance_generator::fraction(long lo, long hi, long den) {
  return rational(integer(lo * den, hi * den)) / den;
}

presentation instance_generator::staircase(std::size_t max_steps, long span, prime_field field) {
  auto steps = static_cast<std::size_t>(integer(1, static_cast<long>(max_steps)));
  // Distinct x values paired with decreasing y values give an antichain.
  std::set<long> xs, ys;
  while (xs.size() < steps) xs.insert(integer(0, span - 1));
  while (ys.size() < steps) ys.insert(integer(0, span - 1));
  std::vector<long> xv(xs.begin(), xs.end()), yv(ys.rbegin(), ys.rend());
  std::vector<grade> births;
  for (std::size_t i = 0; i < steps; ++i) births.push_back(grade{rational(xv[i]), rational(yv[i])});
  std::vector<grade> deaths;
  auto count = integer(0, 2);
  long top_x = xv.back(), top_y = yv.front();
  for (long k = 0; k < count; ++k)
    deaths.push_back(grade{rational(integer(top_x + 1, top_x + span)), rational(integer(0, top_y + span))});
  if (count > 0) {
    // Keep the death set an antichain.
    std::vector<grade> anti;
    for (const auto& d : deaths) {
      bool dominated = false;
      for (const auto& e : deaths)
        if (!(e == d) && leq(e, d)) dominated = true;
      if (!dominated && std::find(anti.begin(), anti.end(), d) == anti.end()) anti.push_back(d);
    }
    deaths = std::move(anti);
  }
  return staircase_interval(std::move(births), std::move(deaths), field);
}

presentation instance_generator::staircase_sum(std::size_t summands, std::size_t max_steps, long span,
                                               prime_field field) {
  presentation p(2, field);
  for (std::size_t k = 0; k < summands; ++k) p = direct_sum(p, staircase(max_steps, span, field));
  return p;
}

presentation instance_generator::general(std::size_t n, std::size_t generators, std::size_t relations, long span,
                                         long den, prime_field field) {
  presentation p(n, field);
  for (std::size_t i = 0; i < generators; ++i) {
    grade g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = fraction(0, span, den);
    p.add_generator(std::move(g));
  }
  if (generators == 0) return p;
  for (std::size_t r = 0; r < relations; ++r) {
    // Start above a random generator and add a few more generators below the grade.
    grade d = p.generators()[static_cast<std::size_t>(integer(0, static_cast<long>(generators) - 1))].degree;
    for (std::size_t j = 0; j < n; ++j) d[j] += fraction(0, span / 2 + 1, den);
    std::vector<entry> entries;
    for (std::size_t i = 0; i < generators; ++i)
      if (leq(p.generators()[i].degree, d) && integer(0, 2) == 0)
        entries.push_back({i, static_cast<coeff>(integer(1, static_cast<long>(field.characteristic()) - 1))});
    if (entries.empty())
      for (std::size_t i = 0; i < generators; ++i)
        if (leq(p.generators()[i].degree, d)) {
          entries.push_back({i, 1});
          break;
        }
    p.add_relation(std::move(d), normalized(field, std::move(entries)));
  }
  return p;
}

presentation instance_generator::one_parameter(std::size_t max_generators, long span, long den, prime_field field) {
  auto k = static_cast<std::size_t>(integer(1, static_cast<long>(max_generators)));
  auto m = static_cast<std::size_t>(integer(0, static_cast<long>(k + k / 2)));
  return general(1, k, m, span, den, field);
}

barcode instance_generator::bars(std::size_t max_bars, long span, long den) {
  auto k = static_cast<std::size_t>(integer(0, static_cast<long>(max_bars)));
  std::vector<bar> out;
  for (std::size_t i = 0; i < k; ++i) {
    rational b = fraction(0, span, den);
    if (integer(0, 4) == 0) {
      out.push_back({b, extended::infinity()});
    } else {
      rational len = fraction(0, span, den);
      if (len == 0) len = rational(1) / den;
      out.push_back({b, extended(rational(b + len))});
    }
  }
  return barcode(std::move(out));
}

block instance_generator::random_block(block_kind kind, long span, long den) {
  while (true) {
    block blk{kind, fraction(-span, span, den), extended(fraction(-span, span, den))};
    try {
      validate(blk);
      return blk;
    } catch (const precondition_error&) {
    }
  }
}

}  // namespace multipers
