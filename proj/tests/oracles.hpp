#pragma once

// Independent reference implementations used only by the tests. They favour
// brute force and dense linear algebra over the library's sparse routines.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "multipers/blocks.hpp"
#include "multipers/fibered.hpp"
#include "multipers/presentation.hpp"

namespace oracle {

using namespace multipers;

using dense_matrix = std::vector<std::vector<std::int64_t>>;  // rows

/// Rank by dense Gaussian elimination mod p.
inline std::size_t dense_rank(dense_matrix m, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] % p == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    std::int64_t s = inv(m[rank][c]);
    for (auto& x : m[rank]) x = x * s % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      std::int64_t f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Columns as dense rows (so rank of the row list equals column rank).
inline dense_matrix as_rows(const std::vector<sparse_column>& cols, std::size_t size) {
  dense_matrix m;
  for (const auto& c : cols) {
    std::vector<std::int64_t> row(size, 0);
    for (const auto& e : c) row[e.index] = e.value;
    m.push_back(std::move(row));
  }
  return m;
}

/// rank(M_s -> M_t) by dense elimination.
inline std::size_t rank_oracle(const presentation& p, const grade& s, const grade& t) {
  const std::size_t k = p.num_generators();
  const std::int64_t f = p.field().characteristic();
  std::vector<sparse_column> rels, both;
  for (const auto& r : p.relations())
    if (leq(r.degree, t)) rels.push_back(r.column);
  both = rels;
  for (std::size_t i = 0; i < k; ++i)
    if (leq(p.generators()[i].degree, s)) both.push_back(unit_column(i));
  return dense_rank(as_rows(both, k), f) - dense_rank(as_rows(rels, k), f);
}

inline std::size_t dim_oracle(const presentation& p, const grade& a) { return rank_oracle(p, a, a); }

/// Smallest t with p <= L(t), taken over the per-coordinate candidates.
inline rational push_oracle(const line_spec& l, const grade& p) {
  std::vector<rational> candidates;
  for (std::size_t i = 0; i < p.dim(); ++i) candidates.push_back((p[i] - l.base()[i]) / l.direction()[i]);
  std::sort(candidates.begin(), candidates.end());
  for (const auto& t : candidates)
    if (leq(p, l.at(t))) return t;
  throw std::logic_error("no candidate works");
}

/// Minimum distance over all pairs of distinct values on each axis.
inline extended controlling_oracle(const grid_function& g) {
  if (g.image_empty()) return extended::infinity();
  extended best = extended::infinity();
  for (const auto& axis : g.axes())
    for (std::size_t i = 0; i < axis.size(); ++i)
      for (std::size_t j = 0; j < axis.size(); ++j)
        if (i != j) best = min(best, extended(abs(rational(axis[i] - axis[j]))));
  return best;
}

/// Barcode of a one-parameter presentation from its rank function by inclusion-exclusion.
inline barcode barcode_oracle(const presentation& p) {
  std::vector<rational> v;
  for (const auto& g : all_grades(p)) v.push_back(g[0]);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  const long K = static_cast<long>(v.size()) - 1;
  auto R = [&](long i, long j) -> long {
    if (i < 0) return 0;
    return static_cast<long>(rank_oracle(p, grade{v[i]}, grade{v[j]}));
  };
  std::vector<bar> bars;
  for (long i = 0; i <= K; ++i) {
    for (long j = i + 1; j <= K; ++j) {
      long mult = R(i, j - 1) - R(i - 1, j - 1) - R(i, j) + R(i - 1, j);
      for (long c = 0; c < mult; ++c) bars.push_back({v[i], extended(v[j])});
    }
    long mult = R(i, K) - R(i - 1, K);
    for (long c = 0; c < mult; ++c) bars.push_back({v[i], extended::infinity()});
  }
  return barcode(std::move(bars));
}

/// Bottleneck distance by enumerating every partial matching.
inline extended bottleneck_oracle(const barcode& a, const barcode& b) {
  const auto& x = a.bars();
  const auto& y = b.bars();
  auto half = [](const bar& z) {
    return z.death.is_infinite() ? extended::infinity() : extended(rational((z.death.value() - z.birth) / 2));
  };
  auto cost = [](const bar& s, const bar& t) -> extended {
    if (s.death.is_infinite() != t.death.is_infinite()) return extended::infinity();
    rational d = abs(rational(s.birth - t.birth));
    if (s.death.is_finite()) d = std::max(d, abs(rational(s.death.value() - t.death.value())));
    return d;
  };
  extended best = extended::infinity();
  std::vector<bool> used(y.size(), false);
  std::function<void(std::size_t, extended)> go = [&](std::size_t i, extended worst) {
    if (!(worst < best)) return;
    if (i == x.size()) {
      for (std::size_t j = 0; j < y.size(); ++j)
        if (!used[j]) worst = max(worst, half(y[j]));
      best = min(best, worst);
      return;
    }
    go(i + 1, max(worst, half(x[i])));
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      go(i + 1, max(worst, cost(x[i], y[j])));
      used[j] = false;
    }
  };
  go(0, extended(0L));
  return best;
}

/// Membership in the block restricted to y >= -x.
inline bool in_restricted_block(const block& blk, const rational& x, const rational& y) {
  if (y < -x) return false;
  const rational& a = blk.a;
  const rational& b = blk.b.value();
  switch (blk.kind) {
    case block_kind::oo:
      return -b < x && x < -a && a < y && y < b;
    case block_kind::co:
      return a <= y && y < b;
    case block_kind::oc:
      return -b <= x && x < a;
    case block_kind::cc:
      return x >= -b && y >= a;
  }
  return false;
}

/// Sample points of U on multiples of `step` within [-bound, bound]^2.
inline std::vector<std::pair<rational, rational>> sample_u(const rational& bound, const rational& step) {
  std::vector<std::pair<rational, rational>> pts;
  for (rational x = -bound; x <= bound; x += step)
    for (rational y = -bound; y <= bound; y += step)
      if (y >= -x) pts.emplace_back(x, y);
  return pts;
}

/// Whether two restricted blocks look eps-interleaved on the sampled points:
/// either both are 2eps-trivial, or the indicator maps are natural and coherent.
/// Naturality is checked on the covering steps of the sample grid, which generate the order.
inline bool sampled_interleaved(const block& s, const block& t, const rational& eps,
                                const std::vector<std::pair<rational, rational>>& pts, const rational& step) {
  using membership = std::function<bool(const rational&, const rational&)>;
  membership in_s = [&](const rational& x, const rational& y) { return in_restricted_block(s, x, y); };
  membership in_t = [&](const rational& x, const rational& y) { return in_restricted_block(t, x, y); };
  auto trivial = [&](const membership& in) {
    for (const auto& [x, y] : pts)
      if (in(x, y) && in(x + 2 * eps, y + 2 * eps)) return false;
    return true;
  };
  if (trivial(in_s) && trivial(in_t)) return true;
  // Indicator f: A -> B(eps), nonzero at p iff p in A and p + eps in B.
  auto natural = [&](const membership& in_a, const membership& in_b) {
    for (const auto& [px, py] : pts)
      for (const auto& [qx, qy] : {std::pair<rational, rational>(px + step, py), std::pair<rational, rational>(px, py + step)}) {
        if (!in_a(px, py) || !in_b(qx + eps, qy + eps)) continue;
        bool via_q = in_a(qx, qy) && in_b(qx + eps, qy + eps);
        bool via_p = in_b(px + eps, py + eps);
        if (via_q != via_p) return false;
      }
    return true;
  };
  // g(f) equals the 2eps structure map.
  auto coherent = [&](const membership& in_a, const membership& in_b) {
    for (const auto& [x, y] : pts) {
      bool shift = in_a(x, y) && in_a(x + 2 * eps, y + 2 * eps);
      bool composite = in_a(x, y) && in_b(x + eps, y + eps) && in_a(x + 2 * eps, y + 2 * eps);
      if (shift != composite) return false;
    }
    return true;
  };
  return natural(in_s, in_t) && natural(in_t, in_s) && coherent(in_s, in_t) && coherent(in_t, in_s);
}

}  // namespace oracle
