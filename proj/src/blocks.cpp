#include "multipers/blocks.hpp"

#include "multipers/matching.hpp"

namespace multipers {

std::string to_string(block_kind k) {
  switch (k) {
    case block_kind::oo:
      return "oo";
    case block_kind::co:
      return "co";
    case block_kind::oc:
      return "oc";
    case block_kind::cc:
      return "cc";
  }
  return "?";
}

block_kind parse_block_kind(const std::string& s) {
  if (s == "oo") return block_kind::oo;
  if (s == "co") return block_kind::co;
  if (s == "oc") return block_kind::oc;
  if (s == "cc") return block_kind::cc;
  throw precondition_error("unknown block kind '" + s + "'");
}

void validate(const block& blk) {
  if (blk.b.is_infinite()) throw precondition_error("block with infinite b is not supported");
  const rational& b = blk.b.value();
  bool nonempty = false;
  switch (blk.kind) {
    case block_kind::oo:
    case block_kind::co:
      nonempty = blk.a < b;
      break;
    case block_kind::oc:
      nonempty = blk.a + b > 0;
      break;
    case block_kind::cc:
      nonempty = blk.a <= b;
      break;
  }
  if (!nonempty)
    throw precondition_error(to_string(blk.kind) + " block (" + to_string(blk.a) + ", " + to_string(b) +
                             ") has an empty extension");
}

rectangle extend_block(const block& blk) {
  validate(blk);
  const rational& a = blk.a;
  const rational& b = blk.b.value();
  rectangle r{grade{rational(-b), a}, {extended::infinity(), extended::infinity()}};
  switch (blk.kind) {
    case block_kind::oo:
      r.upper = {extended(rational(-a)), extended(b)};
      break;
    case block_kind::co:
      r.upper = {extended::infinity(), extended(b)};
      break;
    case block_kind::oc:
      r.upper = {extended(a), extended::infinity()};
      break;
    case block_kind::cc:
      break;
  }
  return r;
}

extended rectangle_radius(const rectangle& r) {
  extended rad = extended::infinity();
  for (std::size_t i = 0; i < 2; ++i)
    if (r.upper[i].is_finite()) rad = min(rad, extended(rational((r.upper[i].value() - r.lower[i]) / 2)));
  return rad;
}

extended rectangle_distance(const rectangle& r, const rectangle& s) {
  rational corners = linf_distance(r.lower, s.lower);
  for (std::size_t i = 0; i < 2; ++i) {
    if (r.upper[i].is_infinite() != s.upper[i].is_infinite())
      return max(rectangle_radius(r), rectangle_radius(s));
    if (r.upper[i].is_finite()) {
      rational d = abs(rational(r.upper[i].value() - s.upper[i].value()));
      if (d > corners) corners = d;
    }
  }
  return min(extended(corners), max(rectangle_radius(r), rectangle_radius(s)));
}

presentation block_presentation(std::span<const block> blocks, prime_field field) {
  presentation p(2, field);
  for (const auto& blk : blocks) {
    auto r = extend_block(blk);
    p = direct_sum(p, box_module(r.lower, {r.upper[0], r.upper[1]}, field));
  }
  return p;
}

namespace {

assignment match_blocks(std::span<const block> a, std::span<const block> b,
                        const std::function<extended(const block&, const block&)>& cost,
                        const std::function<extended(const block&)>& radius) {
  std::vector<extended> del_a, del_b;
  for (const auto& x : a) del_a.push_back(radius(x));
  for (const auto& y : b) del_b.push_back(radius(y));
  return bottleneck_assignment(
      a.size(), b.size(),
      [&](std::size_t i, std::size_t j) {
        return a[i].kind == b[j].kind ? cost(a[i], b[j]) : extended::infinity();
      },
      del_a, del_b);
}

extended extended_cost(const block& x, const block& y) {
  return rectangle_distance(extend_block(x), extend_block(y));
}

extended extended_radius(const block& x) { return rectangle_radius(extend_block(x)); }

}  // namespace

extended block_matching_distance(std::span<const block> a, std::span<const block> b) {
  return match_blocks(a, b, extended_cost, extended_radius).value;
}

block_matching_result block_matching_witness(std::span<const block> a, std::span<const block> b) {
  auto m = match_blocks(a, b, extended_cost, extended_radius);
  block_matching_result out{m.value, std::nullopt};
  if (m.value.is_infinite()) return out;
  interleaving_witness w{m.value.value(), std::vector<sparse_column>(a.size()), std::vector<sparse_column>(b.size())};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!m.partner[i]) continue;
    std::size_t j = *m.partner[i];
    auto r = extend_block(a[i]), s = extend_block(b[j]);
    rational corners = linf_distance(r.lower, s.lower);
    for (std::size_t k = 0; k < 2; ++k)
      if (r.upper[k].is_finite()) corners = std::max(corners, abs(rational(r.upper[k].value() - s.upper[k].value())));
    if (extended(corners) <= m.value) {
      w.f[i] = unit_column(j);
      w.g[j] = unit_column(i);
    }
  }
  out.witness = std::move(w);
  return out;
}

extended unextended_block_radius(const block& x) {
  validate(x);
  const rational& a = x.a;
  const rational& b = x.b.value();
  switch (x.kind) {
    case block_kind::oo:
      return rational((b - a) / 4);
    case block_kind::co:
      return rational((b - a) / 2);
    case block_kind::oc:
      return rational((a + b) / 2);
    case block_kind::cc:
      return extended::infinity();
  }
  return extended::infinity();
}

extended unextended_block_distance(const block& x, const block& y) {
  if (x.kind != y.kind) throw precondition_error("restricted block distance needs blocks of the same kind");
  validate(x);
  validate(y);
  rational da = abs(rational(x.a - y.a));
  rational db = abs(rational(x.b.value() - y.b.value()));
  extended d = da < db ? db : da;
  return min(d, max(unextended_block_radius(x), unextended_block_radius(y)));
}

extended unextended_matching_distance(std::span<const block> a, std::span<const block> b) {
  return match_blocks(a, b, unextended_block_distance, unextended_block_radius).value;
}

}  // namespace multipers
