#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "multipers/metrics.hpp"
#include "multipers/module.hpp"

namespace multipers {

namespace {

rational mediant(const rational& a, const rational& b) {
  rational m(mpz_class(a.get_num() + b.get_num()), mpz_class(a.get_den() + b.get_den()));
  m.canonicalize();
  return m;
}

line_spec line_with_slope(const rational& slope, const grade& through) {
  grade d{rational(1), slope};
  return line_spec(d, through);
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MULTIPERS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

// Union of both Betti grids, axis by axis.
std::vector<std::vector<rational>> joint_axes(const presentation& p, const presentation& q) {
  auto gp = betti_and_grid(p).grid;
  auto gq = betti_and_grid(q).grid;
  std::vector<std::vector<rational>> axes(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    axes[i] = gp.axis(i);
    axes[i].insert(axes[i].end(), gq.axis(i).begin(), gq.axis(i).end());
    std::sort(axes[i].begin(), axes[i].end());
    axes[i].erase(std::unique(axes[i].begin(), axes[i].end()), axes[i].end());
  }
  return axes;
}

// Axis values with midpoints and one padding value on each side.
std::vector<rational> refined_axis(const std::vector<rational>& axis, const rational& pad) {
  std::vector<rational> out = axis;
  for (std::size_t j = 1; j < axis.size(); ++j) out.push_back((axis[j - 1] + axis[j]) / 2);
  out.push_back(axis.front() - pad);
  out.push_back(axis.back() + pad);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct line_key_less {
  bool operator()(const line_spec& a, const line_spec& b) const {
    if (a.direction() != b.direction()) return lex_less(a.direction(), b.direction());
    return lex_less(a.base(), b.base());
  }
};

class line_collector {
 public:
  void add(const line_spec& line) {
    if (seen_.insert(line).second) lines_.push_back(line);
  }
  bool contains(const line_spec& line) const { return seen_.count(line) > 0; }
  std::vector<line_spec> take() { return std::move(lines_); }

 private:
  std::set<line_spec, line_key_less> seen_;
  std::vector<line_spec> lines_;
};

extended evaluate_line(const presentation& p, const presentation& q, const line_spec& line) {
  extended d = bottleneck(fibered_barcode(p, line), fibered_barcode(q, line));
  return line_weight(line) * d;
}

rational random_fraction(std::mt19937_64& rng, const rational& lo, const rational& hi) {
  constexpr long resolution = 1024;
  long k = static_cast<long>(rng() % (resolution + 1));
  return lo + (hi - lo) * rational(k) / resolution;
}

}  // namespace

std::vector<rational> sample_slopes(std::size_t count) {
  if (count == 0) throw precondition_error("at least one slope is required");
  if (count == 1) return {rational(1)};
  std::vector<rational> slopes;
  for (int e = -4; e <= 4; ++e) slopes.push_back(e < 0 ? rational(rational(1) / (1 << -e)) : rational(1 << e));
  while (slopes.size() < count) {
    std::vector<rational> next;
    for (std::size_t j = 0; j + 1 < slopes.size(); ++j) {
      next.push_back(slopes[j]);
      next.push_back(mediant(slopes[j], slopes[j + 1]));
    }
    next.push_back(slopes.back());
    slopes = std::move(next);
  }
  if (slopes.size() == count) return slopes;
  std::vector<rational> picked;
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t idx = (k * (slopes.size() - 1) + (count - 1) / 2) / (count - 1);
    if (picked.empty() || picked.back() != slopes[idx]) picked.push_back(slopes[idx]);
  }
  return picked;
}

std::vector<line_spec> sample_lines(const presentation& p, const presentation& q, const sample_config& config) {
  if (p.dim() != q.dim()) throw dimension_error("presentations have different dimensions");
  const std::size_t n = p.dim();
  if (n == 0) throw dimension_error("no lines in dimension 0");
  auto axes = joint_axes(p, q);
  line_collector lines;
  bool any = std::all_of(axes.begin(), axes.end(), [](const auto& a) { return !a.empty(); });
  if (!any) {
    lines.add(line_spec::diagonal_through(grade(n)));
    return lines.take();
  }

  // Slope-1 anchors through every Betti grid point.
  for (const auto& pt : grid_function(axes).image_points()) lines.add(line_spec::diagonal_through(pt));

  std::mt19937_64 rng(config.seed);
  rational lo_box = axes[0].front(), hi_box = axes[0].back();
  for (const auto& a : axes) {
    lo_box = std::min(lo_box, a.front());
    hi_box = std::max(hi_box, a.back());
  }
  rational pad = hi_box - lo_box;
  if (pad == 0) pad = 1;

  if (n == 2) {
    auto slopes = sample_slopes(config.directions);
    auto xs = refined_axis(axes[0], pad);
    auto ys = refined_axis(axes[1], pad);
    for (const auto& s : slopes)
      for (const auto& x : xs)
        for (const auto& y : ys) lines.add(line_with_slope(s, grade{x, y}));
    for (std::size_t k = 0; k < config.jitter_lines; ++k) {
      const auto& s = slopes[rng() % slopes.size()];
      grade through{random_fraction(rng, xs.front(), xs.back()), random_fraction(rng, ys.front(), ys.back())};
      lines.add(line_with_slope(s, through));
    }
  } else {
    auto points = grid_function(axes).image_points();
    std::size_t extra = config.directions > 1 ? config.directions - 1 : 0;
    for (std::size_t k = 0; k < extra + config.jitter_lines; ++k) {
      grade d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = rational(static_cast<long>(1 + rng() % 16)) / 16;
      const grade& through = points[rng() % points.size()];
      lines.add(line_spec(d, through));
    }
  }
  return lines.take();
}

distance_report matching_distance_on(const presentation& p, const presentation& q, std::span<const line_spec> lines,
                                     unsigned threads) {
  if (p.dim() != q.dim()) throw dimension_error("presentations have different dimensions");
  std::vector<extended> values(lines.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < lines.size();) values[k] = evaluate_line(p, q, lines[k]);
  };
  unsigned workers = std::max(1u, std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(lines.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  distance_report report{extended(0L), bound_kind::lower_bound, std::nullopt, lines.size()};
  for (std::size_t k = 0; k < lines.size(); ++k)
    if (!report.argmax || report.value < values[k]) {
      report.value = values[k];
      report.argmax = lines[k];
    }
  return report;
}

distance_report matching_distance(const presentation& p, const presentation& q, const sample_config& config) {
  auto lines = sample_lines(p, q, config);
  auto report = matching_distance_on(p, q, lines, config.threads);
  if (p.dim() != 2 || config.adaptive_rounds == 0 || report.value.is_infinite()) return report;

  line_collector seen;
  for (const auto& l : lines) seen.add(l);
  auto slopes = sample_slopes(config.directions);
  rational best_slope = report.argmax->direction()[1] / report.argmax->direction()[0];
  // Neighbouring slopes and the offset spacing bound the refinement window.
  rational slope_lo = best_slope / 2, slope_hi = best_slope * 2;
  for (const auto& s : slopes) {
    if (s < best_slope && s > slope_lo) slope_lo = s;
    if (s > best_slope && s < slope_hi) slope_hi = s;
  }
  auto axes = joint_axes(p, q);
  rational spacing = 1;
  for (const auto& axis : axes)
    for (std::size_t j = 1; j < axis.size(); ++j)
      if (axis[j] - axis[j - 1] < spacing) spacing = axis[j] - axis[j - 1];

  for (std::size_t round = 1; round <= config.adaptive_rounds; ++round) {
    spacing /= 2;
    slope_lo = (slope_lo + best_slope) / 2;
    slope_hi = (slope_hi + best_slope) / 2;
    const grade base = report.argmax->base();
    std::vector<line_spec> fresh;
    for (const auto& s : {slope_lo, best_slope, slope_hi})
      for (const auto& dx : {rational(-spacing), rational(0), spacing}) {
        line_spec l = line_with_slope(s, grade{rational(base[0] + dx), base[1]});
        if (!seen.contains(l)) {
          seen.add(l);
          fresh.push_back(l);
        }
      }
    if (fresh.empty()) break;
    auto local = matching_distance_on(p, q, fresh, config.threads);
    report.lines_evaluated += local.lines_evaluated;
    extended gain_floor = report.value + extended(config.improvement_threshold);
    bool improved = gain_floor < local.value;
    if (report.value < local.value) {
      report.value = local.value;
      report.argmax = local.argmax;
      best_slope = report.argmax->direction()[1] / report.argmax->direction()[0];
    }
    if (!improved) break;
  }
  return report;
}

extended path_length_d0(std::span<const presentation> path, const sample_config& config) {
  extended total(0L);
  for (std::size_t k = 1; k < path.size(); ++k) total = total + matching_distance(path[k - 1], path[k], config).value;
  return total;
}

}  // namespace multipers
