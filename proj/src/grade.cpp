#include "multipers/grade.hpp"

#include <algorithm>

namespace multipers {

namespace {

void require_same_dim(const grade& a, const grade& b) {
  if (a.dim() != b.dim())
    throw dimension_error("grade dimensions differ: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
}

// Index of the largest axis value <= x, or -1.
std::ptrdiff_t floor_index(const std::vector<rational>& axis, const rational& x) {
  auto it = std::upper_bound(axis.begin(), axis.end(), x);
  return (it - axis.begin()) - 1;
}

// Axis value nearest to x with ties going down; requires a nonempty axis.
const rational& nearest(const std::vector<rational>& axis, const rational& x) {
  auto lo = floor_index(axis, x);
  if (lo < 0) return axis.front();
  auto hi = static_cast<std::size_t>(lo) + 1;
  if (hi == axis.size()) return axis[static_cast<std::size_t>(lo)];
  rational dl = x - axis[static_cast<std::size_t>(lo)];
  rational dh = axis[hi] - x;
  return dh < dl ? axis[hi] : axis[static_cast<std::size_t>(lo)];
}

}  // namespace

bool leq(const grade& a, const grade& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool lex_less(const grade& a, const grade& b) {
  require_same_dim(a, b);
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

grade join(const grade& a, const grade& b) {
  require_same_dim(a, b);
  grade c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] < b[i] ? b[i] : a[i];
  return c;
}

grade meet(const grade& a, const grade& b) {
  require_same_dim(a, b);
  grade c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] < b[i] ? a[i] : b[i];
  return c;
}

rational linf_distance(const grade& a, const grade& b) {
  require_same_dim(a, b);
  rational d = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    rational t = abs(rational(a[i] - b[i]));
    if (t > d) d = t;
  }
  return d;
}

grade shifted(const grade& a, const rational& s) {
  grade c = a;
  for (std::size_t i = 0; i < c.dim(); ++i) c[i] += s;
  return c;
}

grade translated(const grade& a, const grade& v) {
  require_same_dim(a, v);
  grade c = a;
  for (std::size_t i = 0; i < c.dim(); ++i) c[i] += v[i];
  return c;
}

std::string to_string(const grade& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) s += ", ";
    s += to_string(a[i]);
  }
  return s + ")";
}

line_spec::line_spec(grade direction, const grade& through) : direction_(std::move(direction)) {
  require_same_dim(direction_, through);
  if (direction_.dim() == 0) throw dimension_error("line in dimension 0");
  rational top = 0;
  for (const auto& d : direction_) {
    if (d <= 0) throw precondition_error("line direction must be strictly positive");
    if (d > top) top = d;
  }
  for (std::size_t i = 0; i < direction_.dim(); ++i) direction_[i] /= top;
  const std::size_t last = direction_.dim() - 1;
  rational t = through[last] / direction_[last];
  base_ = grade(through.dim());
  for (std::size_t i = 0; i < through.dim(); ++i) base_[i] = through[i] - t * direction_[i];
}

line_spec line_spec::diagonal_through(const grade& p) {
  return line_spec(grade(std::vector<rational>(p.dim(), rational(1))), p);
}

grade line_spec::at(const rational& t) const {
  grade p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p[i] = base_[i] + t * direction_[i];
  return p;
}

rational push(const line_spec& line, const grade& p) {
  require_same_dim(line.base(), p);
  rational best = (p[0] - line.base()[0]) / line.direction()[0];
  for (std::size_t i = 1; i < p.dim(); ++i) {
    rational t = (p[i] - line.base()[i]) / line.direction()[i];
    if (t > best) best = t;
  }
  return best;
}

rational line_weight(const line_spec& line) {
  return *std::min_element(line.direction().begin(), line.direction().end());
}

grid_function::grid_function(std::vector<std::vector<rational>> axes) : axes_(std::move(axes)) {
  for (const auto& axis : axes_)
    for (std::size_t j = 1; j < axis.size(); ++j)
      if (!(axis[j - 1] < axis[j])) throw precondition_error("grid axis values must be strictly increasing");
}

bool grid_function::image_empty() const {
  return std::any_of(axes_.begin(), axes_.end(), [](const auto& a) { return a.empty(); });
}

std::size_t grid_function::image_size() const {
  std::size_t count = 1;
  for (const auto& axis : axes_) count *= axis.size();
  return count;
}

bool grid_function::in_image(const grade& p) const {
  if (p.dim() != dim()) throw dimension_error("grade and grid dimensions differ");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!std::binary_search(axes_[i].begin(), axes_[i].end(), p[i])) return false;
  return true;
}

bool grid_function::on_grid(const grade& p) const {
  if (p.dim() != dim()) throw dimension_error("grade and grid dimensions differ");
  for (std::size_t i = 0; i < dim(); ++i)
    if (std::binary_search(axes_[i].begin(), axes_[i].end(), p[i])) return true;
  return false;
}

extended grid_function::axis_gap(std::size_t i) const {
  const auto& axis = axes_.at(i);
  if (axis.size() < 2) return extended::infinity();
  rational gap = axis[1] - axis[0];
  for (std::size_t j = 2; j < axis.size(); ++j)
    if (axis[j] - axis[j - 1] < gap) gap = axis[j] - axis[j - 1];
  return gap;
}

extended grid_function::controlling_constant() const {
  if (image_empty()) return extended::infinity();
  extended c = extended::infinity();
  for (std::size_t i = 0; i < dim(); ++i) c = min(c, axis_gap(i));
  return c;
}

std::vector<grade> grid_function::image_points() const {
  std::vector<grade> points;
  if (image_empty()) return points;
  std::vector<std::size_t> idx(dim(), 0);
  while (true) {
    grade p(dim());
    for (std::size_t i = 0; i < dim(); ++i) p[i] = axes_[i][idx[i]];
    points.push_back(std::move(p));
    std::size_t k = dim();
    while (k > 0) {
      --k;
      if (++idx[k] < axes_[k].size()) break;
      idx[k] = 0;
      if (k == 0) return points;
    }
    if (dim() == 0) return points;
  }
}

grid_function grid_from_grades(std::span<const grade> grades, std::size_t n) {
  std::vector<std::vector<rational>> axes(n);
  for (const auto& g : grades) {
    if (g.dim() != n) throw dimension_error("grade dimension differs from grid dimension");
    for (std::size_t i = 0; i < n; ++i) axes[i].push_back(g[i]);
  }
  for (auto& axis : axes) {
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  return grid_function(std::move(axes));
}

void check_merge_parameter(const grid_function& grid, const rational& delta) {
  if (delta < 0) throw precondition_error("merge parameter must be nonnegative");
  for (std::size_t i = 0; i < grid.dim(); ++i)
    if (!(extended(rational(2 * delta)) < grid.axis_gap(i)))
      throw precondition_error("merge parameter " + to_string(delta) +
                               " is not below half the controlling constant");
}

grade merge_grade(const grid_function& grid, const rational& delta, const grade& p, merge_variant variant) {
  if (p.dim() != grid.dim()) throw dimension_error("grade and grid dimensions differ");
  check_merge_parameter(grid, delta);
  grade out = p;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const auto& axis = grid.axis(i);
    if (axis.empty()) continue;
    const rational& g = nearest(axis, p[i]);
    bool snap = false;
    switch (variant) {
      case merge_variant::two_sided:
        snap = abs(rational(p[i] - g)) <= delta;
        break;
      case merge_variant::plus: {
        auto it = std::lower_bound(axis.begin(), axis.end(), p[i]);
        snap = it != axis.end() && *it - p[i] <= delta;
        if (snap) out[i] = *it;
        continue;
      }
      case merge_variant::minus: {
        auto k = floor_index(axis, p[i]);
        snap = k >= 0 && p[i] - axis[static_cast<std::size_t>(k)] <= delta;
        if (snap) out[i] = axis[static_cast<std::size_t>(k)];
        continue;
      }
    }
    if (snap) out[i] = g;
  }
  return out;
}

grade unmerge(const grid_function& grid, const rational& delta, const grade& p) {
  if (!grid.on_grid(p)) throw precondition_error("unmerge requires a grade on the grid");
  grade out = merge_grade(grid, delta, p);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const auto& axis = grid.axis(i);
    if (axis.empty()) continue;
    if (abs(rational(p[i] - nearest(axis, p[i]))) <= delta) out[i] += delta;
  }
  return out;
}

}  // namespace multipers
