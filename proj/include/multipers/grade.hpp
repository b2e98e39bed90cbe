#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "multipers/rational.hpp"

namespace multipers {

/// A point of Q^n.
class grade {
 public:
  grade() = default;
  explicit grade(std::size_t n) : coords_(n, rational(0)) {}
  explicit grade(std::vector<rational> coords) : coords_(std::move(coords)) {}
  grade(std::initializer_list<rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const rational& operator[](std::size_t i) const { return coords_[i]; }
  rational& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<rational>& coords() const { return coords_; }

  friend bool operator==(const grade& a, const grade& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<rational> coords_;
};

/// Product order a <= b.
bool leq(const grade& a, const grade& b);
/// Lexicographic strict order; a total order used for canonical sorting.
bool lex_less(const grade& a, const grade& b);

grade join(const grade& a, const grade& b);
grade meet(const grade& a, const grade& b);
rational linf_distance(const grade& a, const grade& b);

/// a + s(1,...,1).
grade shifted(const grade& a, const rational& s);
/// a + v.
grade translated(const grade& a, const grade& v);

std::string to_string(const grade& a);

/// An affine line with positive direction; direction is normalized to max 1 and
/// the base point is the intersection with the hyperplane x_n = 0.
class line_spec {
 public:
  line_spec(grade direction, const grade& through);
  /// Direction (1,...,1) through p.
  static line_spec diagonal_through(const grade& p);

  std::size_t dim() const { return direction_.dim(); }
  const grade& direction() const { return direction_; }
  const grade& base() const { return base_; }

  /// base + t * direction.
  grade at(const rational& t) const;

  friend bool operator==(const line_spec& a, const line_spec& b) {
    return a.direction_ == b.direction_ && a.base_ == b.base_;
  }

 private:
  grade direction_;
  grade base_;
};

/// Smallest t with p <= L(t).
rational push(const line_spec& line, const grade& p);

/// min_i d_i for the normalized direction.
rational line_weight(const line_spec& line);

/// Strictly increasing finite axis sets; Im G is their product.
class grid_function {
 public:
  grid_function() = default;
  explicit grid_function(std::vector<std::vector<rational>> axes);

  std::size_t dim() const { return axes_.size(); }
  const std::vector<rational>& axis(std::size_t i) const { return axes_[i]; }
  const std::vector<std::vector<rational>>& axes() const { return axes_; }

  bool image_empty() const;
  /// Number of points in Im G.
  std::size_t image_size() const;
  /// p in Im G.
  bool in_image(const grade& p) const;
  /// p lies on some hyperplane x_i = g with g an axis value.
  bool on_grid(const grade& p) const;

  /// Minimum gap between consecutive values of one axis; infinity if the axis has fewer than two values.
  extended axis_gap(std::size_t i) const;
  /// Minimum over axes of the axis gap; infinity when Im G is empty or a single point.
  extended controlling_constant() const;

  /// All points of Im G in lexicographic order.
  std::vector<grade> image_points() const;

  friend bool operator==(const grid_function&, const grid_function&) = default;

 private:
  std::vector<std::vector<rational>> axes_;
};

/// Sorted distinct coordinates of the given grades on each axis.
grid_function grid_from_grades(std::span<const grade> grades, std::size_t n);

enum class merge_variant { two_sided, plus, minus };

/// Coordinatewise snap onto axis values: two-sided within delta, plus from
/// [g - delta, g], minus from [g, g + delta]. Requires delta below half of every axis gap.
grade merge_grade(const grid_function& grid, const rational& delta, const grade& p,
                  merge_variant variant = merge_variant::two_sided);

/// merge(p) + delta * sum of e_i over coordinates within delta of an axis value.
/// Requires p on the grid.
grade unmerge(const grid_function& grid, const rational& delta, const grade& p);

/// Throws unless 0 <= delta and 2 delta is below every axis gap.
void check_merge_parameter(const grid_function& grid, const rational& delta);

}  // namespace multipers
