#pragma once

#include <vector>

#include "multipers/presentation.hpp"

namespace multipers {

/// Half-open interval [birth, death); death may be infinite.
struct bar {
  rational birth;
  extended death;

  friend bool operator==(const bar&, const bar&) = default;
};

bool bar_less(const bar& a, const bar& b);

/// Multiset of nonempty bars kept in sorted order.
class barcode {
 public:
  barcode() = default;
  /// Drops empty bars and sorts.
  explicit barcode(std::vector<bar> bars);

  const std::vector<bar>& bars() const { return bars_; }
  std::size_t size() const { return bars_.size(); }
  bool empty() const { return bars_.empty(); }

  friend bool operator==(const barcode&, const barcode&) = default;

 private:
  std::vector<bar> bars_;
};

/// One-parameter presentation obtained by pushing every grade onto the line.
presentation restrict(const presentation& p, const line_spec& line);

/// Barcode of a one-parameter presentation by column reduction.
barcode barcode_of(const presentation& one_parameter);

/// Barcode of the restriction to a line.
barcode fibered_barcode(const presentation& p, const line_spec& line);

/// [b, d) -> [b, d - eps) when d - b > eps; infinite bars stay; others vanish.
barcode simplify_barcode(const barcode& b, const rational& epsilon);

}  // namespace multipers
