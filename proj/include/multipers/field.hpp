#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace multipers {

using coeff = std::uint32_t;

/// Arithmetic in F_p.
class prime_field {
 public:
  explicit prime_field(coeff p = 2);

  coeff characteristic() const { return p_; }
  coeff add(coeff a, coeff b) const { return static_cast<coeff>((std::uint64_t(a) + b) % p_); }
  coeff sub(coeff a, coeff b) const { return static_cast<coeff>((std::uint64_t(a) + p_ - b) % p_); }
  coeff mul(coeff a, coeff b) const { return static_cast<coeff>((std::uint64_t(a) * b) % p_); }
  coeff neg(coeff a) const { return a == 0 ? 0 : p_ - a; }
  coeff inv(coeff a) const;
  coeff div(coeff a, coeff b) const { return mul(a, inv(b)); }
  /// Reduces an arbitrary integer into [0, p).
  coeff reduce(std::int64_t a) const;

  friend bool operator==(const prime_field& a, const prime_field& b) { return a.p_ == b.p_; }

 private:
  coeff p_;
};

struct entry {
  std::size_t index;
  coeff value;
  friend bool operator==(const entry&, const entry&) = default;
};

/// Sorted by index, no zero values.
using sparse_column = std::vector<entry>;

sparse_column unit_column(std::size_t index);

/// a + s * b.
sparse_column axpy(const prime_field& f, const sparse_column& a, coeff s, const sparse_column& b);

sparse_column scaled(const prime_field& f, const sparse_column& a, coeff s);

/// Coefficient at index, 0 when absent.
coeff coefficient(const sparse_column& c, std::size_t index);

/// Sorts, merges duplicates and drops zeros.
sparse_column normalized(const prime_field& f, std::vector<entry> entries);

/// Incremental echelon basis keyed by the largest index of each column.
class column_basis {
 public:
  explicit column_basis(prime_field f) : field_(f) {}

  sparse_column reduce(sparse_column v) const;
  /// Returns false when v already lies in the span.
  bool insert(sparse_column v);
  bool contains(const sparse_column& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return columns_.size(); }
  const std::vector<sparse_column>& columns() const { return columns_; }

 private:
  prime_field field_;
  std::vector<sparse_column> columns_;
  std::unordered_map<std::size_t, std::size_t> pivot_of_;
};

/// Rank of a list of columns.
std::size_t rank_of(const prime_field& f, const std::vector<sparse_column>& columns);

/// Expresses v in terms of the given columns when possible. Returns the
/// coefficient vector (indexed by column position) or false.
bool solve_in_span(const prime_field& f, const std::vector<sparse_column>& columns, const sparse_column& v,
                   sparse_column& coefficients);

}  // namespace multipers
