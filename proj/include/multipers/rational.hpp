#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "multipers/errors.hpp"

namespace multipers {

using rational = mpq_class;

/// Parses "num/den" or a bare integer; the result is canonicalized.
rational parse_rational(std::string_view text);

/// Canonical "num/den" form with den > 0 and gcd 1.
std::string to_string(const rational& q);

/// Decimal rendering rounded half away from zero.
std::string to_decimal(const rational& q, int places = 6);

/// "exact (decimal)" as used in human-readable reports.
std::string to_report(const rational& q);

double to_double(const rational& q);

rational abs(const rational& q);

/// A rational or +infinity.
class extended {
 public:
  extended() = default;
  extended(rational value) : value_(std::move(value)) {}  // NOLINT(implicit)
  extended(long value) : value_(value) {}                 // NOLINT(implicit)

  static extended infinity() {
    extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Throws on infinity.
  const rational& value() const;

  friend bool operator==(const extended& a, const extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const extended& a, const extended& b) {
    if (a.infinite_ || b.infinite_) return int(a.infinite_) <=> int(b.infinite_);
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend extended operator+(const extended& a, const extended& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return extended(rational(a.value_ + b.value_));
  }
  friend extended operator*(const rational& s, const extended& a);

 private:
  rational value_{0};
  bool infinite_ = false;
};

/// "inf" or the canonical rational.
std::string to_string(const extended& e);
std::string to_report(const extended& e);

/// Accepts "inf" in addition to rational literals.
extended parse_extended(std::string_view text);

inline extended max(const extended& a, const extended& b) { return a < b ? b : a; }
inline extended min(const extended& a, const extended& b) { return a < b ? a : b; }

}  // namespace multipers
