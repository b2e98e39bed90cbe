#include "multipers/field.hpp"

#include <algorithm>
#include <string>

#include "multipers/errors.hpp"

namespace multipers {

namespace {

bool is_prime(coeff p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

prime_field::prime_field(coeff p) : p_(p) {
  if (!is_prime(p)) throw precondition_error("field characteristic " + std::to_string(p) + " is not prime");
}

coeff prime_field::inv(coeff a) const {
  if (a % p_ == 0) throw precondition_error("division by zero in F_p");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return reduce(t);
}

coeff prime_field::reduce(std::int64_t a) const {
  std::int64_t m = a % static_cast<std::int64_t>(p_);
  return static_cast<coeff>(m < 0 ? m + p_ : m);
}

sparse_column unit_column(std::size_t index) { return {entry{index, 1}}; }

sparse_column axpy(const prime_field& f, const sparse_column& a, coeff s, const sparse_column& b) {
  if (s == 0) return a;
  sparse_column out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back({b[j].index, f.mul(s, b[j].value)});
      ++j;
    } else {
      coeff v = f.add(a[i].value, f.mul(s, b[j].value));
      if (v != 0) out.push_back({a[i].index, v});
      ++i;
      ++j;
    }
  }
  return out;
}

sparse_column scaled(const prime_field& f, const sparse_column& a, coeff s) {
  if (s % f.characteristic() == 0) return {};
  sparse_column out = a;
  for (auto& e : out) e.value = f.mul(e.value, s);
  return out;
}

coeff coefficient(const sparse_column& c, std::size_t index) {
  auto it = std::lower_bound(c.begin(), c.end(), index, [](const entry& e, std::size_t i) { return e.index < i; });
  return it != c.end() && it->index == index ? it->value : 0;
}

sparse_column normalized(const prime_field& f, std::vector<entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const entry& a, const entry& b) { return a.index < b.index; });
  sparse_column out;
  for (const auto& e : entries) {
    coeff v = e.value % f.characteristic();
    if (!out.empty() && out.back().index == e.index) {
      out.back().value = f.add(out.back().value, v);
      if (out.back().value == 0) out.pop_back();
    } else if (v != 0) {
      out.push_back({e.index, v});
    }
  }
  return out;
}

sparse_column column_basis::reduce(sparse_column v) const {
  while (!v.empty()) {
    auto it = pivot_of_.find(v.back().index);
    if (it == pivot_of_.end()) break;
    const sparse_column& b = columns_[it->second];
    coeff s = field_.neg(field_.div(v.back().value, b.back().value));
    v = axpy(field_, v, s, b);
  }
  return v;
}

bool column_basis::insert(sparse_column v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  pivot_of_.emplace(v.back().index, columns_.size());
  columns_.push_back(std::move(v));
  return true;
}

std::size_t rank_of(const prime_field& f, const std::vector<sparse_column>& columns) {
  column_basis basis(f);
  for (const auto& c : columns) basis.insert(c);
  return basis.rank();
}

bool solve_in_span(const prime_field& f, const std::vector<sparse_column>& columns, const sparse_column& v,
                   sparse_column& coefficients) {
  // Reduce while tracking each basis vector as a combination of the inputs.
  std::vector<sparse_column> basis;
  std::vector<sparse_column> history;
  std::unordered_map<std::size_t, std::size_t> pivot_of;
  auto reduce = [&](sparse_column x, sparse_column h) {
    while (!x.empty()) {
      auto it = pivot_of.find(x.back().index);
      if (it == pivot_of.end()) break;
      coeff s = f.neg(f.div(x.back().value, basis[it->second].back().value));
      x = axpy(f, x, s, basis[it->second]);
      h = axpy(f, h, s, history[it->second]);
    }
    return std::make_pair(std::move(x), std::move(h));
  };
  for (std::size_t k = 0; k < columns.size(); ++k) {
    auto [x, h] = reduce(columns[k], unit_column(k));
    if (x.empty()) continue;
    pivot_of.emplace(x.back().index, basis.size());
    basis.push_back(std::move(x));
    history.push_back(std::move(h));
  }
  auto [rest, h] = reduce(v, {});
  if (!rest.empty()) return false;
  // v + h·columns = 0.
  coefficients = scaled(f, h, f.neg(1));
  return true;
}

}  // namespace multipers
