#include "multipers/presentation.hpp"

#include <algorithm>

namespace multipers {

presentation::presentation(std::size_t n, prime_field field) : n_(n), field_(field) {}

presentation::presentation(std::size_t n, prime_field field, std::vector<generator> gens,
                           std::vector<relation> rels)
    : n_(n), field_(field) {
  for (auto& g : gens) add_generator(std::move(g.degree), std::move(g.label));
  for (auto& r : rels) add_relation(std::move(r.degree), std::move(r.column));
}

void presentation::check_generator(const generator& g) const {
  if (g.degree.dim() != n_)
    throw dimension_error("generator '" + g.label + "' has dimension " + std::to_string(g.degree.dim()) +
                          ", expected " + std::to_string(n_));
}

void presentation::check_relation(std::size_t index, const relation& r) const {
  if (r.degree.dim() != n_)
    throw dimension_error("relation " + std::to_string(index) + " has dimension " +
                          std::to_string(r.degree.dim()) + ", expected " + std::to_string(n_));
  for (std::size_t k = 0; k < r.column.size(); ++k) {
    const auto& e = r.column[k];
    if (e.index >= gens_.size())
      throw dimension_error("relation " + std::to_string(index) + " references generator " +
                            std::to_string(e.index) + " of " + std::to_string(gens_.size()));
    if (k > 0 && r.column[k - 1].index >= e.index)
      throw precondition_error("relation " + std::to_string(index) + " column is not strictly sorted");
    if (e.value == 0 || e.value >= field_.characteristic())
      throw precondition_error("relation " + std::to_string(index) + " has an unreduced coefficient");
    if (!leq(gens_[e.index].degree, r.degree))
      throw homogeneity_error(index, "generator " + std::to_string(e.index) + " at " +
                                         to_string(gens_[e.index].degree) + " is not below " +
                                         to_string(r.degree));
  }
}

std::size_t presentation::add_generator(grade degree, std::string label) {
  if (label.empty()) label = "g" + std::to_string(gens_.size());
  generator g{std::move(label), std::move(degree)};
  check_generator(g);
  gens_.push_back(std::move(g));
  return gens_.size() - 1;
}

std::size_t presentation::add_relation(grade degree, sparse_column column) {
  relation r{std::move(degree), std::move(column)};
  check_relation(rels_.size(), r);
  rels_.push_back(std::move(r));
  return rels_.size() - 1;
}

bool operator==(const presentation& a, const presentation& b) {
  if (a.n_ != b.n_ || !(a.field_ == b.field_) || a.gens_.size() != b.gens_.size() ||
      a.rels_.size() != b.rels_.size())
    return false;
  for (std::size_t i = 0; i < a.gens_.size(); ++i)
    if (a.gens_[i].label != b.gens_[i].label || !(a.gens_[i].degree == b.gens_[i].degree)) return false;
  for (std::size_t i = 0; i < a.rels_.size(); ++i)
    if (!(a.rels_[i].degree == b.rels_[i].degree) || a.rels_[i].column != b.rels_[i].column) return false;
  return true;
}

void validate(std::size_t n, const prime_field& field, const std::vector<generator>& gens,
              const std::vector<relation>& rels) {
  presentation(n, field, gens, rels);
}

presentation free_module(std::span<const grade> degrees, prime_field field) {
  if (degrees.empty()) throw precondition_error("free_module needs at least one degree");
  presentation p(degrees.front().dim(), field);
  for (const auto& d : degrees) p.add_generator(d);
  return p;
}

presentation box_module(const grade& lower, const std::vector<extended>& upper, prime_field field) {
  if (upper.size() != lower.dim()) throw dimension_error("box corners have different dimensions");
  presentation p(lower.dim(), field);
  for (std::size_t i = 0; i < upper.size(); ++i)
    if (upper[i].is_finite() && upper[i].value() <= lower[i])
      throw precondition_error("box upper corner must exceed the lower corner");
  p.add_generator(lower);
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (upper[i].is_infinite()) continue;
    grade r = lower;
    r[i] = upper[i].value();
    p.add_relation(r, unit_column(0));
  }
  return p;
}

presentation staircase_interval(std::vector<grade> births, std::vector<grade> deaths, prime_field field) {
  if (births.empty()) throw precondition_error("staircase needs at least one birth");
  for (const auto& g : births)
    if (g.dim() != 2) throw dimension_error("staircase grades must be two-dimensional");
  for (const auto& g : deaths)
    if (g.dim() != 2) throw dimension_error("staircase grades must be two-dimensional");
  std::sort(births.begin(), births.end(), lex_less);
  for (std::size_t i = 1; i < births.size(); ++i)
    if (!(births[i - 1][1] > births[i][1]))
      throw precondition_error("staircase births must form an antichain");

  presentation p(2, field);
  for (const auto& b : births) p.add_generator(b);
  for (std::size_t i = 0; i + 1 < births.size(); ++i) {
    sparse_column c = {entry{i, 1}, entry{i + 1, field.neg(1)}};
    if (field.characteristic() == 2) c = {entry{i, 1}, entry{i + 1, 1}};
    p.add_relation(join(births[i], births[i + 1]), c);
  }

  std::vector<std::pair<grade, std::size_t>> candidates;
  for (std::size_t i = 0; i < births.size(); ++i)
    for (const auto& d : deaths) candidates.emplace_back(join(births[i], d), i);
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  std::vector<std::pair<grade, std::size_t>> minimal;
  for (const auto& c : candidates) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const auto& m) { return leq(m.first, c.first); });
    if (!dominated) minimal.push_back(c);
  }
  for (const auto& [g, i] : minimal) p.add_relation(g, unit_column(i));
  return p;
}

presentation direct_sum(const presentation& a, const presentation& b) {
  if (a.dim() != b.dim()) throw dimension_error("direct sum of presentations with different dimensions");
  if (!(a.field() == b.field())) throw precondition_error("direct sum over different fields");
  presentation p = a;
  const std::size_t offset = a.num_generators();
  for (const auto& g : b.generators()) p.add_generator(g.degree, g.label);
  for (const auto& r : b.relations()) {
    sparse_column c = r.column;
    for (auto& e : c) e.index += offset;
    p.add_relation(r.degree, std::move(c));
  }
  return p;
}

presentation shift(const presentation& p, const grade& v) {
  presentation out(p.dim(), p.field());
  for (const auto& g : p.generators()) out.add_generator(translated(g.degree, v), g.label);
  for (const auto& r : p.relations()) out.add_relation(translated(r.degree, v), r.column);
  return out;
}

presentation shift(const presentation& p, const rational& s) {
  return shift(p, grade(std::vector<rational>(p.dim(), s)));
}

std::vector<grade> all_grades(const presentation& p) {
  std::vector<grade> out;
  for (const auto& g : p.generators()) out.push_back(g.degree);
  for (const auto& r : p.relations()) out.push_back(r.degree);
  return out;
}

}  // namespace multipers
