#include "multipers/module.hpp"

#include <algorithm>
#include <numeric>

namespace multipers {

namespace {

// Relation indices sorted by (grade lex, index).
std::vector<std::size_t> relation_order(const std::vector<grade>& degrees, const std::vector<bool>& alive) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (alive[i]) order.push_back(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(degrees[a], degrees[b]); });
  return order;
}

// Relations of `order` that survive the span test against kept relations below them.
std::vector<bool> nonredundant(const prime_field& f, const std::vector<grade>& degrees,
                               const std::vector<sparse_column>& columns, const std::vector<std::size_t>& order) {
  std::vector<bool> keep(degrees.size(), false);
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    if (columns[i].empty()) continue;
    column_basis below(f);
    for (std::size_t j : kept)
      if (leq(degrees[j], degrees[i])) below.insert(columns[j]);
    if (below.contains(columns[i])) continue;
    keep[i] = true;
    kept.push_back(i);
  }
  return keep;
}

}  // namespace

minimization minimize_with_map(const presentation& p) {
  const prime_field& f = p.field();
  const std::size_t k = p.num_generators();
  const std::size_t m = p.num_relations();

  std::vector<grade> rel_degree(m);
  std::vector<sparse_column> column(m);
  for (std::size_t i = 0; i < m; ++i) {
    rel_degree[i] = p.relations()[i].degree;
    column[i] = p.relations()[i].column;
  }
  std::vector<bool> gen_alive(k, true), rel_alive(m, true);
  std::vector<sparse_column> image(k);
  for (std::size_t i = 0; i < k; ++i) image[i] = unit_column(i);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r : relation_order(rel_degree, rel_alive)) {
      // Largest generator index of equal grade with nonzero coefficient.
      const entry* pivot = nullptr;
      for (const auto& e : column[r])
        if (p.generators()[e.index].degree == rel_degree[r]) pivot = &e;
      if (!pivot) continue;
      const std::size_t b = pivot->index;
      const coeff c = pivot->value;
      const sparse_column killer = column[r];
      for (std::size_t s = 0; s < m; ++s) {
        if (!rel_alive[s] || s == r) continue;
        coeff cs = coefficient(column[s], b);
        if (cs != 0) column[s] = axpy(f, column[s], f.neg(f.div(cs, c)), killer);
      }
      for (auto& im : image) {
        coeff ci = coefficient(im, b);
        if (ci != 0) im = axpy(f, im, f.neg(f.div(ci, c)), killer);
      }
      rel_alive[r] = false;
      gen_alive[b] = false;
      changed = true;
      break;
    }
  }

  auto keep = nonredundant(f, rel_degree, column, relation_order(rel_degree, rel_alive));

  minimization out{presentation(p.dim(), f), {}, {}};
  std::vector<std::size_t> new_index(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!gen_alive[i]) continue;
    new_index[i] = out.result.num_generators();
    out.from_result.push_back(i);
    out.result.add_generator(p.generators()[i].degree, p.generators()[i].label);
  }
  auto reindex = [&](const sparse_column& c) {
    sparse_column d = c;
    for (auto& e : d) e.index = new_index[e.index];
    return d;
  };
  for (std::size_t r = 0; r < m; ++r)
    if (keep[r]) out.result.add_relation(rel_degree[r], reindex(column[r]));
  out.to_result.reserve(k);
  for (const auto& im : image) out.to_result.push_back(reindex(im));
  return out;
}

presentation minimize(const presentation& p) { return minimize_with_map(p).result; }

bool is_minimal(const presentation& p) {
  for (const auto& r : p.relations())
    for (const auto& e : r.column)
      if (p.generators()[e.index].degree == r.degree) return false;
  std::vector<grade> degrees;
  std::vector<sparse_column> columns;
  for (const auto& r : p.relations()) {
    degrees.push_back(r.degree);
    columns.push_back(r.column);
  }
  std::vector<bool> alive(degrees.size(), true);
  auto keep = nonredundant(p.field(), degrees, columns, relation_order(degrees, alive));
  return std::all_of(keep.begin(), keep.end(), [](bool b) { return b; });
}

std::size_t betti_data::partial_complexity() const {
  return xi0.size() + xi1.size();
}

betti_data betti_and_grid(const presentation& p) {
  presentation q = minimize(p);
  betti_data out;
  for (const auto& g : q.generators()) out.xi0.push_back(g.degree);
  for (const auto& r : q.relations()) out.xi1.push_back(r.degree);
  auto grades = all_grades(q);
  out.grid = grid_from_grades(grades, p.dim());
  out.controlling = out.grid.controlling_constant();
  return out;
}

std::size_t hilbert(const presentation& p, const grade& a) {
  if (a.dim() != p.dim()) throw dimension_error("hilbert query dimension differs from module dimension");
  std::size_t gens = 0;
  for (const auto& g : p.generators())
    if (leq(g.degree, a)) ++gens;
  column_basis basis(p.field());
  for (const auto& r : p.relations())
    if (leq(r.degree, a)) basis.insert(r.column);
  return gens - basis.rank();
}

std::size_t image_rank(const presentation& p, std::span<const grade> sources, const grade& target) {
  if (target.dim() != p.dim()) throw dimension_error("rank query dimension differs from module dimension");
  for (const auto& s : sources)
    if (!leq(s, target)) throw precondition_error("image_rank source " + to_string(s) + " is not below the target");
  std::vector<bool> in_source(p.num_generators(), false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.num_generators(); ++i)
    for (const auto& s : sources)
      if (leq(p.generators()[i].degree, s)) {
        in_source[i] = true;
        ++count;
        break;
      }
  column_basis full(p.field()), outside(p.field());
  for (const auto& r : p.relations()) {
    if (!leq(r.degree, target)) continue;
    full.insert(r.column);
    sparse_column rest;
    for (const auto& e : r.column)
      if (!in_source[e.index]) rest.push_back(e);
    outside.insert(std::move(rest));
  }
  return count + outside.rank() - full.rank();
}

std::size_t rank_invariant(const presentation& p, const grade& a, const grade& b) {
  return image_rank(p, std::span<const grade>(&a, 1), b);
}

}  // namespace multipers
