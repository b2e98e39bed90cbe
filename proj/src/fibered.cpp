#include "multipers/fibered.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace multipers {

bool bar_less(const bar& a, const bar& b) {
  if (a.birth != b.birth) return a.birth < b.birth;
  return a.death < b.death;
}

barcode::barcode(std::vector<bar> bars) {
  for (auto& b : bars)
    if (extended(b.birth) < b.death) bars_.push_back(std::move(b));
  std::sort(bars_.begin(), bars_.end(), bar_less);
}

presentation restrict(const presentation& p, const line_spec& line) {
  if (line.dim() != p.dim()) throw dimension_error("line and module dimensions differ");
  presentation q(1, p.field());
  for (const auto& g : p.generators()) q.add_generator(grade{push(line, g.degree)}, g.label);
  for (const auto& r : p.relations()) q.add_relation(grade{push(line, r.degree)}, r.column);
  return q;
}

barcode barcode_of(const presentation& p) {
  if (p.dim() != 1) throw dimension_error("barcode_of needs a one-parameter presentation");
  const prime_field& f = p.field();
  const auto& gens = p.generators();
  const auto& rels = p.relations();

  // Position of each generator in (grade, index) order; pivots use the largest position.
  std::vector<std::size_t> gen_order(gens.size());
  std::iota(gen_order.begin(), gen_order.end(), 0);
  std::stable_sort(gen_order.begin(), gen_order.end(),
                   [&](std::size_t a, std::size_t b) { return gens[a].degree[0] < gens[b].degree[0]; });
  std::vector<std::size_t> position(gens.size());
  for (std::size_t k = 0; k < gen_order.size(); ++k) position[gen_order[k]] = k;

  std::vector<std::size_t> rel_order(rels.size());
  std::iota(rel_order.begin(), rel_order.end(), 0);
  std::stable_sort(rel_order.begin(), rel_order.end(),
                   [&](std::size_t a, std::size_t b) { return rels[a].degree[0] < rels[b].degree[0]; });

  std::unordered_map<std::size_t, sparse_column> reduced;  // pivot position -> column
  std::vector<extended> death(gens.size(), extended::infinity());
  for (std::size_t r : rel_order) {
    std::vector<entry> entries;
    for (const auto& e : rels[r].column) entries.push_back({position[e.index], e.value});
    sparse_column col = normalized(f, std::move(entries));
    while (!col.empty()) {
      auto it = reduced.find(col.back().index);
      if (it == reduced.end()) break;
      col = axpy(f, col, f.neg(f.div(col.back().value, it->second.back().value)), it->second);
    }
    if (col.empty()) continue;
    death[col.back().index] = rels[r].degree[0];
    reduced.emplace(col.back().index, std::move(col));
  }

  std::vector<bar> bars;
  for (std::size_t k = 0; k < gen_order.size(); ++k) bars.push_back({gens[gen_order[k]].degree[0], death[k]});
  return barcode(std::move(bars));
}

barcode fibered_barcode(const presentation& p, const line_spec& line) { return barcode_of(restrict(p, line)); }

barcode simplify_barcode(const barcode& b, const rational& epsilon) {
  if (epsilon < 0) throw precondition_error("epsilon must be nonnegative");
  std::vector<bar> out;
  for (const auto& x : b.bars()) {
    if (x.death.is_infinite()) {
      out.push_back(x);
    } else if (x.death.value() - x.birth > epsilon) {
      out.push_back({x.birth, extended(rational(x.death.value() - epsilon))});
    }
  }
  return barcode(std::move(out));
}

}  // namespace multipers
