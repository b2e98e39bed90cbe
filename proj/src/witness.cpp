#include "multipers/witness.hpp"

#include "multipers/errors.hpp"

namespace multipers {

interleaving_witness identity_witness(std::size_t generators, const rational& epsilon) {
  interleaving_witness w{epsilon, {}, {}};
  for (std::size_t i = 0; i < generators; ++i) {
    w.f.push_back(unit_column(i));
    w.g.push_back(unit_column(i));
  }
  return w;
}

sparse_column apply(const prime_field& field, const std::vector<sparse_column>& images, const sparse_column& x) {
  sparse_column out;
  for (const auto& e : x) {
    if (e.index >= images.size())
      throw dimension_error("map has " + std::to_string(images.size()) + " columns, index " +
                            std::to_string(e.index) + " requested");
    out = axpy(field, out, e.value, images[e.index]);
  }
  return out;
}

interleaving_witness compose(const prime_field& field, const interleaving_witness& first,
                             const interleaving_witness& second) {
  interleaving_witness out{rational(first.epsilon + second.epsilon), {}, {}};
  out.f.reserve(first.f.size());
  for (const auto& col : first.f) out.f.push_back(apply(field, second.f, col));
  out.g.reserve(second.g.size());
  for (const auto& col : second.g) out.g.push_back(apply(field, first.g, col));
  return out;
}

interleaving_witness reversed(const interleaving_witness& w) { return {w.epsilon, w.g, w.f}; }

interleaving_witness direct_sum(const interleaving_witness& a, const interleaving_witness& b,
                                std::size_t a_targets, std::size_t a_sources) {
  if (a.epsilon != b.epsilon) throw precondition_error("direct sum of witnesses with different epsilons");
  if (a.f.size() != a_sources || a.g.size() != a_targets)
    throw dimension_error("witness sizes do not match the declared summand sizes");
  interleaving_witness out = a;
  for (auto col : b.f) {
    for (auto& e : col) e.index += a_targets;
    out.f.push_back(std::move(col));
  }
  for (auto col : b.g) {
    for (auto& e : col) e.index += a_sources;
    out.g.push_back(std::move(col));
  }
  return out;
}

}  // namespace multipers
