#include "multipers/metrics.hpp"

namespace multipers {

namespace {

extended half_length(const bar& b) {
  if (b.death.is_infinite()) return extended::infinity();
  return extended(rational((b.death.value() - b.birth) / 2));
}

extended match_cost(const bar& a, const bar& b) {
  if (a.death.is_infinite() != b.death.is_infinite()) return extended::infinity();
  rational births = abs(rational(a.birth - b.birth));
  if (a.death.is_infinite()) return births;
  rational deaths = abs(rational(a.death.value() - b.death.value()));
  return births < deaths ? deaths : births;
}

}  // namespace

assignment bottleneck_matching(const barcode& a, const barcode& b) {
  std::vector<extended> del_a, del_b;
  for (const auto& x : a.bars()) del_a.push_back(half_length(x));
  for (const auto& y : b.bars()) del_b.push_back(half_length(y));
  return bottleneck_assignment(
      a.size(), b.size(), [&](std::size_t i, std::size_t j) { return match_cost(a.bars()[i], b.bars()[j]); }, del_a,
      del_b);
}

extended bottleneck(const barcode& a, const barcode& b) {
  std::size_t inf_a = 0, inf_b = 0;
  for (const auto& x : a.bars()) inf_a += x.death.is_infinite();
  for (const auto& y : b.bars()) inf_b += y.death.is_infinite();
  if (inf_a != inf_b) return extended::infinity();
  return bottleneck_matching(a, b).value;
}

std::string to_string(bound_kind k) {
  switch (k) {
    case bound_kind::exact:
      return "exact";
    case bound_kind::lower_bound:
      return "lower_bound";
    case bound_kind::upper_bound:
      return "upper_bound";
  }
  return "unknown";
}

}  // namespace multipers
