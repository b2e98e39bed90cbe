#include <algorithm>

#include "multipers/metrics.hpp"
#include "multipers/module.hpp"

namespace multipers {

namespace {

void check_map_shape(const char* name, const std::vector<sparse_column>& map, std::size_t sources,
                     std::size_t targets, const prime_field& f) {
  if (map.size() != sources)
    throw dimension_error(std::string(name) + " has " + std::to_string(map.size()) + " columns, expected " +
                          std::to_string(sources));
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t k = 0; k < map[i].size(); ++k) {
      const auto& e = map[i][k];
      if (e.index >= targets)
        throw dimension_error(std::string(name) + " column " + std::to_string(i) + " references generator " +
                              std::to_string(e.index) + " of " + std::to_string(targets));
      if (e.value == 0 || e.value >= f.characteristic() || (k > 0 && map[i][k - 1].index >= e.index))
        throw precondition_error(std::string(name) + " column " + std::to_string(i) + " is not normalized");
    }
}

bool in_relation_span(const presentation& p, const sparse_column& v, const grade& bound) {
  if (v.empty()) return true;
  column_basis basis(p.field());
  for (const auto& r : p.relations())
    if (leq(r.degree, bound)) basis.insert(r.column);
  return basis.contains(v);
}

// Returns an empty string when the one-directional checks pass.
std::string check_direction(const char* name, const presentation& src, const presentation& dst,
                            const std::vector<sparse_column>& map, const rational& eps) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    grade top = shifted(src.generators()[i].degree, eps);
    for (const auto& e : map[i])
      if (!leq(dst.generators()[e.index].degree, top))
        return std::string(name) + ": generator " + std::to_string(i) + " maps to generator " +
               std::to_string(e.index) + " above its grade plus epsilon";
  }
  for (std::size_t r = 0; r < src.num_relations(); ++r) {
    const auto& rel = src.relations()[r];
    if (!in_relation_span(dst, apply(src.field(), map, rel.column), shifted(rel.degree, eps)))
      return std::string(name) + ": relation " + std::to_string(r) + " does not map into the relations";
  }
  return {};
}

std::string check_coherence(const char* name, const presentation& p, const std::vector<sparse_column>& first,
                            const std::vector<sparse_column>& second, const rational& eps) {
  const prime_field& f = p.field();
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    sparse_column round_trip = apply(f, second, first[i]);
    sparse_column diff = axpy(f, round_trip, f.neg(1), unit_column(i));
    if (!in_relation_span(p, diff, shifted(p.generators()[i].degree, rational(2 * eps))))
      return std::string(name) + ": composite differs from the shift map at generator " + std::to_string(i);
  }
  return {};
}

}  // namespace

verification_report verify_interleaving(const presentation& p, const presentation& q, const interleaving_witness& w) {
  if (p.dim() != q.dim()) throw dimension_error("presentations have different dimensions");
  if (!(p.field() == q.field())) throw precondition_error("presentations over different fields");
  if (w.epsilon < 0) throw precondition_error("witness epsilon must be nonnegative");
  check_map_shape("f", w.f, p.num_generators(), q.num_generators(), p.field());
  check_map_shape("g", w.g, q.num_generators(), p.num_generators(), p.field());

  for (auto reason : {check_direction("f", p, q, w.f, w.epsilon), check_direction("g", q, p, w.g, w.epsilon),
                      check_coherence("g.f", p, w.f, w.g, w.epsilon), check_coherence("f.g", q, w.g, w.f, w.epsilon)})
    if (!reason.empty()) return {false, reason};
  return {true, "accepted"};
}

std::vector<grade> default_probes(const presentation& p, const presentation& q) {
  if (p.dim() != q.dim()) throw dimension_error("presentations have different dimensions");
  auto gp = betti_and_grid(p).grid;
  auto gq = betti_and_grid(q).grid;
  std::vector<std::vector<rational>> axes(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    axes[i] = gp.axis(i);
    axes[i].insert(axes[i].end(), gq.axis(i).begin(), gq.axis(i).end());
    std::sort(axes[i].begin(), axes[i].end());
    axes[i].erase(std::unique(axes[i].begin(), axes[i].end()), axes[i].end());
  }
  return grid_function(std::move(axes)).image_points();
}

namespace {

// rank(X_a + X_b -> X_{c+2e}) > rank(Y_{a+e} + Y_{b+e} -> Y_{c+e}) for some probe pair.
bool obstructed(const presentation& x, const presentation& y, std::span<const grade> probes, const rational& e) {
  rational two_e = 2 * e;
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = i; j < probes.size(); ++j) {
      grade c = join(probes[i], probes[j]);
      std::vector<grade> sources{probes[i], probes[j]};
      std::size_t lhs = image_rank(x, sources, shifted(c, two_e));
      if (lhs == 0) continue;
      std::vector<grade> moved{shifted(probes[i], e), shifted(probes[j], e)};
      if (lhs > image_rank(y, moved, shifted(c, e))) return true;
    }
  return false;
}

}  // namespace

distance_report rank_lower_bound(const presentation& p, const presentation& q, std::span<const grade> probes) {
  if (p.dim() != q.dim()) throw dimension_error("presentations have different dimensions");
  for (const auto& a : probes)
    if (a.dim() != p.dim()) throw dimension_error("probe dimension differs from module dimension");

  // Both sides are right-continuous step functions of e with jumps only where
  // a probe coordinate plus e or 2e meets a grade coordinate.
  std::vector<rational> breaks{rational(0)};
  for (std::size_t i = 0; i < p.dim(); ++i) {
    std::vector<rational> coords;
    for (const auto* m : {&p, &q})
      for (const auto& g : all_grades(*m)) coords.push_back(g[i]);
    std::vector<rational> probe_coords;
    for (const auto& a : probes) probe_coords.push_back(a[i]);
    std::sort(probe_coords.begin(), probe_coords.end());
    probe_coords.erase(std::unique(probe_coords.begin(), probe_coords.end()), probe_coords.end());
    for (const auto& g : coords)
      for (const auto& x : probe_coords)
        if (g > x) {
          breaks.push_back(g - x);
          breaks.push_back((g - x) / 2);
        }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  distance_report report{extended::infinity(), bound_kind::lower_bound, std::nullopt, 0};
  for (const auto& e : breaks) {
    if (!obstructed(p, q, probes, e) && !obstructed(q, p, probes, e)) {
      report.value = e;
      return report;
    }
  }
  return report;
}

distance_report rank_lower_bound(const presentation& p, const presentation& q) {
  auto probes = default_probes(p, q);
  return rank_lower_bound(p, q, probes);
}

extended certified_upper_bound(const presentation& p, const presentation& q,
                               const std::optional<interleaving_witness>& w) {
  if (!w) return extended::infinity();
  return verify_interleaving(p, q, *w).accepted ? extended(w->epsilon) : extended::infinity();
}

std::string to_string(local_verdict v) {
  switch (v) {
    case local_verdict::pass:
      return "pass";
    case local_verdict::fail_at_resolution:
      return "fail-at-resolution";
    case local_verdict::hypothesis_failed:
      return "hypothesis-failed";
    case local_verdict::hypothesis_unverified:
      return "hypothesis-unverified";
    case local_verdict::trivial:
      return "trivial";
  }
  return "unknown";
}

local_equivalence_report local_equivalence_experiment(const presentation& m, const presentation& n,
                                                      const rational& kappa,
                                                      const std::optional<interleaving_witness>& witness,
                                                      const sample_config& config) {
  if (kappa < 0 || 34 * kappa >= 1) throw precondition_error("kappa must lie in [0, 1/34)");
  local_equivalence_report out;
  out.kappa = kappa;
  out.controlling = betti_and_grid(m).controlling;
  out.eps_lower = rank_lower_bound(m, n).value;
  out.eps_upper = certified_upper_bound(m, n, witness);
  if (out.eps_upper.is_infinite() && m.num_generators() == n.num_generators())
    out.eps_upper = min(out.eps_upper, certified_upper_bound(m, n, identity_witness(m.num_generators(), rational(0))));
  rational scale = 2 * (34 * kappa + 1);
  out.hypothesis_bound = out.controlling.is_infinite() ? extended::infinity()
                                                       : extended(rational(out.controlling.value() / scale));
  out.hypothesis_holds = out.eps_upper < out.hypothesis_bound;
  out.d0 = matching_distance(m, n, config);
  out.kappa_eps = kappa * out.eps_upper;
  out.strict_pass = out.kappa_eps < out.d0.value;
  out.nonstrict_pass = out.kappa_eps <= out.d0.value;

  if (out.eps_upper == extended(0L)) {
    out.verdict = local_verdict::trivial;
    out.note = "modules are isomorphic; nothing to test";
  } else if (out.eps_upper.is_infinite()) {
    out.verdict = local_verdict::hypothesis_unverified;
    out.note = "no certified interleaving; the closeness hypothesis cannot be checked";
  } else if (!out.hypothesis_holds) {
    out.verdict = local_verdict::hypothesis_failed;
    out.note = "certified interleaving is not below the controlling-constant bound";
  } else {
    out.verdict = out.strict_pass ? local_verdict::pass : local_verdict::fail_at_resolution;
  }
  if (out.eps_lower > extended(0L) && out.d0.value == extended(0L))
    out.note += (out.note.empty() ? "" : "; ") +
                std::string("sampled matching distance is 0 while the interleaving distance is positive");
  return out;
}

}  // namespace multipers
