#include "multipers/functors.hpp"

namespace multipers {

interleaving_witness minimization_witness(const minimization& m) {
  interleaving_witness w{rational(0), m.to_result, {}};
  for (std::size_t i : m.from_result) w.g.push_back(unit_column(i));
  return w;
}

transformed regrade(const presentation& p, const std::function<grade(const grade&)>& generator_map,
                    const std::function<grade(const relation&)>& relation_map, const rational& epsilon,
                    bool raw) {
  presentation q(p.dim(), p.field());
  for (const auto& g : p.generators()) q.add_generator(generator_map(g.degree), g.label);
  for (const auto& r : p.relations()) q.add_relation(relation_map(r), r.column);
  interleaving_witness w = identity_witness(p.num_generators(), epsilon);
  if (raw) return {std::move(q), std::move(w)};
  auto m = minimize_with_map(q);
  return {std::move(m.result), compose(p.field(), w, minimization_witness(m))};
}

transformed merge_module(const presentation& p, const grid_function& grid, const rational& delta,
                         merge_variant variant, bool raw) {
  if (grid.dim() != p.dim()) throw dimension_error("grid and module dimensions differ");
  check_merge_parameter(grid, delta);
  auto move = [&](const grade& a) { return merge_grade(grid, delta, a, variant); };
  return regrade(p, move, [&](const relation& r) { return move(r.degree); }, delta, raw);
}

namespace {

void require_nonnegative(const rational& epsilon) {
  if (epsilon < 0) throw precondition_error("epsilon must be nonnegative");
}

// Generators of K = R ∩ Free[X(eps)], the relations of the image of M -> M(eps),
// graded on the shifted side. K_g = span(relations <= g) ∩ span(generators with
// grade + eps <= g) is constant on the cells of the product grid spanned by the
// relation grades and the shifted generator grades, so it suffices to collect,
// at each grid point, the part of K_g not already produced by its predecessors.
std::vector<relation> image_relations(const presentation& p, const rational& epsilon) {
  const std::size_t n = p.dim(), k = p.num_generators();
  const prime_field& f = p.field();
  std::vector<grade> moved;
  for (const auto& g : p.generators()) moved.push_back(shifted(g.degree, epsilon));
  std::vector<grade> marks = moved;
  for (const auto& r : p.relations()) marks.push_back(r.degree);
  if (p.num_relations() == 0) return {};
  auto grid = grid_from_grades(marks, n);

  std::vector<std::size_t> radix(n);
  for (std::size_t i = 0; i < n; ++i) radix[i] = grid.axis(i).size();
  std::size_t total = 1;
  for (auto r : radix) total *= r;
  std::vector<std::vector<sparse_column>> kernel(total);

  std::vector<relation> out;
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    // Row-major position; the last axis varies fastest, so predecessors come first.
    std::size_t rest = flat;
    for (std::size_t i = n; i-- > 0;) {
      idx[i] = rest % radix[i];
      rest /= radix[i];
    }
    grade g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = grid.axis(i)[idx[i]];

    // Generators that cannot appear in K_g are ordered after all others, so the
    // reduced columns with an inside pivot span the intersection.
    std::vector<bool> inside(k);
    for (std::size_t i = 0; i < k; ++i) inside[i] = leq(moved[i], g);
    auto key = [&](std::size_t i) { return inside[i] ? i : i + k; };
    column_basis echelon(f);
    for (const auto& r : p.relations()) {
      if (!leq(r.degree, g)) continue;
      std::vector<entry> col;
      for (const auto& e : r.column) col.push_back({key(e.index), e.value});
      echelon.insert(normalized(f, std::move(col)));
    }
    std::vector<sparse_column> here;
    for (const auto& col : echelon.columns())
      if (col.back().index < k) here.push_back(col);

    column_basis below(f);
    std::size_t stride = 1;
    for (std::size_t i = n; i-- > 0;) {
      if (idx[i] > 0)
        for (const auto& v : kernel[flat - stride]) below.insert(v);
      stride *= radix[i];
    }
    for (const auto& v : here)
      if (below.insert(v)) out.push_back({g, v});
    kernel[flat] = std::move(here);
  }
  return out;
}

transformed image_presentation(const presentation& p, const rational& epsilon, const rational& gen_shift,
                               const rational& rel_shift, bool raw) {
  require_nonnegative(epsilon);
  presentation q(p.dim(), p.field());
  for (const auto& g : p.generators()) q.add_generator(shifted(g.degree, gen_shift), g.label);
  for (auto& r : image_relations(p, epsilon)) q.add_relation(shifted(r.degree, rel_shift), std::move(r.column));
  interleaving_witness w = identity_witness(p.num_generators(), epsilon);
  if (raw) return {std::move(q), std::move(w)};
  auto m = minimize_with_map(q);
  return {std::move(m.result), compose(p.field(), w, minimization_witness(m))};
}

}  // namespace

transformed translate_image(const presentation& p, const rational& epsilon, bool raw) {
  return image_presentation(p, epsilon, epsilon, rational(0), raw);
}

transformed simplify(const presentation& p, const rational& epsilon, bool raw) {
  return image_presentation(p, epsilon, rational(0), rational(-epsilon), raw);
}

transformed grid_align(const presentation& p, const grid_function& grid, const rational& kappa_eps) {
  using s = grid_align_schedule;
  if (kappa_eps < 0) throw precondition_error("kappa*eps must be nonnegative");
  if (!(extended(rational(s::required_gap * kappa_eps)) < grid.controlling_constant()))
    throw precondition_error("grid controlling constant must exceed 40 kappa eps");
  const prime_field& f = p.field();
  auto step1 = simplify(p, rational(s::first_simplify * kappa_eps));
  auto step2 = merge_module(step1.module, grid, rational(s::first_merge * kappa_eps));
  auto step3 = simplify(step2.module, rational(s::second_simplify * kappa_eps));
  auto step4 = merge_module(step3.module, grid, rational(s::second_merge * kappa_eps));
  auto w = compose(f, compose(f, compose(f, step1.witness, step2.witness), step3.witness), step4.witness);
  return {std::move(step4.module), std::move(w)};
}

transformed interleaving_witness_for(const presentation& p, const transform_spec& spec) {
  switch (spec.kind) {
    case transform_kind::shift:
      return {shift(p, spec.amount), identity_witness(p.num_generators(), abs(spec.amount))};
    case transform_kind::merge:
      return merge_module(p, spec.grid, spec.amount, spec.variant);
    case transform_kind::simplify:
      return simplify(p, spec.amount);
  }
  throw precondition_error("unknown transform kind");
}

namespace {

presentation joint_at(const joint_presentation& j, const rational& t) {
  rational tm = t * j.epsilon;
  rational tn = (1 - t) * j.epsilon;
  std::vector<generator> gens;
  for (const auto& g : j.m_generators) gens.push_back({g.label, shifted(g.degree, tm)});
  for (const auto& g : j.n_generators) gens.push_back({g.label, shifted(g.degree, tn)});
  std::vector<relation> rels;
  for (const auto& r : j.m_relations) rels.push_back({shifted(r.degree, tm), r.column});
  for (const auto& r : j.n_relations) rels.push_back({shifted(r.degree, tn), r.column});
  return presentation(j.n, j.field, std::move(gens), std::move(rels));
}

}  // namespace

void validate(const joint_presentation& j) {
  if (j.epsilon < 0) throw precondition_error("joint presentation epsilon must be nonnegative");
  joint_at(j, rational(0));
  joint_at(j, rational(1));
}

presentation interpolate(const joint_presentation& j, const rational& t, bool raw) {
  if (t < 0 || t > 1) throw precondition_error("interpolation parameter must lie in [0, 1]");
  presentation q = joint_at(j, t);
  return raw ? q : minimize(q);
}

joint_presentation joint_from_witness(const presentation& p, const presentation& q, const interleaving_witness& w) {
  if (p.dim() != q.dim()) throw dimension_error("presentations have different dimensions");
  if (!(p.field() == q.field())) throw precondition_error("presentations over different fields");
  if (w.f.size() != p.num_generators() || w.g.size() != q.num_generators())
    throw dimension_error("witness sizes do not match the presentations");
  const prime_field& f = p.field();
  const std::size_t k = p.num_generators();
  joint_presentation j{p.dim(), f, w.epsilon, p.generators(), q.generators(), {}, {}};

  j.m_relations = p.relations();
  for (std::size_t i = 0; i < q.num_generators(); ++i) {
    // n_i - g(n_i), read on M's side at gr(n_i) + eps.
    sparse_column c = axpy(f, unit_column(k + i), f.neg(1), w.g[i]);
    j.m_relations.push_back({shifted(q.generators()[i].degree, w.epsilon), std::move(c)});
  }
  for (const auto& r : q.relations()) {
    sparse_column c = r.column;
    for (auto& e : c) e.index += k;
    j.n_relations.push_back({r.degree, std::move(c)});
  }
  for (std::size_t i = 0; i < k; ++i) {
    sparse_column image = w.f[i];
    for (auto& e : image) e.index += k;
    sparse_column c = axpy(f, unit_column(i), f.neg(1), image);
    j.n_relations.push_back({shifted(p.generators()[i].degree, w.epsilon), std::move(c)});
  }
  validate(j);
  return j;
}

}  // namespace multipers
