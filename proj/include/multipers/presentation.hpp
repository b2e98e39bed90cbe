#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "multipers/field.hpp"
#include "multipers/grade.hpp"

namespace multipers {

struct generator {
  std::string label;
  grade degree;
};

/// A homogeneous relation: column over generator indices, placed at degree.
struct relation {
  grade degree;
  sparse_column column;
};

/// A finite graded presentation over F_p[x_1..x_n]. Monomials are implicit in
/// grade differences, so a relation is a coefficient column.
class presentation {
 public:
  explicit presentation(std::size_t n, prime_field field = prime_field(2));
  presentation(std::size_t n, prime_field field, std::vector<generator> gens, std::vector<relation> rels);

  std::size_t dim() const { return n_; }
  const prime_field& field() const { return field_; }
  const std::vector<generator>& generators() const { return gens_; }
  const std::vector<relation>& relations() const { return rels_; }
  std::size_t num_generators() const { return gens_.size(); }
  std::size_t num_relations() const { return rels_.size(); }

  /// Empty label becomes "g<index>".
  std::size_t add_generator(grade degree, std::string label = {});
  std::size_t add_relation(grade degree, sparse_column column);

  friend bool operator==(const presentation& a, const presentation& b);

 private:
  void check_generator(const generator& g) const;
  void check_relation(std::size_t index, const relation& r) const;

  std::size_t n_;
  prime_field field_;
  std::vector<generator> gens_;
  std::vector<relation> rels_;
};

/// Throws unless every relation is homogeneous with valid, reduced coefficients.
void validate(std::size_t n, const prime_field& field, const std::vector<generator>& gens,
              const std::vector<relation>& rels);

presentation free_module(std::span<const grade> degrees, prime_field field = prime_field(2));

/// Indicator module of the box [lower, upper); infinite upper coordinates leave that side open.
presentation box_module(const grade& lower, const std::vector<extended>& upper, prime_field field = prime_field(2));

/// Two-parameter interval generated by the antichain `births` and truncated by
/// the upset generated by `deaths`.
presentation staircase_interval(std::vector<grade> births, std::vector<grade> deaths,
                                prime_field field = prime_field(2));

presentation direct_sum(const presentation& a, const presentation& b);

/// Every grade moved by +v.
presentation shift(const presentation& p, const grade& v);
/// Every grade moved by +s(1,...,1).
presentation shift(const presentation& p, const rational& s);

/// All generator and relation grades.
std::vector<grade> all_grades(const presentation& p);

}  // namespace multipers
