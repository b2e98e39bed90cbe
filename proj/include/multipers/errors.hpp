#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multipers {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class dimension_error : public error {
 public:
  using error::error;
};

/// A caller-side precondition was violated.
class precondition_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A relation column mentions a generator whose grade exceeds the relation grade.
class homogeneity_error : public error {
 public:
  homogeneity_error(std::size_t relation, const std::string& what)
      : error("relation " + std::to_string(relation) + ": " + what), relation_(relation) {}
  std::size_t relation() const { return relation_; }

 private:
  std::size_t relation_;
};

}  // namespace multipers
