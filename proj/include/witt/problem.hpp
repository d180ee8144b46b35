#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "witt/asw.hpp"

namespace witt {

struct ProblemTerm {
  long long exponent = 0;
  std::string coeff;  // element of F_q written in the generator g
  friend bool operator==(const ProblemTerm&, const ProblemTerm&) = default;
};

// A Witt vector over F_q((t)) as stored in a problem file.
struct Problem {
  unsigned p = 0;
  unsigned degree = 1;
  std::optional<PrimePoly> modulus;  // constant term first
  std::vector<std::vector<ProblemTerm>> components;

  std::size_t n() const { return components.size(); }
  friend bool operator==(const Problem&, const Problem&) = default;
};

// Malformed JSON raises ParseError with line and column; a well-formed
// document that breaks the grammar raises ValidationError.
Problem parse_problem(std::string_view text);
// Canonical layout, one component per line, trailing newline.
std::string print_problem(const Problem& problem);

FieldPtr problem_field(const Problem& problem);
CharacterVec problem_vector(const Problem& problem);
CharacterVec problem_vector(const Problem& problem, const FieldPtr& field);
Problem problem_from_vector(const CharacterVec& a);

std::string read_text_file(const std::string& path);

}  // namespace witt
