#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "witt/bigint.hpp"

namespace witt {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then the exponent of the
// highest-indexed variable, then the next one down. With variables laid out
// as X_0..X_{n-1}, Y_0..Y_{n-1} this realizes X_0 < X_1 < ... < Y_0 < ....
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint64_t total_degree(const Exponents& e);

// Multivariate polynomial over Z in a fixed number of variables. Zero
// coefficients are never stored, so equality is structural.
class IntPolynomial {
 public:
  using TermMap = std::map<Exponents, BigInt, GradedLexLess>;

  explicit IntPolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static IntPolynomial constant(std::size_t num_vars, const BigInt& c);
  static IntPolynomial variable(std::size_t num_vars, std::size_t index);
  static IntPolynomial monomial(Exponents exps, const BigInt& c);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const BigInt& c);
  BigInt coefficient(const Exponents& exps) const;
  std::uint64_t total_degree() const;
  // Largest exponent of each variable over all terms.
  Exponents max_exponents() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  IntPolynomial pow(std::uint64_t k) const;

  // Divides every coefficient by d; throws InexactDivision on a remainder.
  IntPolynomial divide_exact(const BigInt& d) const;
  // Coefficients replaced by their residues in [0, m); zero residues dropped.
  IntPolynomial reduce_mod(unsigned long m) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_arity(const IntPolynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

// Names X_0..X_{n-1}, Y_0..Y_{n-1} for the 2n-variable Witt layout.
std::vector<std::string> witt_variable_names(std::size_t n);

}  // namespace witt
