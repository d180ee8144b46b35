#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/fq.hpp"

namespace witt {

// Valuation of a Laurent polynomial. Exact zero has valuation +infinity; a
// zero known only modulo t^N is bounded below by N.
struct Valuation {
  enum class Kind { Finite, Infinite, BoundedBelow };
  Kind kind = Kind::Infinite;
  long long value = 0;

  static Valuation finite(long long v) { return {Kind::Finite, v}; }
  static Valuation infinite() { return {Kind::Infinite, 0}; }
  static Valuation bounded_below(long long n) { return {Kind::BoundedBelow, n}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

// Finite-support element of F_q((t)), optionally known only modulo t^N.
class LaurentPoly {
 public:
  using Code = FqField::Code;
  using Term = std::pair<long long, Code>;

  explicit LaurentPoly(FieldPtr field) : field_(std::move(field)) {}
  static LaurentPoly monomial(FieldPtr field, Code coeff, long long exponent);
  static LaurentPoly monomial(const FqElement& coeff, long long exponent) {
    return monomial(coeff.field(), coeff.code(), exponent);
  }
  static LaurentPoly constant(FieldPtr field, Code coeff) { return monomial(std::move(field), coeff, 0); }
  // Terms may come in any order; repeated exponents are summed and zero
  // coefficients dropped.
  static LaurentPoly from_terms(FieldPtr field, std::vector<Term> terms,
                                std::optional<long long> precision = std::nullopt);

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<long long>& precision() const { return precision_; }
  bool is_exact() const { return !precision_.has_value(); }
  // No stored terms (exact zero, or zero modulo t^N).
  bool is_zero() const { return terms_.empty(); }
  Code coeff(long long exponent) const;

  Valuation valuation() const;
  // Lower bound on the true valuation (min stored exponent, or N).
  std::optional<long long> valuation_lower_bound() const;
  FqElement leading_coeff() const;  // ZeroOperand on zero
  long long max_exponent() const;   // ZeroOperand on zero

  // Reduces modulo t^n (keeps the smaller precision if already inexact).
  LaurentPoly truncated(long long n) const;
  LaurentPoly without_precision() const;
  // Terms with exponent in [lo, hi].
  LaurentPoly slice(long long lo, long long hi) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly scaled(Code c) const;
  LaurentPoly shifted(long long k) const;  // multiply by t^k
  // Term-wise p-th power (Frobenius in characteristic p).
  LaurentPoly frobenius() const;
  LaurentPoly pow(std::uint64_t k) const;

  // Structural equality, precision included.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  // a - b vanishes modulo the combined precision.
  friend bool congruent(const LaurentPoly& a, const LaurentPoly& b) { return (a - b).is_zero(); }

  std::string to_string() const;

 private:
  void normalize_precision();

  FieldPtr field_;
  std::vector<Term> terms_;  // ascending exponents, nonzero coefficients
  std::optional<long long> precision_;
};

enum class LaurentOp { Add, Mul, Neg };
LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op);
Valuation valuation(const LaurentPoly& a);
FqElement leading_coeff(const LaurentPoly& a);
// Term-wise inverse Frobenius; NotAPthPower if some exponent is prime to p.
LaurentPoly laurent_pth_root(const LaurentPoly& a);
// c with c^p - c = a (mod t^N) for v(a) >= 1, as the truncated series
// -(a + a^p + a^{p^2} + ...).
LaurentPoly wp_inverse_positive(const LaurentPoly& a, std::optional<long long> precision);

class LaurentRing {
 public:
  using Element = LaurentPoly;
  explicit LaurentRing(FieldPtr field) : field_(std::move(field)) {}
  const FieldPtr& field() const { return field_; }

  LaurentPoly zero() const { return LaurentPoly(field_); }
  LaurentPoly one() const { return LaurentPoly::constant(field_, 1); }
  LaurentPoly from_integer(const BigInt& z) const { return LaurentPoly::constant(field_, field_->from_integer(z)); }
  LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) const { return a + b; }
  LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) const { return a - b; }
  LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const { return a * b; }
  LaurentPoly neg(const LaurentPoly& a) const { return -a; }
  LaurentPoly pow(const LaurentPoly& a, std::uint64_t k) const { return a.pow(k); }
  // Exact zero only; a zero known modulo t^N is not treated as zero here.
  bool is_zero(const LaurentPoly& a) const { return a.is_zero() && a.is_exact(); }
  bool equal(const LaurentPoly& a, const LaurentPoly& b) const { return a == b; }
  unsigned long characteristic() const { return field_->p(); }
  bool same_ring(const LaurentRing& o) const { return field_->same_as(*o.field_); }
  std::string format(const LaurentPoly& a) const { return a.to_string(); }

 private:
  FieldPtr field_;
};

}  // namespace witt
