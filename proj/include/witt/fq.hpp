#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "witt/bigint.hpp"

namespace witt {

// Dense polynomial over F_p, constant term first.
using PrimePoly = std::vector<unsigned>;

bool is_irreducible_mod_p(const PrimePoly& f, unsigned p);

// Finite field F_q = F_p[g]/(modulus). Elements are handled as codes: the
// base-p integer whose digits are the coefficients of 1, g, g^2, ....
// Multiplication goes through discrete log tables built at construction.
class FqField {
 public:
  using Code = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  // Validates p prime and modulus monic irreducible of the given degree.
  // Without a modulus (and degree > 1) the first irreducible monic
  // polynomial in enumeration order is used.
  static std::shared_ptr<const FqField> create(unsigned p, unsigned degree,
                                               std::optional<PrimePoly> modulus = std::nullopt);
  static std::shared_ptr<const FqField> prime(unsigned p) { return create(p, 1); }

  unsigned p() const { return p_; }
  unsigned degree() const { return degree_; }
  std::uint32_t order() const { return order_; }
  // Empty for prime fields.
  const PrimePoly& modulus() const { return modulus_; }
  bool modulus_given() const { return modulus_given_; }
  bool same_as(const FqField& other) const;

  Code zero() const { return 0; }
  Code one() const { return 1; }
  Code generator() const { return degree_ > 1 ? p_ : 0; }
  Code from_integer(long long v) const;
  Code from_integer(const BigInt& v) const { return static_cast<Code>(mod_ui(v, p_)); }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;  // DivisionByZero on 0
  Code pow(Code a, std::uint64_t k) const;
  Code frobenius(Code a) const { return pow(a, p_); }
  Code pth_root(Code a) const;
  unsigned trace(Code a) const;

  std::vector<unsigned> digits(Code a) const;
  Code from_digits(std::span<const unsigned> digits) const;

  // Textual form: polynomial in g with digit coefficients, e.g. "2g^2+g+1".
  std::string format(Code a) const;
  Code parse(std::string_view text) const;

 private:
  FqField(unsigned p, unsigned degree, PrimePoly modulus, bool given);
  Code slow_mul(Code a, Code b) const;
  void build_tables();

  unsigned p_;
  unsigned degree_;
  std::uint32_t order_;
  PrimePoly modulus_;
  bool modulus_given_;
  std::vector<Code> exp_;  // exp_[k] = w^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;
  std::vector<Code> neg_;
  std::vector<Code> add_table_;  // q*q when small
};

using FieldPtr = std::shared_ptr<const FqField>;

// Element of F_q bound to its field.
class FqElement {
 public:
  FqElement(FieldPtr field, FqField::Code code) : field_(std::move(field)), code_(code) {}
  static FqElement zero(FieldPtr f) { return {std::move(f), 0}; }
  static FqElement one(FieldPtr f) { return {std::move(f), 1}; }

  const FieldPtr& field() const { return field_; }
  FqField::Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<unsigned> coefficients() const { return field_->digits(code_); }

  friend FqElement operator+(const FqElement& a, const FqElement& b);
  friend FqElement operator-(const FqElement& a, const FqElement& b);
  friend FqElement operator*(const FqElement& a, const FqElement& b);
  FqElement operator-() const { return {field_, field_->neg(code_)}; }
  friend bool operator==(const FqElement& a, const FqElement& b);

  std::string to_string() const { return field_->format(code_); }

 private:
  FieldPtr field_;
  FqField::Code code_;
};

enum class FqOp { Add, Mul, Neg, Inv };
// Binary ops use both operands; Neg and Inv ignore b.
FqElement fq_arith(const FqElement& a, const FqElement& b, FqOp op);
FqElement fq_inverse(const FqElement& a);
FqElement fq_pth_root(const FqElement& a);
unsigned fq_trace(const FqElement& a);

void require_same_field(const FqField& a, const FqField& b);

// Ring-homomorphic embedding of a small field into a bigger one of the same
// characteristic, fixed by the smallest root (by code) of the small modulus.
class FqEmbedding {
 public:
  static FqEmbedding make(FieldPtr small, FieldPtr big);

  const FieldPtr& source() const { return small_; }
  const FieldPtr& target() const { return big_; }
  FqField::Code root() const { return root_; }
  FqField::Code apply(FqField::Code a) const { return table_.at(a); }
  FqElement operator()(const FqElement& a) const;

 private:
  FqEmbedding(FieldPtr small, FieldPtr big, FqField::Code root, std::vector<FqField::Code> table)
      : small_(std::move(small)), big_(std::move(big)), root_(root), table_(std::move(table)) {}
  FieldPtr small_;
  FieldPtr big_;
  FqField::Code root_;
  std::vector<FqField::Code> table_;
};

FieldPtr extension_field(const FqField& base, unsigned factor);

// Coefficient-ring adapter for F_q.
class FqRing {
 public:
  using Element = FqElement;
  explicit FqRing(FieldPtr field) : field_(std::move(field)) {}
  const FieldPtr& field() const { return field_; }

  FqElement zero() const { return FqElement::zero(field_); }
  FqElement one() const { return FqElement::one(field_); }
  FqElement from_integer(const BigInt& z) const { return {field_, field_->from_integer(z)}; }
  FqElement add(const FqElement& a, const FqElement& b) const { return a + b; }
  FqElement sub(const FqElement& a, const FqElement& b) const { return a - b; }
  FqElement mul(const FqElement& a, const FqElement& b) const { return a * b; }
  FqElement neg(const FqElement& a) const { return -a; }
  FqElement pow(const FqElement& a, std::uint64_t k) const { return {field_, field_->pow(a.code(), k)}; }
  bool is_zero(const FqElement& a) const { return a.is_zero(); }
  bool equal(const FqElement& a, const FqElement& b) const { return a == b; }
  unsigned long characteristic() const { return field_->p(); }
  bool same_ring(const FqRing& o) const { return field_->same_as(*o.field_); }
  std::string format(const FqElement& a) const { return a.to_string(); }

 private:
  FieldPtr field_;
};

}  // namespace witt
