#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "witt/asw.hpp"
#include "witt/breaks.hpp"

namespace witt {

class TowerElement;

// One floor of an Artin-Schreier tower K = L_0 < L_1 < ... with
// L_l = L_(l-1)[X_l], X_l^p - X_l = g_l. Valuations on L_l are normalized
// so that v(t) = p^l.
struct TowerLevel {
  unsigned p = 0;
  FieldPtr field;
  std::size_t level = 0;
  std::size_t size = 1;  // p^level coefficients per element
  std::shared_ptr<const TowerLevel> parent;
  std::shared_ptr<const TowerElement> g;  // element of the parent level
  long long generator_valuation = 0;      // v_l(X_l) = v_(l-1)(g_l)

  static std::shared_ptr<const TowerLevel> base(FieldPtr field);
};
using LevelPtr = std::shared_ptr<const TowerLevel>;

// Element of L_l stored as p^l Laurent coefficients; coefficient k belongs
// to X_1^(s_1) ... X_l^(s_l) with k = s_1 + s_2 p + ... + s_l p^(l-1).
class TowerElement {
 public:
  explicit TowerElement(LevelPtr level);
  TowerElement(LevelPtr level, std::vector<LaurentPoly> coeffs);

  static TowerElement from_base(LevelPtr level, const LaurentPoly& c);
  static TowerElement constant(LevelPtr level, FqField::Code c);
  static TowerElement generator(LevelPtr level);  // X_level

  const LevelPtr& level_info() const { return level_; }
  std::size_t level() const { return level_->level; }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  // Coefficient of X_level^s as an element of the parent level.
  TowerElement block(std::size_t s) const;
  // The same element viewed one or more levels up.
  TowerElement embed(const LevelPtr& target) const;

  TowerElement& operator+=(const TowerElement& b);
  TowerElement& operator-=(const TowerElement& b);
  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  TowerElement operator-() const;
  TowerElement scaled(FqField::Code c) const;
  TowerElement pow(std::uint64_t k) const;
  friend bool operator==(const TowerElement& a, const TowerElement& b);

  std::string to_string() const;

 private:
  LevelPtr level_;
  std::vector<LaurentPoly> coeffs_;
};

// Valuation in the element's own level. ZeroElement on zero; the minimum over
// monomials is unique by construction and is asserted (NonUniqueMinimum).
long long tower_valuation(const TowerElement& z);

// Coefficient-ring adapter at one level, so Witt operations run on towers.
class TowerRing {
 public:
  using Element = TowerElement;
  explicit TowerRing(LevelPtr level) : level_(std::move(level)) {}
  const LevelPtr& level() const { return level_; }

  TowerElement zero() const { return TowerElement(level_); }
  TowerElement one() const { return TowerElement::constant(level_, 1); }
  TowerElement from_integer(const BigInt& z) const {
    return TowerElement::constant(level_, level_->field->from_integer(z));
  }
  TowerElement add(const TowerElement& a, const TowerElement& b) const { return a + b; }
  TowerElement sub(const TowerElement& a, const TowerElement& b) const { return a - b; }
  TowerElement mul(const TowerElement& a, const TowerElement& b) const { return a * b; }
  TowerElement neg(const TowerElement& a) const { return -a; }
  TowerElement pow(const TowerElement& a, std::uint64_t k) const { return a.pow(k); }
  bool is_zero(const TowerElement& a) const { return a.is_zero(); }
  bool equal(const TowerElement& a, const TowerElement& b) const { return a == b; }
  unsigned long characteristic() const { return level_->p; }
  bool same_ring(const TowerRing& o) const { return level_ == o.level_; }
  std::string format(const TowerElement& a) const { return a.to_string(); }

 private:
  LevelPtr level_;
};

// An element of valuation `target` in the given level, built as
// X_l^(s_l) ... X_1^(s_1) t^r.
TowerElement element_of_valuation(const LevelPtr& level, long long target);

struct RhsReduction {
  TowerElement reduced;  // g - (W^p - W), valuation negative and prime to p
  TowerElement shift;    // W
};

// Removes p-divisible negative valuations from an Artin-Schreier right-hand
// side by subtracting (u Theta)^p - u Theta with u found by search over F_q^x.
RhsReduction reduce_rhs(const TowerElement& g);

struct GaloisElt {
  std::uint64_t k = 0;  // residue mod p^depth
};

struct Tower {
  unsigned p = 0;
  std::size_t depth = 0;
  std::vector<LevelPtr> levels;        // levels[0] is K
  std::vector<TowerElement> raw_rhs;   // before in-tower reduction, at level l
  std::vector<TowerElement> shifts;    // x_l = X_(l+1) + shifts[l]
  std::vector<TowerElement> x;         // x_l at level l+1

  const LevelPtr& top() const { return levels.back(); }
  std::vector<long long> generator_valuations() const;
  // x_0..x_(l-1) embedded at level l.
  std::vector<TowerElement> x_prefix(std::size_t l) const;
};

constexpr std::size_t kMaxTowerDepth = 3;

// Builds K < K(x_0) < ... < K(x_0..x_(d-1)) for F(x) = x + a.
Tower build_tower(const CharacterVec& a, std::size_t depth);

// sigma(x) = x + k 1_d, extended to a ring homomorphism.
TowerElement apply_galois(const Tower& tower, const TowerElement& z, GaloisElt sigma);

// X_d^alpha t^beta with alpha v(X_d) + beta p^d = 1.
TowerElement tower_uniformizer(const Tower& tower);

// b_i = v(sigma(pi) - pi) - 1 for sigma of exact order p^(d-i+1).
std::vector<BigInt> filtration_breaks(const Tower& tower);

// f_j(x_0, a_0) evaluated in L_1 = K(x_0), where f_j is the two-variable
// specialization of the sum polynomial S_j.
TowerElement specialized_sum_in_tower(const Tower& tower, const LaurentPoly& a0, std::size_t j);

struct Verdict {
  std::vector<BigInt> formula_lower;
  std::vector<BigInt> oracle_lower;
  std::vector<BigInt> formula_upper;
  bool equal = false;
};

Verdict compare(const CharacterVec& a, std::size_t depth);

}  // namespace witt
