#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "witt/asw.hpp"
#include "witt/bigint.hpp"

namespace witt {

// m_i = -v(a_i); nullopt marks a zero component.
using ValuationProfile = std::vector<std::optional<long long>>;

struct BreakProfile {
  unsigned p = 0;
  std::size_t n = 0;  // length after stripping leading zero components
  ValuationProfile m;
  std::vector<BigInt> upper;
  std::vector<BigInt> lower;
  BigInt residue_degree = 1;  // p^r
  BigInt ram_index = 1;       // p^(n-r)
  std::size_t r = 0;
  bool minus_one_break = false;

  friend bool operator==(const BreakProfile&, const BreakProfile&) = default;
};

// u_i = max{p^(i-1) m_0, ..., m_(i-1)} for i = 1..n, skipping entries that
// are absent or nonpositive. NotTotallyRamifiedProfile unless m_0 > 0.
std::vector<BigInt> upper_breaks(unsigned p, const ValuationProfile& m);

// b_1 = u_1, b_(i+1) - b_i = p^i (u_(i+1) - u_i). NotIncreasing on bad input.
std::vector<BigInt> lower_from_upper(unsigned p, const std::vector<BigInt>& upper);
// Inverse; NonIntegralBreak when a difference is not divisible by p^i.
std::vector<BigInt> upper_from_lower(unsigned p, const std::vector<BigInt>& lower);

ValuationProfile valuation_profile(const CharacterVec& a);

// Break data of the character of a reduced vector. Leading zero components
// are stripped first. m_0 > 0 gives a totally ramified extension; m_0 = 0
// with a_0 outside the image of c -> c^p - c gives a mixed extension with
// residue degree p^r. Everything else is DegenerateCharacter.
BreakProfile full_profile(const CharacterVec& a);
// The same classification from valuations alone; a0_in_image says whether a
// unit a_0 lies in the Artin-Schreier image.
BreakProfile profile_from_valuations(unsigned p, const ValuationProfile& m, bool a0_in_image = false);

// Continuous increasing piecewise-linear function through (0, 0). Slope 1
// on [-1, 0]; slopes[k] applies on [x_k, x_(k+1)] and the last one beyond.
class PLFunction {
 public:
  PLFunction(std::vector<std::pair<Rational, Rational>> points, std::vector<Rational> slopes);

  const std::vector<std::pair<Rational, Rational>>& points() const { return points_; }
  const std::vector<Rational>& slopes() const { return slopes_; }
  Rational operator()(const Rational& x) const;
  PLFunction inverse() const;

 private:
  std::vector<std::pair<Rational, Rational>> points_;
  std::vector<Rational> slopes_;
};

struct HasseHerbrand {
  PLFunction phi;
  PLFunction psi;
};

// phi(x) = integral of dt / |G_0 : G_t| built from the lower breaks; psi is
// its inverse.
HasseHerbrand hasse_herbrand(const BreakProfile& profile);

struct SubextensionProfile {
  BreakProfile sub;              // degree p^(r+i) subextension
  std::vector<BigInt> top_lower; // lower breaks of the top piece
};

// OutOfRange unless 1 <= i <= s.
SubextensionProfile subextension_profile(const BreakProfile& profile, std::size_t i);

}  // namespace witt
