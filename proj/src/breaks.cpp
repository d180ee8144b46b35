#include "witt/breaks.hpp"

#include <algorithm>
#include <string>

namespace witt {

namespace {

BigInt pow_p(unsigned p, std::size_t k) { return big_pow(p, static_cast<unsigned long>(k)); }

void require_increasing(const std::vector<BigInt>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) fail(ErrorCode::NotIncreasing, std::string(what) + " must be positive");
    if (i > 0 && v[i] <= v[i - 1]) fail(ErrorCode::NotIncreasing, std::string(what) + " must be strictly increasing");
  }
}

}  // namespace

std::vector<BigInt> upper_breaks(unsigned p, const ValuationProfile& m) {
  if (m.empty() || !m[0] || *m[0] <= 0) {
    fail(ErrorCode::NotTotallyRamifiedProfile, "upper break formula needs m_0 > 0");
  }
  std::vector<BigInt> u;
  u.reserve(m.size());
  for (std::size_t i = 1; i <= m.size(); ++i) {
    BigInt best = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (!m[j] || *m[j] <= 0) continue;
      const BigInt candidate = pow_p(p, i - 1 - j) * BigInt(static_cast<long>(*m[j]));
      if (candidate > best) best = candidate;
    }
    u.push_back(best);
  }
  return u;
}

std::vector<BigInt> lower_from_upper(unsigned p, const std::vector<BigInt>& upper) {
  require_increasing(upper, "upper breaks");
  std::vector<BigInt> b;
  b.reserve(upper.size());
  for (std::size_t i = 0; i < upper.size(); ++i) {
    b.push_back(i == 0 ? upper[0] : b.back() + pow_p(p, i) * (upper[i] - upper[i - 1]));
  }
  return b;
}

std::vector<BigInt> upper_from_lower(unsigned p, const std::vector<BigInt>& lower) {
  require_increasing(lower, "lower breaks");
  std::vector<BigInt> u;
  u.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (i == 0) {
      u.push_back(lower[0]);
      continue;
    }
    const BigInt diff = lower[i] - lower[i - 1];
    const BigInt step = pow_p(p, i);
    if (diff % step != 0) {
      fail(ErrorCode::NonIntegralBreak, "b_" + std::to_string(i + 1) + " - b_" + std::to_string(i) +
                                            " is not divisible by p^" + std::to_string(i));
    }
    u.push_back(u.back() + diff / step);
  }
  return u;
}

ValuationProfile valuation_profile(const CharacterVec& a) {
  ValuationProfile m;
  m.reserve(a.length());
  for (const auto& c : a.components()) {
    if (c.is_zero()) {
      m.emplace_back();
    } else {
      m.emplace_back(-c.valuation().value);
    }
  }
  return m;
}

BreakProfile profile_from_valuations(unsigned p, const ValuationProfile& m_in, bool a0_in_image) {
  auto first = std::find_if(m_in.begin(), m_in.end(), [](const auto& x) { return x.has_value(); });
  if (first == m_in.end()) fail(ErrorCode::DegenerateCharacter, "zero vector defines the trivial character");
  BreakProfile out;
  out.p = p;
  out.m.assign(first, m_in.end());
  out.n = out.m.size();
  const long long m0 = *out.m[0];
  if (m0 < 0) fail(ErrorCode::DegenerateCharacter, "v(a_0) > 0, so a_0 lies in the Artin-Schreier image");
  if (m0 == 0 && a0_in_image) fail(ErrorCode::DegenerateCharacter, "a_0 lies in the Artin-Schreier image");

  std::size_t r = 0;
  while (r < out.n && (!out.m[r] || *out.m[r] <= 0)) ++r;
  out.r = r;
  if (r < out.n) {
    const ValuationProfile tail(out.m.begin() + static_cast<long>(r), out.m.end());
    out.upper = upper_breaks(p, tail);
    out.lower = lower_from_upper(p, out.upper);
  }
  out.residue_degree = pow_p(p, r);
  out.ram_index = pow_p(p, out.n - r);
  out.minus_one_break = r >= 1;
  return out;
}

BreakProfile full_profile(const CharacterVec& a) {
  if (!is_reduced(a)) fail(ErrorCode::NotReduced, "break formulas need a reduced vector");
  const auto m = valuation_profile(a);
  bool in_image = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (*m[i] == 0) in_image = wp_member_unit(a[i]);
    break;
  }
  return profile_from_valuations(a.p(), m, in_image);
}

PLFunction::PLFunction(std::vector<std::pair<Rational, Rational>> points, std::vector<Rational> slopes)
    : points_(std::move(points)), slopes_(std::move(slopes)) {
  if (points_.empty() || points_.size() != slopes_.size()) {
    fail(ErrorCode::ShapeMismatch, "piecewise-linear function needs one slope per breakpoint");
  }
}

Rational PLFunction::operator()(const Rational& x) const {
  if (x < points_.front().first) {
    if (x < points_.front().first - 1) fail(ErrorCode::OutOfRange, "argument below -1");
    return points_.front().second + (x - points_.front().first);
  }
  std::size_t k = 0;
  while (k + 1 < points_.size() && points_[k + 1].first <= x) ++k;
  return points_[k].second + slopes_[k] * (x - points_[k].first);
}

PLFunction PLFunction::inverse() const {
  std::vector<std::pair<Rational, Rational>> pts;
  std::vector<Rational> sl;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    pts.emplace_back(points_[k].second, points_[k].first);
    sl.push_back(1 / slopes_[k]);
  }
  return PLFunction(std::move(pts), std::move(sl));
}

HasseHerbrand hasse_herbrand(const BreakProfile& profile) {
  std::vector<std::pair<Rational, Rational>> pts{{Rational(0), Rational(0)}};
  std::vector<Rational> slopes{Rational(1)};
  Rational index = 1;
  for (const auto& b : profile.lower) {
    const Rational x(b);
    const auto& [x0, y0] = pts.back();
    const Rational y = y0 + slopes.back() * (x - x0);
    index *= profile.p;
    pts.emplace_back(x, y);
    slopes.push_back(1 / index);
  }
  PLFunction phi(std::move(pts), std::move(slopes));
  return {phi, phi.inverse()};
}

SubextensionProfile subextension_profile(const BreakProfile& profile, std::size_t i) {
  const std::size_t s = profile.upper.size();
  if (i < 1 || i > s) fail(ErrorCode::OutOfRange, "subextension index outside 1.." + std::to_string(s));
  SubextensionProfile out;
  BreakProfile& sub = out.sub;
  sub.p = profile.p;
  sub.r = profile.r;
  sub.n = profile.r + i;
  sub.m.assign(profile.m.begin(), profile.m.begin() + static_cast<long>(sub.n));
  sub.upper.assign(profile.upper.begin(), profile.upper.begin() + static_cast<long>(i));
  sub.lower = lower_from_upper(profile.p, sub.upper);
  sub.residue_degree = profile.residue_degree;
  sub.ram_index = pow_p(profile.p, i);
  sub.minus_one_break = profile.minus_one_break;
  out.top_lower.assign(profile.lower.begin() + static_cast<long>(i), profile.lower.end());
  return out;
}

}  // namespace witt
