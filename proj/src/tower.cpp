#include "witt/tower.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "witt/witt_polys.hpp"

namespace witt {

namespace {

long long floor_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m for gcd(a, m) = 1.
long long inverse_mod(long long a, long long m) {
  long long old_r = floor_mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) fail(ErrorCode::NotTotallyRamified, "generator valuation is not prime to p");
  return floor_mod(old_s, m);
}

LevelPtr make_level(const LevelPtr& parent, const TowerElement& g) {
  auto lv = std::make_shared<TowerLevel>();
  lv->p = parent->p;
  lv->field = parent->field;
  lv->level = parent->level + 1;
  lv->size = parent->size * parent->p;
  lv->parent = parent;
  lv->g = std::make_shared<const TowerElement>(g);
  lv->generator_valuation = tower_valuation(g);
  return lv;
}

// v_l(X_j) for j = 1..l, index j-1.
std::vector<long long> generator_valuations_at(const TowerLevel& level) {
  std::vector<long long> out(level.level);
  long long scale = 1;
  for (const TowerLevel* lv = &level; lv->level > 0; lv = lv->parent.get()) {
    out[lv->level - 1] = lv->generator_valuation * scale;
    scale *= lv->p;
  }
  return out;
}

// The images sigma(X_1), ..., sigma(X_d), each at its own level.
class GaloisAction {
 public:
  GaloisAction(const Tower& tower, std::uint64_t k) {
    const unsigned p = tower.p;
    const std::size_t d = tower.depth;
    const FqRing fp(FqField::prime(p));
    const auto kappa = scalar_multiple(k, WittVec<FqRing>::one(fp, p, d));
    images_.reserve(d);
    for (std::size_t l = 0; l < d; ++l) {
      const LevelPtr& lv = tower.levels[l + 1];
      const TowerRing ring(lv);
      std::vector<TowerElement> values = tower.x_prefix(l + 1);
      for (std::size_t j = 0; j <= l; ++j) values.push_back(TowerElement::constant(lv, kappa[j].code()));
      const auto family = witt_family(p, l + 1, WittOpKind::Sum, true);
      const TowerElement moved = eval_poly<TowerRing>((*family)[l], values, ring);
      images_.push_back(moved - apply(tower.shifts[l]).embed(lv));
    }
  }

  TowerElement apply(const TowerElement& z) const {
    const std::size_t l = z.level();
    if (l == 0) return z;
    const LevelPtr& lv = z.level_info();
    const TowerElement& img = images_.at(l - 1);
    TowerElement acc(lv);
    for (std::size_t s = lv->p; s-- > 0;) {
      acc = acc * img + apply(z.block(s)).embed(lv);
    }
    return acc;
  }

 private:
  std::vector<TowerElement> images_;
};

}  // namespace

std::shared_ptr<const TowerLevel> TowerLevel::base(FieldPtr field) {
  auto lv = std::make_shared<TowerLevel>();
  lv->p = field->p();
  lv->field = std::move(field);
  return lv;
}

TowerElement::TowerElement(LevelPtr level)
    : level_(std::move(level)), coeffs_(level_->size, LaurentPoly(level_->field)) {}

TowerElement::TowerElement(LevelPtr level, std::vector<LaurentPoly> coeffs)
    : level_(std::move(level)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != level_->size) fail(ErrorCode::ShapeMismatch, "wrong number of tower coefficients");
}

TowerElement TowerElement::from_base(LevelPtr level, const LaurentPoly& c) {
  TowerElement z(std::move(level));
  z.coeffs_[0] = c;
  return z;
}

TowerElement TowerElement::constant(LevelPtr level, FqField::Code c) {
  const auto field = level->field;
  return from_base(std::move(level), LaurentPoly::constant(field, c));
}

TowerElement TowerElement::generator(LevelPtr level) {
  if (level->level == 0) fail(ErrorCode::OutOfRange, "the base level has no generator");
  TowerElement z(level);
  z.coeffs_[level->parent->size] = LaurentPoly::constant(level->field, 1);
  return z;
}

bool TowerElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& c) { return c.is_zero(); });
}

TowerElement TowerElement::block(std::size_t s) const {
  const std::size_t w = level_->parent->size;
  return TowerElement(level_->parent, std::vector<LaurentPoly>(coeffs_.begin() + static_cast<long>(s * w),
                                                               coeffs_.begin() + static_cast<long>((s + 1) * w)));
}

TowerElement TowerElement::embed(const LevelPtr& target) const {
  if (target->level < level()) fail(ErrorCode::ShapeMismatch, "cannot embed into a lower level");
  TowerElement z(target);
  std::copy(coeffs_.begin(), coeffs_.end(), z.coeffs_.begin());
  return z;
}

TowerElement& TowerElement::operator+=(const TowerElement& b) {
  if (b.level() != level()) fail(ErrorCode::ShapeMismatch, "tower elements at different levels");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!b.coeffs_[i].is_zero()) coeffs_[i] += b.coeffs_[i];
  }
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& b) {
  if (b.level() != level()) fail(ErrorCode::ShapeMismatch, "tower elements at different levels");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!b.coeffs_[i].is_zero()) coeffs_[i] -= b.coeffs_[i];
  }
  return *this;
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  if (a.level() != b.level()) fail(ErrorCode::ShapeMismatch, "tower elements at different levels");
  const LevelPtr& lv = a.level_;
  if (lv->level == 0) return TowerElement(lv, {a.coeffs_[0] * b.coeffs_[0]});
  const unsigned p = lv->p;
  std::vector<TowerElement> ab, bb;
  for (std::size_t s = 0; s < p; ++s) {
    ab.push_back(a.block(s));
    bb.push_back(b.block(s));
  }
  std::vector<TowerElement> prod(2 * p - 1, TowerElement(lv->parent));
  for (std::size_t i = 0; i < p; ++i) {
    if (ab[i].is_zero()) continue;
    for (std::size_t j = 0; j < p; ++j) {
      if (bb[j].is_zero()) continue;
      prod[i + j] += ab[i] * bb[j];
    }
  }
  // X^p = X + g
  for (std::size_t k = 2 * p - 2; k >= p; --k) {
    if (prod[k].is_zero()) continue;
    prod[k - p + 1] += prod[k];
    prod[k - p] += prod[k] * *lv->g;
  }
  TowerElement out(lv);
  const std::size_t w = lv->parent->size;
  for (std::size_t s = 0; s < p; ++s) {
    std::move(prod[s].coeffs_.begin(), prod[s].coeffs_.end(), out.coeffs_.begin() + static_cast<long>(s * w));
  }
  return out;
}

TowerElement TowerElement::operator-() const {
  TowerElement z = *this;
  for (auto& c : z.coeffs_) c = -c;
  return z;
}

TowerElement TowerElement::scaled(FqField::Code c) const {
  TowerElement z = *this;
  for (auto& x : z.coeffs_) x = x.scaled(c);
  return z;
}

TowerElement TowerElement::pow(std::uint64_t k) const { return generic_pow(TowerRing(level_), *this, k); }

bool operator==(const TowerElement& a, const TowerElement& b) {
  return a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
}

std::string TowerElement::to_string() const {
  std::string out;
  const unsigned p = level_->p;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (coeffs_[idx].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[idx].to_string() + ")";
    std::size_t rest = idx;
    for (std::size_t j = 1; j <= level(); ++j, rest /= p) {
      const std::size_t s = rest % p;
      if (s == 0) continue;
      out += "*X" + std::to_string(j);
      if (s > 1) out += "^" + std::to_string(s);
    }
  }
  return out.empty() ? "0" : out;
}

long long tower_valuation(const TowerElement& z) {
  if (z.is_zero()) fail(ErrorCode::ZeroElement, "valuation of zero");
  const TowerLevel& lv = *z.level_info();
  const auto gens = generator_valuations_at(lv);
  long long t_scale = 1;
  for (std::size_t j = 0; j < lv.level; ++j) t_scale *= lv.p;
  long long best = std::numeric_limits<long long>::max();
  int ties = 0;
  for (std::size_t idx = 0; idx < z.coeffs().size(); ++idx) {
    const auto& c = z.coeffs()[idx];
    if (c.is_zero()) continue;
    if (!c.is_exact()) fail(ErrorCode::PrecisionPresent, "tower coefficients must be exact");
    long long v = t_scale * c.valuation().value;
    std::size_t rest = idx;
    for (std::size_t j = 0; j < lv.level; ++j, rest /= lv.p) v += static_cast<long long>(rest % lv.p) * gens[j];
    if (v < best) {
      best = v;
      ties = 1;
    } else if (v == best) {
      ++ties;
    }
  }
  if (ties != 1) fail(ErrorCode::NonUniqueMinimum, "two monomials share the minimal valuation");
  return best;
}

TowerElement element_of_valuation(const LevelPtr& level, long long target) {
  if (level->level == 0) return TowerElement::from_base(level, LaurentPoly::monomial(level->field, 1, target));
  const auto p = static_cast<long long>(level->p);
  const long long gv = level->generator_valuation;
  const long long s = floor_mod(target * inverse_mod(gv, p), p);
  const long long rest = (target - s * gv) / p;
  const TowerElement lower = element_of_valuation(level->parent, rest).embed(level);
  return lower * TowerElement::generator(level).pow(static_cast<std::uint64_t>(s));
}

RhsReduction reduce_rhs(const TowerElement& g) {
  const LevelPtr& lv = g.level_info();
  const auto p = static_cast<long long>(lv->p);
  const auto& field = *lv->field;
  TowerElement h = g;
  TowerElement shift(lv);
  for (;;) {
    if (h.is_zero()) fail(ErrorCode::NotTotallyRamified, "right-hand side reduced to zero");
    const long long v = tower_valuation(h);
    if (v >= 0) fail(ErrorCode::NotTotallyRamified, "right-hand side reached valuation " + std::to_string(v));
    if (v % p != 0) break;
    const TowerElement theta = element_of_valuation(lv, v / p);
    const TowerElement theta_p = theta.pow(lv->p);
    bool found = false;
    for (FqField::Code u = 1; u < field.order() && !found; ++u) {
      const TowerElement w = theta.scaled(u);
      TowerElement cand = h - theta_p.scaled(field.pow(u, lv->p)) + w;
      if (cand.is_zero() || tower_valuation(cand) > v) {
        h = std::move(cand);
        shift += w;
        found = true;
      }
    }
    if (!found) fail(ErrorCode::NoCancellingCoefficient, "no unit cancels the leading term");
  }
  return {h, shift};
}

std::vector<long long> Tower::generator_valuations() const {
  std::vector<long long> out;
  for (std::size_t l = 1; l < levels.size(); ++l) out.push_back(levels[l]->generator_valuation);
  return out;
}

std::vector<TowerElement> Tower::x_prefix(std::size_t l) const {
  std::vector<TowerElement> out;
  for (std::size_t j = 0; j < l; ++j) out.push_back(x.at(j).embed(levels.at(l)));
  return out;
}

Tower build_tower(const CharacterVec& a, std::size_t depth) {
  if (depth < 1 || depth > kMaxTowerDepth) {
    fail(ErrorCode::UnsupportedDepth, "tower depth must be 1.." + std::to_string(kMaxTowerDepth));
  }
  if (depth > a.length()) fail(ErrorCode::UnsupportedDepth, "tower deeper than the Witt vector");
  if (!is_reduced(a)) fail(ErrorCode::NotReduced, "the oracle expects a reduced vector");
  if (a[0].is_zero() || a[0].valuation().value >= 0) {
    fail(ErrorCode::NotTotallyRamifiedProfile, "the oracle needs m_0 > 0");
  }

  Tower tw;
  tw.p = a.p();
  tw.depth = depth;
  tw.levels.push_back(TowerLevel::base(a.ring().field()));
  for (std::size_t l = 0; l < depth; ++l) {
    const LevelPtr& lv = tw.levels[l];
    TowerElement rhs(lv);
    if (l == 0) {
      rhs = TowerElement::from_base(lv, a[0]);
    } else {
      const TowerRing ring(lv);
      std::vector<TowerElement> comps;
      for (std::size_t j = 0; j <= l; ++j) comps.push_back(TowerElement::from_base(lv, a[j]));
      const WittVec<TowerRing> al(ring, tw.p, std::move(comps));
      rhs = subext_vector(al, tw.x_prefix(l), l)[l];
    }
    auto red = reduce_rhs(rhs);
    tw.raw_rhs.push_back(rhs);
    const LevelPtr next = make_level(lv, red.reduced);
    tw.levels.push_back(next);
    tw.shifts.push_back(red.shift);
    tw.x.push_back(TowerElement::generator(next) + red.shift.embed(next));
  }
  return tw;
}

TowerElement apply_galois(const Tower& tower, const TowerElement& z, GaloisElt sigma) {
  return GaloisAction(tower, sigma.k).apply(z);
}

TowerElement tower_uniformizer(const Tower& tower) {
  const LevelPtr& top = tower.top();
  const long long big = static_cast<long long>(top->size);
  const long long gv = top->generator_valuation;
  const long long alpha = inverse_mod(gv, big);
  const long long beta = (1 - alpha * gv) / big;
  const auto t_part = TowerElement::from_base(top, LaurentPoly::monomial(top->field, 1, beta));
  return TowerElement::generator(top).pow(static_cast<std::uint64_t>(alpha)) * t_part;
}

std::vector<BigInt> filtration_breaks(const Tower& tower) {
  const TowerElement pi = tower_uniformizer(tower);
  if (tower_valuation(pi) != 1) fail(ErrorCode::NotTotallyRamified, "uniformizer does not have valuation 1");
  const auto order = static_cast<std::uint64_t>(tower.top()->size);
  std::vector<BigInt> b;
  std::uint64_t k = 1;
  for (std::size_t i = 1; i <= tower.depth; ++i, k *= tower.p) {
    const long long first = tower_valuation(apply_galois(tower, pi, {k}) - pi) - 1;
    const long long second = tower_valuation(apply_galois(tower, pi, {order - k}) - pi) - 1;
    if (first != second) {
      fail(ErrorCode::IdentityViolation, "elements of equal order give different breaks");
    }
    if (!b.empty() && BigInt(static_cast<long>(first)) <= b.back()) {
      fail(ErrorCode::NonIncreasingBreaks, "filtration breaks are not increasing");
    }
    b.emplace_back(static_cast<long>(first));
  }
  return b;
}

TowerElement specialized_sum_in_tower(const Tower& tower, const LaurentPoly& a0, std::size_t j) {
  const LevelPtr& l1 = tower.levels.at(1);
  const TowerRing ring(l1);
  const std::vector<TowerElement> values{tower.x.at(0), TowerElement::from_base(l1, a0)};
  return eval_poly<TowerRing>(specialized_sum_poly(tower.p, j), values, ring);
}

Verdict compare(const CharacterVec& a, std::size_t depth) {
  const BreakProfile profile = full_profile(a);
  if (profile.r != 0 || profile.n != a.length()) {
    fail(ErrorCode::NotTotallyRamifiedProfile, "the oracle needs m_0 > 0");
  }
  const Tower tower = build_tower(a, depth);
  Verdict v;
  v.formula_lower.assign(profile.lower.begin(), profile.lower.begin() + static_cast<long>(depth));
  v.formula_upper.assign(profile.upper.begin(), profile.upper.begin() + static_cast<long>(depth));
  v.oracle_lower = filtration_breaks(tower);
  v.equal = v.formula_lower == v.oracle_lower;
  return v;
}

}  // namespace witt
