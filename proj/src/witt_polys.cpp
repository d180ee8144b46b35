#include "witt/witt_polys.hpp"

#include <map>
#include <mutex>
#include <random>
#include <tuple>

#include "witt/error.hpp"
#include "witt/ring.hpp"

namespace witt {

const std::vector<IntPolynomial>& WittPolySet::family(WittOpKind kind) const {
  switch (kind) {
    case WittOpKind::Sum: return sum;
    case WittOpKind::Product: return product;
    case WittOpKind::Negation: return negation;
  }
  return sum;
}

IntPolynomial phantom_poly(unsigned p, std::size_t i, std::size_t num_vars, std::size_t offset) {
  if (offset + i >= num_vars) {
    fail(ErrorCode::ShapeMismatch, "phantom polynomial needs more variables");
  }
  IntPolynomial r(num_vars);
  for (std::size_t k = 0; k <= i; ++k) {
    Exponents e(num_vars, 0);
    e[offset + k] = static_cast<std::uint32_t>(ipow(p, static_cast<unsigned>(i - k)));
    r.add_term(e, big_pow(p, k));
  }
  return r;
}

namespace {

// sum_{k<i} p^k P_k^{p^{i-k}}: the lower-index part of phantom_i applied to
// the family members already solved.
IntPolynomial lower_phantom_part(unsigned p, const std::vector<IntPolynomial>& solved, std::size_t i,
                                 std::size_t num_vars) {
  IntPolynomial acc(num_vars);
  for (std::size_t k = 0; k < i; ++k) {
    acc += solved[k].pow(ipow(p, static_cast<unsigned>(i - k))) * big_pow(p, k);
  }
  return acc;
}

IntPolynomial phantom_of(unsigned p, const std::vector<IntPolynomial>& family, std::size_t i,
                         std::size_t num_vars) {
  return lower_phantom_part(p, family, i, num_vars) + family[i] * big_pow(p, i);
}

void validate_pn(unsigned p, std::size_t n) {
  if (!is_prime(p)) fail(ErrorCode::ValidationError, std::to_string(p) + " is not prime");
  if (n < 1) fail(ErrorCode::ValidationError, "Witt length must be at least 1");
}

}  // namespace

std::vector<IntPolynomial> gen_witt_family(unsigned p, std::size_t n, WittOpKind kind) {
  validate_pn(p, n);
  const std::size_t nv = 2 * n;
  std::vector<IntPolynomial> family;
  family.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const IntPolynomial phx = phantom_poly(p, i, nv, 0);
    IntPolynomial target(nv);
    switch (kind) {
      case WittOpKind::Sum: target = phx + phantom_poly(p, i, nv, n); break;
      case WittOpKind::Product: target = phx * phantom_poly(p, i, nv, n); break;
      case WittOpKind::Negation: target = -phx; break;
    }
    target -= lower_phantom_part(p, family, i, nv);
    family.push_back(target.divide_exact(big_pow(p, i)));
  }
  return family;
}

WittPolySet gen_witt_polys(unsigned p, std::size_t n) {
  WittPolySet set;
  set.p = p;
  set.n = n;
  set.sum = gen_witt_family(p, n, WittOpKind::Sum);
  set.product = gen_witt_family(p, n, WittOpKind::Product);
  set.negation = gen_witt_family(p, n, WittOpKind::Negation);
  return set;
}

namespace {

using CacheKey = std::tuple<unsigned, std::size_t, int, bool>;

struct WittCache {
  std::mutex mutex;
  std::map<CacheKey, std::shared_ptr<const std::vector<IntPolynomial>>> families;
  std::map<std::pair<unsigned, std::size_t>, std::shared_ptr<const WittPolySet>> sets;
};

WittCache& cache() {
  static WittCache c;
  return c;
}

std::shared_ptr<const std::vector<IntPolynomial>> family_locked(WittCache& c, unsigned p, std::size_t n,
                                                                WittOpKind kind, bool reduced) {
  const CacheKey key{p, n, static_cast<int>(kind), reduced};
  if (auto it = c.families.find(key); it != c.families.end()) return it->second;
  std::shared_ptr<const std::vector<IntPolynomial>> value;
  if (reduced) {
    auto full = family_locked(c, p, n, kind, false);
    std::vector<IntPolynomial> red;
    red.reserve(full->size());
    for (const auto& poly : *full) red.push_back(poly.reduce_mod(p));
    value = std::make_shared<const std::vector<IntPolynomial>>(std::move(red));
  } else {
    value = std::make_shared<const std::vector<IntPolynomial>>(gen_witt_family(p, n, kind));
  }
  c.families.emplace(key, value);
  return value;
}

}  // namespace

std::shared_ptr<const std::vector<IntPolynomial>> witt_family(unsigned p, std::size_t n, WittOpKind kind,
                                                              bool reduced_mod_p) {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  return family_locked(c, p, n, kind, reduced_mod_p);
}

std::shared_ptr<const WittPolySet> cached_witt_polys(unsigned p, std::size_t n) {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  if (auto it = c.sets.find({p, n}); it != c.sets.end()) return it->second;
  auto set = std::make_shared<WittPolySet>();
  set->p = p;
  set->n = n;
  set->sum = *family_locked(c, p, n, WittOpKind::Sum, false);
  set->product = *family_locked(c, p, n, WittOpKind::Product, false);
  set->negation = *family_locked(c, p, n, WittOpKind::Negation, false);
  std::shared_ptr<const WittPolySet> frozen = std::move(set);
  c.sets.emplace(std::make_pair(p, n), frozen);
  return frozen;
}

void clear_witt_cache() {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  c.families.clear();
  c.sets.clear();
}

namespace {

std::string describe_assignment(const std::vector<BigInt>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += values[i].get_str();
  }
  return s + "]";
}

}  // namespace

IdentityReport check_phantom_identities(const WittPolySet& set, std::size_t trials, std::uint64_t seed) {
  const unsigned p = set.p;
  const std::size_t n = set.n;
  const std::size_t nv = 2 * n;
  IdentityReport report;

  for (std::size_t i = 0; i < n; ++i) {
    const IntPolynomial phx = phantom_poly(p, i, nv, 0);
    const IntPolynomial phy = phantom_poly(p, i, nv, n);
    if (!(phantom_of(p, set.sum, i, nv) == phx + phy)) {
      fail(ErrorCode::IdentityViolation, "symbolic phantom sum identity fails at index " + std::to_string(i));
    }
    if (!(phantom_of(p, set.product, i, nv) == phx * phy)) {
      fail(ErrorCode::IdentityViolation,
           "symbolic phantom product identity fails at index " + std::to_string(i));
    }
    if (!(phantom_of(p, set.negation, i, nv) == -phx)) {
      fail(ErrorCode::IdentityViolation,
           "symbolic phantom negation identity fails at index " + std::to_string(i));
    }
    report.checks += 3;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  const IntegerRing zz;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<BigInt> values(nv);
    for (auto& v : values) v = dist(rng);
    std::vector<BigInt> s(n), m(n), neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = eval_poly(set.sum[i], values, zz);
      m[i] = eval_poly(set.product[i], values, zz);
      neg[i] = eval_poly(set.negation[i], values, zz);
    }
    std::vector<BigInt> xs(values.begin(), values.begin() + static_cast<long>(n));
    std::vector<BigInt> ys(values.begin() + static_cast<long>(n), values.end());
    for (std::size_t i = 0; i < n; ++i) {
      const IntPolynomial ph = phantom_poly(p, i, n, 0);
      const BigInt px = eval_poly(ph, xs, zz);
      const BigInt py = eval_poly(ph, ys, zz);
      if (eval_poly(ph, s, zz) != px + py || eval_poly(ph, m, zz) != px * py ||
          eval_poly(ph, neg, zz) != -px) {
        fail(ErrorCode::IdentityViolation,
             "phantom identity fails at index " + std::to_string(i) + " for assignment " +
                 describe_assignment(values));
      }
      report.checks += 3;
    }
  }
  return report;
}

IdentityReport check_shift_identity(const std::vector<IntPolynomial>& sum) {
  const std::size_t n = sum.size();
  const std::size_t nv = 2 * n;
  const IntPolyRing ring(nv);
  IdentityReport report;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    // X_0 -> 0, X_{k+1} -> X_k, likewise for Y.
    std::vector<IntPolynomial> subst(nv, ring.zero());
    for (std::size_t k = 0; k + 1 < n; ++k) {
      subst[k + 1] = ring.variable(k);
      subst[n + k + 1] = ring.variable(n + k);
    }
    const IntPolynomial shifted = eval_poly(sum[j + 1], subst, ring);
    if (!(shifted == sum[j])) {
      fail(ErrorCode::IdentityViolation, "shift identity fails for S_" + std::to_string(j));
    }
    ++report.checks;
  }
  return report;
}

IntPolynomial specialized_sum_by_substitution(const std::vector<IntPolynomial>& sum, std::size_t n,
                                              std::size_t j) {
  const IntPolyRing ring(2);
  std::vector<IntPolynomial> subst(2 * n, ring.zero());
  subst[0] = ring.variable(0);
  subst[n] = ring.variable(1);
  return eval_poly(sum.at(j), subst, ring);
}

IntPolynomial specialized_sum_poly(unsigned p, std::size_t j) {
  validate_pn(p, j + 1);
  std::vector<IntPolynomial> f;
  for (std::size_t i = 0; i <= j; ++i) {
    const auto deg = static_cast<std::uint32_t>(ipow(p, static_cast<unsigned>(i)));
    IntPolynomial target = IntPolynomial::monomial({deg, 0}, 1) + IntPolynomial::monomial({0, deg}, 1);
    target -= lower_phantom_part(p, f, i, 2);
    f.push_back(target.divide_exact(big_pow(p, i)));
  }
  return f.back();
}

}  // namespace witt
