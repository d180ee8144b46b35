#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/ring.hpp"
#include "witt/witt_polys.hpp"

namespace witt {

// Witt vector of length n >= 1 at the prime p over a coefficient ring.
template <CoefficientRing R>
class WittVec {
 public:
  using Ring = R;
  using Element = typename R::Element;

  WittVec(R ring, unsigned p, std::vector<Element> components)
      : ring_(std::move(ring)), p_(p), comps_(std::move(components)) {
    if (comps_.empty()) fail(ErrorCode::ShapeMismatch, "Witt vectors have length at least 1");
  }

  static WittVec zero(const R& ring, unsigned p, std::size_t n) {
    return WittVec(ring, p, std::vector<Element>(n, ring.zero()));
  }
  static WittVec one(const R& ring, unsigned p, std::size_t n) {
    auto v = std::vector<Element>(n, ring.zero());
    v.at(0) = ring.one();
    return WittVec(ring, p, std::move(v));
  }

  const R& ring() const { return ring_; }
  unsigned p() const { return p_; }
  std::size_t length() const { return comps_.size(); }
  const Element& operator[](std::size_t i) const { return comps_.at(i); }
  const std::vector<Element>& components() const { return comps_; }

  WittVec with_component(std::size_t i, Element value) const {
    WittVec r = *this;
    r.comps_.at(i) = std::move(value);
    return r;
  }

  bool is_zero() const {
    for (const auto& c : comps_) {
      if (!ring_.is_zero(c)) return false;
    }
    return true;
  }

  friend bool operator==(const WittVec& a, const WittVec& b) {
    if (a.p_ != b.p_ || a.comps_.size() != b.comps_.size() || !a.ring_.same_ring(b.ring_)) return false;
    for (std::size_t i = 0; i < a.comps_.size(); ++i) {
      if (!a.ring_.equal(a.comps_[i], b.comps_[i])) return false;
    }
    return true;
  }

 private:
  R ring_;
  unsigned p_;
  std::vector<Element> comps_;
};

template <CoefficientRing R>
std::string format_witt(const WittVec<R>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) s += ", ";
    if constexpr (requires { a.ring().format(a[i]); }) {
      s += a.ring().format(a[i]);
    } else {
      s += "?";
    }
  }
  return s + ")";
}

namespace detail {

template <CoefficientRing R>
void require_same_shape(const WittVec<R>& a, const WittVec<R>& b) {
  if (a.p() != b.p() || a.length() != b.length()) {
    fail(ErrorCode::ShapeMismatch, "Witt vectors differ in prime or length");
  }
  if (!a.ring().same_ring(b.ring())) fail(ErrorCode::ShapeMismatch, "Witt vectors over different rings");
}

// The family matching the ring: residues mod p in characteristic p, the
// integer polynomials otherwise.
template <CoefficientRing R>
std::shared_ptr<const std::vector<IntPolynomial>> family_for(const R& ring, unsigned p, std::size_t n,
                                                             WittOpKind kind) {
  return witt_family(p, n, kind, ring.characteristic() == p);
}

template <CoefficientRing R>
WittVec<R> apply_binary(const WittVec<R>& a, const WittVec<R>& b, WittOpKind kind) {
  require_same_shape(a, b);
  const std::size_t n = a.length();
  const auto family = family_for(a.ring(), a.p(), n, kind);
  std::vector<typename R::Element> values;
  values.reserve(2 * n);
  values.insert(values.end(), a.components().begin(), a.components().end());
  values.insert(values.end(), b.components().begin(), b.components().end());
  return WittVec<R>(a.ring(), a.p(), eval_polys<R>(*family, values, a.ring()));
}

template <CoefficientRing R>
void require_characteristic_p(const WittVec<R>& a) {
  if (a.ring().characteristic() != a.p()) {
    fail(ErrorCode::ShapeMismatch, "operation needs a coefficient ring of characteristic p");
  }
}

}  // namespace detail

template <CoefficientRing R>
WittVec<R> wadd(const WittVec<R>& a, const WittVec<R>& b) {
  return detail::apply_binary(a, b, WittOpKind::Sum);
}

template <CoefficientRing R>
WittVec<R> wmul(const WittVec<R>& a, const WittVec<R>& b) {
  return detail::apply_binary(a, b, WittOpKind::Product);
}

template <CoefficientRing R>
WittVec<R> wneg(const WittVec<R>& a) {
  const std::size_t n = a.length();
  const auto family = detail::family_for(a.ring(), a.p(), n, WittOpKind::Negation);
  std::vector<typename R::Element> values(a.components());
  values.resize(2 * n, a.ring().zero());
  return WittVec<R>(a.ring(), a.p(), eval_polys<R>(*family, values, a.ring()));
}

template <CoefficientRing R>
WittVec<R> wsub(const WittVec<R>& a, const WittVec<R>& b) {
  return wadd(a, wneg(b));
}

// Componentwise p-th power.
template <CoefficientRing R>
WittVec<R> frobenius(const WittVec<R>& a) {
  detail::require_characteristic_p(a);
  std::vector<typename R::Element> out;
  out.reserve(a.length());
  for (const auto& c : a.components()) out.push_back(a.ring().pow(c, a.p()));
  return WittVec<R>(a.ring(), a.p(), std::move(out));
}

// p * a = (0, a_0^p, ..., a_{n-2}^p) in characteristic p.
template <CoefficientRing R>
WittVec<R> times_p(const WittVec<R>& a) {
  detail::require_characteristic_p(a);
  std::vector<typename R::Element> out;
  out.reserve(a.length());
  out.push_back(a.ring().zero());
  for (std::size_t i = 0; i + 1 < a.length(); ++i) out.push_back(a.ring().pow(a[i], a.p()));
  return WittVec<R>(a.ring(), a.p(), std::move(out));
}

// k-fold Witt sum of a (k >= 0).
template <CoefficientRing R>
WittVec<R> scalar_multiple(std::uint64_t k, const WittVec<R>& a) {
  WittVec<R> acc = WittVec<R>::zero(a.ring(), a.p(), a.length());
  WittVec<R> base = a;
  while (k > 0) {
    if (k & 1) acc = wadd(acc, base);
    k >>= 1;
    if (k > 0) base = wadd(base, base);
  }
  return acc;
}

namespace detail {

template <CoefficientRing R>
void require_cut(const WittVec<R>& a, std::size_t i) {
  if (i < 1 || i + 1 > a.length()) {
    fail(ErrorCode::CutOutOfRange,
         "cut " + std::to_string(i) + " outside 1.." + std::to_string(a.length() - 1));
  }
}

}  // namespace detail

// (a_0, ..., a_{i-1}, 0, ..., 0)
template <CoefficientRing R>
WittVec<R> mu(const WittVec<R>& a, std::size_t i) {
  detail::require_cut(a, i);
  auto comps = a.components();
  for (std::size_t k = i; k < comps.size(); ++k) comps[k] = a.ring().zero();
  return WittVec<R>(a.ring(), a.p(), std::move(comps));
}

// (0, ..., 0, a_i, ..., a_{n-1})
template <CoefficientRing R>
WittVec<R> lambda(const WittVec<R>& a, std::size_t i) {
  detail::require_cut(a, i);
  auto comps = a.components();
  for (std::size_t k = 0; k < i; ++k) comps[k] = a.ring().zero();
  return WittVec<R>(a.ring(), a.p(), std::move(comps));
}

// First d components as a vector of length d.
template <CoefficientRing R>
WittVec<R> truncate(const WittVec<R>& a, std::size_t d) {
  if (d < 1 || d > a.length()) fail(ErrorCode::CutOutOfRange, "truncation length out of range");
  std::vector<typename R::Element> comps(a.components().begin(), a.components().begin() + static_cast<long>(d));
  return WittVec<R>(a.ring(), a.p(), std::move(comps));
}

struct StructuralReport {
  std::size_t checks = 0;
};

// Random-sample check of the structural identities over a test ring:
// the symbolic shift identity of the sum polynomials, mu_i(a+b) =
// mu_i(mu_i(a)+mu_i(b)), mu_i(a)+lambda_i(a) = a, and the free-variable
// identity a + m - mu_i(mu_i(a) + m) = lambda_i(a + m) for m = mu_i(m).
template <CoefficientRing R>
StructuralReport check_structural_identities(
    unsigned p, std::size_t n, std::size_t samples, const R& ring,
    const std::function<typename R::Element(std::mt19937_64&)>& random_element, std::uint64_t seed) {
  StructuralReport report;
  if (n == 1) return report;
  report.checks += check_shift_identity(*witt_family(p, n, WittOpKind::Sum, false)).checks;

  std::mt19937_64 rng(seed);
  auto random_vec = [&] {
    std::vector<typename R::Element> comps;
    comps.reserve(n);
    for (std::size_t k = 0; k < n; ++k) comps.push_back(random_element(rng));
    return WittVec<R>(ring, p, std::move(comps));
  };
  auto violation = [&](const std::string& what, const WittVec<R>& a, const WittVec<R>& b, std::size_t i) {
    fail(ErrorCode::IdentityViolation, what + " fails at cut " + std::to_string(i) + " with a = " +
                                           format_witt(a) + ", b = " + format_witt(b));
  };

  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = random_vec();
    const auto b = random_vec();
    const auto a_plus_b = wadd(a, b);
    for (std::size_t i = 1; i < n; ++i) {
      if (!(mu(a_plus_b, i) == mu(wadd(mu(a, i), mu(b, i)), i))) violation("mu additivity", a, b, i);
      if (!(wadd(mu(a, i), lambda(a, i)) == a)) violation("mu/lambda splitting", a, b, i);
      const auto m = mu(b, i);
      const auto a_plus_m = wadd(a, m);
      const auto lhs = wsub(a_plus_m, mu(wadd(mu(a, i), m), i));
      if (!(lhs == lambda(a_plus_m, i))) violation("free-variable subextension identity", a, m, i);
      report.checks += 3;
    }
  }
  return report;
}

}  // namespace witt
