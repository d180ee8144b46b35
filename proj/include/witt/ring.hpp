#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "witt/bigint.hpp"
#include "witt/error.hpp"
#include "witt/int_polynomial.hpp"

namespace witt {

// The surface every Witt-vector operation needs from a coefficient ring.
// A ring object is a small descriptor (it may own a field pointer); elements
// are plain values.
template <class R>
concept CoefficientRing =
    std::copy_constructible<R> &&
    requires(const R& r, const typename R::Element& a, const typename R::Element& b,
             const BigInt& z, std::uint64_t k) {
      { r.zero() } -> std::same_as<typename R::Element>;
      { r.one() } -> std::same_as<typename R::Element>;
      { r.from_integer(z) } -> std::same_as<typename R::Element>;
      { r.add(a, b) } -> std::same_as<typename R::Element>;
      { r.sub(a, b) } -> std::same_as<typename R::Element>;
      { r.mul(a, b) } -> std::same_as<typename R::Element>;
      { r.neg(a) } -> std::same_as<typename R::Element>;
      { r.pow(a, k) } -> std::same_as<typename R::Element>;
      { r.is_zero(a) } -> std::convertible_to<bool>;
      { r.equal(a, b) } -> std::convertible_to<bool>;
      { r.characteristic() } -> std::convertible_to<unsigned long>;
      { r.same_ring(r) } -> std::convertible_to<bool>;
    };

// Square-and-multiply power usable by ring implementations.
template <class R>
typename R::Element generic_pow(const R& ring, typename R::Element base, std::uint64_t k) {
  auto result = ring.one();
  while (k > 0) {
    if (k & 1) result = ring.mul(result, base);
    k >>= 1;
    if (k > 0) base = ring.mul(base, base);
  }
  return result;
}

class IntegerRing {
 public:
  using Element = BigInt;
  BigInt zero() const { return 0; }
  BigInt one() const { return 1; }
  BigInt from_integer(const BigInt& z) const { return z; }
  BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
  BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
  BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
  BigInt neg(const BigInt& a) const { return -a; }
  BigInt pow(const BigInt& a, std::uint64_t k) const {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
  }
  bool is_zero(const BigInt& a) const { return a == 0; }
  bool equal(const BigInt& a, const BigInt& b) const { return a == b; }
  unsigned long characteristic() const { return 0; }
  bool same_ring(const IntegerRing&) const { return true; }
  std::string format(const BigInt& a) const { return a.get_str(); }
};

// Polynomials in a fixed number of variables over Z, or over Z/m when a
// modulus is given (coefficients kept in [0, m)).
class IntPolyRing {
 public:
  using Element = IntPolynomial;
  explicit IntPolyRing(std::size_t num_vars, unsigned long modulus = 0)
      : num_vars_(num_vars), modulus_(modulus) {}

  std::size_t num_vars() const { return num_vars_; }
  IntPolynomial zero() const { return IntPolynomial(num_vars_); }
  IntPolynomial one() const { return IntPolynomial::constant(num_vars_, 1); }
  IntPolynomial variable(std::size_t i) const { return IntPolynomial::variable(num_vars_, i); }
  IntPolynomial from_integer(const BigInt& z) const {
    return normalize(IntPolynomial::constant(num_vars_, z));
  }
  IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) const { return normalize(a + b); }
  IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b) const { return normalize(a - b); }
  IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) const { return normalize(a * b); }
  IntPolynomial neg(const IntPolynomial& a) const { return normalize(-a); }
  IntPolynomial pow(const IntPolynomial& a, std::uint64_t k) const { return generic_pow(*this, a, k); }
  bool is_zero(const IntPolynomial& a) const { return a.is_zero(); }
  bool equal(const IntPolynomial& a, const IntPolynomial& b) const { return a == b; }
  unsigned long characteristic() const { return modulus_; }
  bool same_ring(const IntPolyRing& o) const {
    return num_vars_ == o.num_vars_ && modulus_ == o.modulus_;
  }
  std::string format(const IntPolynomial& a) const { return a.to_string({}); }

 private:
  IntPolynomial normalize(IntPolynomial a) const {
    return modulus_ == 0 ? a : a.reduce_mod(modulus_);
  }

  std::size_t num_vars_;
  unsigned long modulus_;
};

// Evaluates an integer polynomial at ring elements. Integer coefficients
// enter through the ring's integer image, so reduction to the ring's
// characteristic happens here.
template <CoefficientRing R>
typename R::Element eval_poly(const IntPolynomial& poly,
                              std::span<const std::optional<typename R::Element>> assignment,
                              const R& ring) {
  using E = typename R::Element;
  const std::size_t nv = poly.num_vars();
  if (assignment.size() < nv) {
    fail(ErrorCode::ShapeMismatch, "assignment shorter than polynomial arity");
  }
  const Exponents maxe = poly.max_exponents();
  std::vector<std::vector<E>> powers(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (maxe[v] == 0) continue;
    if (!assignment[v]) {
      fail(ErrorCode::UnassignedVariable, "variable " + std::to_string(v) + " has no value");
    }
    auto& pw = powers[v];
    pw.reserve(maxe[v] + 1);
    pw.push_back(ring.one());
    pw.push_back(*assignment[v]);
    for (std::uint32_t k = 2; k <= maxe[v]; ++k) pw.push_back(ring.mul(pw.back(), *assignment[v]));
  }

  E acc = ring.zero();
  for (const auto& [e, c] : poly.terms()) {
    E coeff = ring.from_integer(c);
    if (ring.is_zero(coeff)) continue;
    std::optional<E> mono;
    for (std::size_t v = 0; v < nv; ++v) {
      if (e[v] == 0) continue;
      if (!mono) {
        mono = powers[v][e[v]];
      } else {
        mono = ring.mul(*mono, powers[v][e[v]]);
      }
      if (ring.is_zero(*mono)) break;
    }
    if (!mono) {
      acc = ring.add(acc, coeff);
    } else if (!ring.is_zero(*mono)) {
      acc = ring.add(acc, c == 1 ? *mono : ring.mul(coeff, *mono));
    }
  }
  return acc;
}

// Evaluates several polynomials of one arity at the same point, sharing the
// table of variable powers.
template <CoefficientRing R>
std::vector<typename R::Element> eval_polys(std::span<const IntPolynomial> polys,
                                            const std::vector<typename R::Element>& values, const R& ring) {
  using E = typename R::Element;
  std::vector<E> out;
  out.reserve(polys.size());
  if (polys.empty()) return out;
  const std::size_t nv = polys.front().num_vars();
  if (values.size() < nv) fail(ErrorCode::ShapeMismatch, "assignment shorter than polynomial arity");
  Exponents maxe(nv, 0);
  for (const auto& poly : polys) {
    const Exponents m = poly.max_exponents();
    for (std::size_t v = 0; v < nv; ++v) maxe[v] = std::max(maxe[v], m[v]);
  }
  std::vector<std::vector<E>> powers(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (maxe[v] == 0) continue;
    auto& pw = powers[v];
    pw.reserve(maxe[v] + 1);
    pw.push_back(ring.one());
    pw.push_back(values[v]);
    for (std::uint32_t k = 2; k <= maxe[v]; ++k) pw.push_back(ring.mul(pw.back(), values[v]));
  }
  for (const auto& poly : polys) {
    E acc = ring.zero();
    for (const auto& [e, c] : poly.terms()) {
      E coeff = ring.from_integer(c);
      if (ring.is_zero(coeff)) continue;
      std::optional<E> mono;
      for (std::size_t v = 0; v < nv; ++v) {
        if (e[v] == 0) continue;
        mono = mono ? ring.mul(*mono, powers[v][e[v]]) : powers[v][e[v]];
        if (ring.is_zero(*mono)) break;
      }
      if (!mono) {
        acc = ring.add(acc, coeff);
      } else if (!ring.is_zero(*mono)) {
        acc = ring.add(acc, c == 1 ? *mono : ring.mul(coeff, *mono));
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

template <CoefficientRing R>
typename R::Element eval_poly(const IntPolynomial& poly, const std::vector<typename R::Element>& values,
                              const R& ring) {
  std::vector<std::optional<typename R::Element>> assignment(values.begin(), values.end());
  return eval_poly<R>(poly, std::span<const std::optional<typename R::Element>>(assignment), ring);
}

}  // namespace witt
