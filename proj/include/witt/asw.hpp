#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "witt/laurent.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

// A Witt vector over F_q((t)), standing for the character it defines through
// F(x) = x + a.
using CharacterVec = WittVec<LaurentRing>;

CharacterVec make_character(const FieldPtr& field, std::vector<LaurentPoly> components);

// Every component has v >= 0 or v prime to p. PrecisionPresent on inexact data.
bool is_reduced(const CharacterVec& a);
// Every component is zero or has valuation prime to p. With allow_precision,
// a component that vanishes modulo its precision counts as zero.
bool is_strongly_reduced(const CharacterVec& a, bool allow_precision = false);

// a + F(c) - c
CharacterVec artin_schreier_twist(const CharacterVec& a, const CharacterVec& c);

struct ReductionCertificate {
  CharacterVec original;
  CharacterVec reduced;
  CharacterVec witness;
  // reduced == original + F(witness) - witness, recomputed exactly.
  bool verified = false;
};

// Removes negative valuations divisible by p slot by slot, lowest index
// first. Throws CertificateFailure if the final identity does not recompute.
ReductionCertificate reduce(const CharacterVec& a);

struct StrongReduction {
  FieldPtr field;           // F_q or an extension of degree a power of p
  CharacterVec original;    // input, embedded into `field`
  CharacterVec result;
  CharacterVec witness;
  long long precision = 0;  // requested bound N
  bool verified = false;    // certificate holds modulo precision and result is strongly reduced
};

// Clears every component of nonnegative valuation modulo t^N, extending the
// residue field when a constant term is not in the image of c -> c^p - c.
StrongReduction strongly_reduce(const CharacterVec& a, std::optional<long long> precision);

// Whether a0 (v >= 0) lies in {c^p - c : c in K}; decided by the trace of
// its constant term.
bool wp_member_unit(const LaurentPoly& a0);

// Prepends i zero components.
CharacterVec shift_char(const CharacterVec& c, std::size_t i);

LaurentPoly embed_laurent(const LaurentPoly& a, const FqEmbedding& emb);
CharacterVec embed_character(const CharacterVec& a, const FqEmbedding& emb);

// lambda_i(mu_i(x) + a), where x_prefix holds x_0..x_{i-1} in the ring of a.
// For i = n the result is the zero vector.
template <CoefficientRing R>
WittVec<R> subext_vector(const WittVec<R>& a, const std::vector<typename R::Element>& x_prefix, std::size_t i) {
  const std::size_t n = a.length();
  if (i > n || x_prefix.size() < i) fail(ErrorCode::ShapeMismatch, "prefix shorter than the cut");
  if (i == n) return WittVec<R>::zero(a.ring(), a.p(), n);
  auto comps = std::vector<typename R::Element>(n, a.ring().zero());
  for (std::size_t k = 0; k < i; ++k) comps[k] = x_prefix[k];
  const auto sum = wadd(WittVec<R>(a.ring(), a.p(), std::move(comps)), a);
  if (i == 0) return sum;
  return lambda(sum, i);
}

}  // namespace witt
