#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "witt/int_polynomial.hpp"

namespace witt {

enum class WittOpKind { Sum, Product, Negation };

// The universal Witt polynomials of length n at the prime p. Every
// polynomial lives in the 2n variables X_0..X_{n-1}, Y_0..Y_{n-1}; the
// negation polynomials only involve the X block.
struct WittPolySet {
  unsigned p = 0;
  std::size_t n = 0;
  std::vector<IntPolynomial> sum;
  std::vector<IntPolynomial> product;
  std::vector<IntPolynomial> negation;

  const std::vector<IntPolynomial>& family(WittOpKind kind) const;
  friend bool operator==(const WittPolySet&, const WittPolySet&) = default;
};

// X_offset^{p^i} + p X_{offset+1}^{p^{i-1}} + ... + p^i X_{offset+i}, in num_vars
// variables.
IntPolynomial phantom_poly(unsigned p, std::size_t i, std::size_t num_vars, std::size_t offset = 0);
inline IntPolynomial phantom_poly(unsigned p, std::size_t i) { return phantom_poly(p, i, i + 1); }

// Solves the phantom recursion for one family. Division by p^i is checked
// for exactness (InexactDivision otherwise).
std::vector<IntPolynomial> gen_witt_family(unsigned p, std::size_t n, WittOpKind kind);
WittPolySet gen_witt_polys(unsigned p, std::size_t n);

// Memoized family lookup keyed by (p, n, kind, reduced). With reduced set,
// coefficients are residues mod p. Safe to call from multiple threads.
std::shared_ptr<const std::vector<IntPolynomial>> witt_family(unsigned p, std::size_t n,
                                                              WittOpKind kind, bool reduced_mod_p);
std::shared_ptr<const WittPolySet> cached_witt_polys(unsigned p, std::size_t n);
void clear_witt_cache();

struct IdentityReport {
  std::size_t checks = 0;
};

// Symbolic check of the three phantom identities on the generated set, then
// `trials` random small-integer substitutions over Z. Throws
// IdentityViolation with the failing assignment.
IdentityReport check_phantom_identities(const WittPolySet& set, std::size_t trials, std::uint64_t seed);

// S_j(X_0..X_j, Y_0..Y_j) == S_{j+1}(0, X_0..X_j, 0, Y_0..Y_j) for j <= n-2,
// by substitution into a generated sum family of length n.
IdentityReport check_shift_identity(const std::vector<IntPolynomial>& sum);

// f_j(X_0, Y_0) = S_j(X_0, 0, ..., 0, Y_0, 0, ..., 0) as a 2-variable
// polynomial, by substitution into a generated sum family of length > j.
IntPolynomial specialized_sum_by_substitution(const std::vector<IntPolynomial>& sum, std::size_t n,
                                              std::size_t j);
// The same polynomial solved directly from the 2-variable phantom recursion
// p^j f_j = X_0^{p^j} + Y_0^{p^j} - sum_{k<j} p^k f_k^{p^{j-k}}.
IntPolynomial specialized_sum_poly(unsigned p, std::size_t j);

}  // namespace witt
