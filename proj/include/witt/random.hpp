#pragma once

#include <cstddef>
#include <random>

#include "witt/asw.hpp"

namespace witt {

// Uniform nonzero element of F_q.
FqField::Code random_unit(const FqField& field, std::mt19937_64& rng);

// Up to max_terms terms with exponents in [lo, hi] and random nonzero
// coefficients; may be zero.
LaurentPoly random_laurent(const FieldPtr& field, std::mt19937_64& rng, long long lo, long long hi,
                           std::size_t max_terms);

CharacterVec random_character(const FieldPtr& field, std::size_t n, std::mt19937_64& rng, long long lo,
                              long long hi, std::size_t max_terms = 3);

// a_i = u t^(-m_i) + (at most two terms with exponents in (-m_i, 1]), with
// 1 <= m_i <= max_m and p not dividing m_i. The result is strongly reduced.
CharacterVec random_ramified_character(const FieldPtr& field, std::size_t n, long long max_m,
                                       std::mt19937_64& rng);

}  // namespace witt
