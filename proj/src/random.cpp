#include "witt/random.hpp"

#include <set>

namespace witt {

FqField::Code random_unit(const FqField& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<FqField::Code> dist(1, field.order() - 1);
  return dist(rng);
}

LaurentPoly random_laurent(const FieldPtr& field, std::mt19937_64& rng, long long lo, long long hi,
                           std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::uniform_int_distribution<long long> exponent(lo, hi);
  std::vector<LaurentPoly::Term> terms;
  const std::size_t k = count(rng);
  for (std::size_t j = 0; j < k; ++j) terms.emplace_back(exponent(rng), random_unit(*field, rng));
  return LaurentPoly::from_terms(field, std::move(terms));
}

CharacterVec random_character(const FieldPtr& field, std::size_t n, std::mt19937_64& rng, long long lo,
                              long long hi, std::size_t max_terms) {
  std::vector<LaurentPoly> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) comps.push_back(random_laurent(field, rng, lo, hi, max_terms));
  return make_character(field, std::move(comps));
}

CharacterVec random_ramified_character(const FieldPtr& field, std::size_t n, long long max_m,
                                       std::mt19937_64& rng) {
  const unsigned p = field->p();
  std::vector<long long> allowed;
  for (long long m = 1; m <= max_m; ++m) {
    if (m % p != 0) allowed.push_back(m);
  }
  if (allowed.empty()) fail(ErrorCode::ValidationError, "no admissible m below the bound");
  std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
  std::uniform_int_distribution<int> extra(0, 2);
  std::vector<LaurentPoly> comps;
  for (std::size_t i = 0; i < n; ++i) {
    const long long m = allowed[pick(rng)];
    std::vector<LaurentPoly::Term> terms{{-m, random_unit(*field, rng)}};
    std::uniform_int_distribution<long long> ex(-m + 1, 1);
    std::set<long long> used{-m};
    const int k = extra(rng);
    for (int j = 0; j < k; ++j) {
      const long long e = ex(rng);
      if (!used.insert(e).second) continue;
      terms.emplace_back(e, random_unit(*field, rng));
    }
    comps.push_back(LaurentPoly::from_terms(field, std::move(terms)));
  }
  return make_character(field, std::move(comps));
}

}  // namespace witt
