#include <doctest.h>

#include <random>

#include "witt/tower.hpp"

using namespace witt;

namespace {

LaurentPoly mono(const FieldPtr& f, long long e, FqField::Code c = 1) { return LaurentPoly::monomial(f, c, e); }

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

TowerElement random_element(const LevelPtr& lv, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ex(-4, 4), len(0, 2);
  std::uniform_int_distribution<FqField::Code> co(1, lv->field->order() - 1);
  std::vector<LaurentPoly> coeffs;
  for (std::size_t i = 0; i < lv->size; ++i) {
    std::vector<LaurentPoly::Term> t;
    const int k = len(rng);
    for (int j = 0; j < k; ++j) t.emplace_back(ex(rng), co(rng));
    coeffs.push_back(LaurentPoly::from_terms(lv->field, std::move(t)));
  }
  return TowerElement(lv, std::move(coeffs));
}

}  // namespace

TEST_CASE("tower for (t^-1, t^-3) at p = 2") {
  const auto F2 = FqField::prime(2);
  const auto tw = build_tower(make_character(F2, {mono(F2, -1), mono(F2, -3)}), 2);
  CHECK(tw.generator_valuations() == std::vector<long long>{-1, -5});
  const auto& l1 = tw.levels[1];
  const auto x0 = TowerElement::generator(l1);
  // Raw level-2 right-hand side t^-3 + x_0 t^-1 has valuation -6.
  const auto expected_raw = TowerElement::from_base(l1, mono(F2, -3)) + x0 * TowerElement::from_base(l1, mono(F2, -1));
  CHECK(tw.raw_rhs[1] == expected_raw);
  CHECK(tower_valuation(tw.raw_rhs[1]) == -6);
  CHECK(*tw.levels[2]->g == x0 * TowerElement::from_base(l1, mono(F2, -2)));
  CHECK(tw.shifts[1] == x0 * TowerElement::from_base(l1, mono(F2, -1)));
  CHECK(filtration_breaks(tw) == big({1, 5}));
  CHECK(tower_valuation(TowerElement::from_base(tw.top(), mono(F2, 1))) == 4);
}

TEST_CASE("depth-one towers") {
  const auto F2 = FqField::prime(2);
  const auto tw = build_tower(make_character(F2, {mono(F2, -3)}), 1);
  CHECK(tw.generator_valuations() == std::vector<long long>{-3});
  const auto& l1 = tw.top();
  CHECK(tower_valuation(TowerElement::generator(l1) * TowerElement::from_base(l1, mono(F2, 2))) == 1);
  CHECK(filtration_breaks(tw) == big({3}));
  // sigma = 1 moves x_0 to x_0 + 1; sigma = 0 is the identity.
  const auto x0 = TowerElement::generator(l1);
  CHECK(apply_galois(tw, x0, {1}) == x0 + TowerElement::constant(l1, 1));
  CHECK(apply_galois(tw, x0, {0}) == x0);

  for (unsigned p : {2u, 3u, 5u}) {
    const auto F = FqField::prime(p);
    for (long long m = 1; m <= 12; ++m) {
      if (m % p == 0) continue;
      const auto t = build_tower(make_character(F, {mono(F, -m) + mono(F, 1)}), 1);
      CHECK(filtration_breaks(t) == std::vector<BigInt>{BigInt(static_cast<long>(m))});
    }
  }
}

TEST_CASE("Galois action at depth two") {
  const auto F2 = FqField::prime(2);
  const auto tw = build_tower(make_character(F2, {mono(F2, -1), mono(F2, -3)}), 2);
  const auto& top = tw.top();
  const auto x0 = tw.x[0].embed(top);
  const auto x1 = tw.x[1];
  // sigma = 2 adds (0, 1): x_0 fixed, x_1 -> x_1 + 1.
  CHECK(apply_galois(tw, x0, {2}) == x0);
  CHECK(apply_galois(tw, x1, {2}) == x1 + TowerElement::constant(top, 1));
  CHECK(apply_galois(tw, x0, {1}) == x0 + TowerElement::constant(top, 1));

  // Exact order 4 on the top generator.
  const auto X2 = TowerElement::generator(top);
  auto z = X2;
  for (int i = 0; i < 4; ++i) {
    if (i > 0) CHECK_FALSE(z == X2);
    z = apply_galois(tw, z, {1});
  }
  CHECK(z == X2);
}

TEST_CASE("tower valuation, homomorphism and stability properties") {
  std::mt19937_64 rng(51);
  for (auto [p, e] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 1u}}) {
    const auto F = FqField::create(p, e);
    const auto a = make_character(F, {mono(F, -1, 1), mono(F, p == 2 ? -3 : -2, 1)});
    const auto tw = build_tower(a, 2);
    const auto& top = tw.top();
    CHECK(tower_valuation(tower_uniformizer(tw)) == 1);
    const std::uint64_t order = top->size;
    for (int s = 0; s < 15; ++s) {
      const auto z = random_element(top, rng);
      const auto w = random_element(top, rng);
      if (z.is_zero() || w.is_zero()) continue;
      CHECK(tower_valuation(z * w) == tower_valuation(z) + tower_valuation(w));
      const auto sum = z + w;
      if (!sum.is_zero()) {
        CHECK(tower_valuation(sum) >= std::min(tower_valuation(z), tower_valuation(w)));
        if (tower_valuation(z) != tower_valuation(w)) {
          CHECK(tower_valuation(sum) == std::min(tower_valuation(z), tower_valuation(w)));
        }
      }
      const GaloisElt sigma{static_cast<std::uint64_t>(s) % order};
      const auto sz = apply_galois(tw, z, sigma);
      const auto sw = apply_galois(tw, w, sigma);
      CHECK(apply_galois(tw, z * w, sigma) == sz * sw);
      CHECK(apply_galois(tw, z + w, sigma) == sz + sw);
      CHECK(tower_valuation(sz) == tower_valuation(z));
    }
  }
}

TEST_CASE("in-tower reduction over F_4") {
  const auto F4 = FqField::create(2, 2);
  const auto base = TowerLevel::base(F4);
  const FqField::Code g = F4->generator();
  const auto h = TowerElement::from_base(base, mono(F4, -2, g) + mono(F4, -1));
  const auto red = reduce_rhs(h);
  CHECK(red.shift == TowerElement::from_base(base, mono(F4, -1, F4->mul(g, g))));
  CHECK(tower_valuation(red.reduced) == -1);
  const auto already = TowerElement::from_base(base, mono(F4, -3));
  CHECK(reduce_rhs(already).reduced == already);
}

TEST_CASE("oracle errors") {
  const auto F2 = FqField::prime(2);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  const auto a = make_character(F2, {mono(F2, -1), mono(F2, -3), mono(F2, -5), mono(F2, -7)});
  CHECK(code_of([&] { (void)build_tower(a, 4); }) == ErrorCode::UnsupportedDepth);
  CHECK(code_of([&] { (void)build_tower(make_character(F2, {mono(F2, -2)}), 1); }) == ErrorCode::NotReduced);
  CHECK(code_of([&] { (void)build_tower(make_character(F2, {mono(F2, 0)}), 1); }) ==
        ErrorCode::NotTotallyRamifiedProfile);
  CHECK(code_of([&] { (void)tower_valuation(TowerElement(TowerLevel::base(F2))); }) == ErrorCode::ZeroElement);
}

TEST_CASE("compare agrees with the formula") {
  const auto F2 = FqField::prime(2);
  const auto F3 = FqField::prime(3);
  auto v = compare(make_character(F2, {mono(F2, -1), mono(F2, -3)}), 2);
  CHECK(v.equal);
  CHECK(v.oracle_lower == big({1, 5}));
  v = compare(make_character(F2, {mono(F2, -3), mono(F2, -1)}), 2);
  CHECK(v.equal);
  CHECK(v.oracle_lower == big({3, 9}));
  v = compare(make_character(F3, {mono(F3, -1), mono(F3, -1)}), 2);
  CHECK(v.equal);
  CHECK(v.oracle_lower == big({1, 7}));
}

TEST_CASE("depth three at p = 2") {
  const auto F2 = FqField::prime(2);
  const auto v = compare(make_character(F2, {mono(F2, -1), mono(F2, -3), mono(F2, -5)}), 3);
  CHECK(v.equal);
  CHECK(v.formula_lower == big({1, 5, 17}));
}

TEST_CASE("base change to a larger residue field") {
  const auto F2 = FqField::prime(2);
  const auto F4 = FqField::create(2, 2);
  const auto emb = FqEmbedding::make(F2, F4);
  for (const auto& a : {make_character(F2, {mono(F2, -1), mono(F2, -3)}),
                        make_character(F2, {mono(F2, -3) + mono(F2, -1), mono(F2, -5)})}) {
    CHECK(filtration_breaks(build_tower(a, 2)) == filtration_breaks(build_tower(embed_character(a, emb), 2)));
  }
}
