#include <doctest.h>

#include <random>
#include <set>

#include "witt/asw.hpp"

using namespace witt;

namespace {

LaurentPoly mono(const FieldPtr& f, long long e, FqField::Code c = 1) { return LaurentPoly::monomial(f, c, e); }
LaurentPoly zero(const FieldPtr& f) { return LaurentPoly(f); }

LaurentPoly random_laurent(const FieldPtr& f, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> len(0, 3), ex(lo, hi);
  std::uniform_int_distribution<FqField::Code> co(1, f->order() - 1);
  std::vector<LaurentPoly::Term> t;
  const int k = len(rng);
  for (int i = 0; i < k; ++i) t.emplace_back(ex(rng), co(rng));
  return LaurentPoly::from_terms(f, std::move(t));
}

CharacterVec random_char(const FieldPtr& f, std::size_t n, std::mt19937_64& rng, int lo = -9, int hi = 2) {
  std::vector<LaurentPoly> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_laurent(f, rng, lo, hi));
  return make_character(f, std::move(c));
}

long long val(const LaurentPoly& a) { return a.valuation().value; }

}  // namespace

TEST_CASE("reducedness predicates") {
  const auto F2 = FqField::prime(2);
  CHECK(is_reduced(make_character(F2, {mono(F2, -3), mono(F2, -1)})));
  CHECK_FALSE(is_reduced(make_character(F2, {mono(F2, -2), zero(F2)})));
  CHECK(is_reduced(make_character(F2, {mono(F2, 0) + mono(F2, 1), mono(F2, -5)})));
  CHECK_THROWS_AS(is_reduced(make_character(F2, {mono(F2, -1).truncated(3)})), Error);

  CHECK(is_strongly_reduced(make_character(F2, {mono(F2, -1), zero(F2)})));
  CHECK_FALSE(is_strongly_reduced(make_character(F2, {mono(F2, -1), mono(F2, 0)})));
  CHECK(is_strongly_reduced(make_character(F2, {mono(F2, -1), mono(F2, -3) + mono(F2, 2)})));
}

TEST_CASE("reduction examples") {
  const auto F2 = FqField::prime(2);
  const auto cert = reduce(make_character(F2, {mono(F2, -2), zero(F2)}));
  CHECK(cert.reduced == make_character(F2, {mono(F2, -1), zero(F2)}));
  CHECK(cert.verified);

  const auto already = make_character(F2, {mono(F2, -3), mono(F2, -1)});
  const auto same = reduce(already);
  CHECK(same.reduced == already);
  CHECK(same.witness.is_zero());

  const auto two = reduce(make_character(F2, {mono(F2, -4), mono(F2, -2)}));
  CHECK(is_reduced(two.reduced));
  CHECK(val(two.reduced[0]) == -1);
  CHECK(artin_schreier_twist(two.original, two.witness) == two.reduced);
}

TEST_CASE("reduction on random vectors") {
  std::mt19937_64 rng(31);
  for (auto [p, e] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 1u}, std::pair{3u, 2u}}) {
    const auto F = FqField::create(p, e);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int s = 0; s < 8; ++s) {
        const auto a = random_char(F, n, rng);
        const auto cert = reduce(a);
        CHECK(is_reduced(cert.reduced));
        CHECK(artin_schreier_twist(a, cert.witness) == cert.reduced);
        // Slots before the first offending one are untouched.
        for (std::size_t i = 0; i < n; ++i) {
          const auto& c = a[i];
          if (!c.is_zero() && val(c) < 0 && val(c) % static_cast<long long>(p) == 0) break;
          CHECK(cert.reduced[i] == c);
        }
        CHECK(reduce(cert.reduced).witness.is_zero());
      }
    }
  }
}

TEST_CASE("leading valuation is a class invariant") {
  std::mt19937_64 rng(32);
  for (unsigned p : {2u, 3u}) {
    const auto F = FqField::prime(p);
    for (int s = 0; s < 15; ++s) {
      const auto a = reduce(random_char(F, 2, rng)).reduced;
      if (a[0].is_zero() || val(a[0]) >= 0) continue;
      const auto d = random_char(F, 2, rng, -4, 2);
      const auto twisted = reduce(artin_schreier_twist(a, d)).reduced;
      CHECK(val(twisted[0]) == val(a[0]));
    }
  }
}

TEST_CASE("strong reduction") {
  const auto F2 = FqField::prime(2);
  SUBCASE("positive tail") {
    const auto r = strongly_reduce(make_character(F2, {mono(F2, -1), mono(F2, 2)}), 8);
    CHECK(r.verified);
    CHECK(r.result[0] == mono(F2, -1));
    CHECK(r.result[1] == zero(F2).truncated(8));
    CHECK(r.field->same_as(*F2));
  }
  SUBCASE("already strongly reduced") {
    const auto a = make_character(F2, {mono(F2, -1), mono(F2, -3)});
    const auto r = strongly_reduce(a, 8);
    CHECK(r.result == a);
    CHECK(r.witness.is_zero());
  }
  SUBCASE("constant outside the image needs an extension") {
    const auto r = strongly_reduce(make_character(F2, {mono(F2, -1), mono(F2, 0)}), 8);
    CHECK(r.verified);
    CHECK(r.field->order() == 4);
    CHECK(r.result[1].is_zero());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(strongly_reduce(make_character(F2, {mono(F2, -1)}), std::nullopt), Error);
    CHECK_THROWS_AS(strongly_reduce(make_character(F2, {mono(F2, -2)}), 4), Error);
  }
  SUBCASE("random") {
    std::mt19937_64 rng(33);
    for (auto [p, e] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 1u}}) {
      const auto F = FqField::create(p, e);
      for (int s = 0; s < 6; ++s) {
        const auto a = reduce(random_char(F, 2, rng, -5, 3)).reduced;
        const auto r = strongly_reduce(a, 10);
        CHECK(r.verified);
      }
    }
  }
}

TEST_CASE("Artin-Schreier membership of units") {
  const auto F2 = FqField::prime(2);
  const auto F4 = FqField::create(2, 2);
  CHECK_FALSE(wp_member_unit(mono(F2, 0)));
  CHECK(wp_member_unit(mono(F2, 1) + mono(F2, 3)));
  CHECK_FALSE(wp_member_unit(mono(F4, 0, F4->generator())));
  CHECK(wp_member_unit(zero(F2)));
  CHECK_THROWS_AS(wp_member_unit(mono(F2, -1)), Error);

  // Spot check against exhaustive search over c with support in [-2, 2].
  for (const auto& F : {F2, F4, FqField::prime(3)}) {
    const unsigned p = F->p();
    const auto q = F->order();
    std::set<FqField::Code> constant_images;
    std::vector<FqField::Code> digits(5, 0);
    const std::uint64_t total = ipow(q, 5);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t x = code;
      std::vector<LaurentPoly::Term> t;
      for (int k = -2; k <= 2; ++k) {
        t.emplace_back(k, static_cast<FqField::Code>(x % q));
        x /= q;
      }
      const auto c = LaurentPoly::from_terms(F, t);
      const auto image = c.pow(p) - c;
      if (image.is_zero() || val(image) >= 0) {
        CHECK(wp_member_unit(image));
        if (image.is_zero() || (val(image) == 0 && image.terms().size() == 1)) constant_images.insert(image.coeff(0));
      }
    }
    for (FqField::Code alpha = 0; alpha < q; ++alpha) {
      CHECK(wp_member_unit(LaurentPoly::constant(F, alpha)) == (constant_images.count(alpha) == 1));
    }
  }
}

TEST_CASE("character shift") {
  const auto F2 = FqField::prime(2);
  CHECK(shift_char(make_character(F2, {mono(F2, -3)}), 1) == make_character(F2, {zero(F2), mono(F2, -3)}));
  CHECK(shift_char(make_character(F2, {mono(F2, -1), mono(F2, -3)}), 1) ==
        make_character(F2, {zero(F2), mono(F2, -1), mono(F2, -3)}));
}

TEST_CASE("subextension vector") {
  // Variables a_0, a_1, x_0 over F_2.
  const IntPolyRing r(3, 2);
  const WittVec<IntPolyRing> a(r, 2, {r.variable(0), r.variable(1)});
  const auto b = subext_vector(a, {r.variable(2)}, 1);
  CHECK(b[0].is_zero());
  CHECK(b[1] == r.add(r.variable(1), r.mul(r.variable(2), r.variable(0))));
  CHECK(subext_vector(WittVec<IntPolyRing>::zero(r, 2, 2), {r.variable(2)}, 1).is_zero());
  CHECK(subext_vector(a, {r.variable(2), r.variable(2)}, 2).is_zero());

  std::mt19937_64 rng(34);
  const auto F3 = FqField::prime(3);
  for (int s = 0; s < 10; ++s) {
    const auto v = random_char(F3, 3, rng);
    const auto x = random_char(F3, 3, rng);
    for (std::size_t i = 1; i < 3; ++i) {
      const auto out = subext_vector(v, x.components(), i);
      for (std::size_t k = 0; k < i; ++k) CHECK(out[k].is_zero());
    }
  }
}
