#include <doctest.h>

#include <random>

#include "witt/laurent.hpp"
#include "witt/witt_vector.hpp"

using namespace witt;

namespace {

using LVec = WittVec<LaurentRing>;

LaurentPoly mono(const FieldPtr& f, long long e, FqField::Code c = 1) { return LaurentPoly::monomial(f, c, e); }

LVec lvec(const FieldPtr& f, std::vector<LaurentPoly> comps) {
  return LVec(LaurentRing(f), f->p(), std::move(comps));
}

// Small random Laurent polynomial with support in [-4, 3].
LaurentPoly random_laurent(const FieldPtr& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 2), ex(-4, 3);
  std::uniform_int_distribution<FqField::Code> co(1, f->order() - 1);
  std::vector<LaurentPoly::Term> t;
  const int k = len(rng);
  for (int i = 0; i < k; ++i) t.emplace_back(ex(rng), co(rng));
  return LaurentPoly::from_terms(f, std::move(t));
}

LVec random_lvec(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<LaurentPoly> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(random_laurent(f, rng));
  return lvec(f, std::move(comps));
}

}  // namespace

TEST_CASE("Witt sum over F_2((t))") {
  const auto F2 = FqField::prime(2);
  const auto a = lvec(F2, {mono(F2, -1), LaurentPoly(F2)});
  CHECK(wadd(a, a) == lvec(F2, {LaurentPoly(F2), mono(F2, -2)}));
  CHECK(wadd(a, a) == times_p(a));
  CHECK(wadd(a, LVec::zero(a.ring(), 2, 2)) == a);
  CHECK(wsub(a, a).is_zero());
  CHECK(format_witt(a) == "(t^-1, 0)");
}

TEST_CASE("Frobenius and multiplication by p") {
  const auto F2 = FqField::prime(2);
  CHECK(frobenius(lvec(F2, {mono(F2, -1), mono(F2, 1)})) == lvec(F2, {mono(F2, -2), mono(F2, 2)}));
  CHECK(times_p(lvec(F2, {mono(F2, -1), mono(F2, -3)})) == lvec(F2, {LaurentPoly(F2), mono(F2, -2)}));
  CHECK(times_p(LVec::zero(LaurentRing(F2), 2, 3)).is_zero());

  const auto F4 = FqField::create(2, 2);
  const FqRing r4(F4);
  const FqElement g(F4, F4->generator());
  const WittVec<FqRing> x(r4, 2, {g, r4.zero()});
  CHECK(frobenius(x) == WittVec<FqRing>(r4, 2, {g * g, r4.zero()}));

  // p^i * 1_n is the indicator of slot i.
  for (unsigned p : {2u, 3u}) {
    const FqRing r(FqField::prime(p));
    const std::size_t n = 4;
    auto v = WittVec<FqRing>::one(r, p, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto expected = WittVec<FqRing>::zero(r, p, n).with_component(i, r.one());
      CHECK(v == expected);
      CHECK(scalar_multiple(ipow(p, static_cast<unsigned>(i)), WittVec<FqRing>::one(r, p, n)) == expected);
      v = times_p(v);
    }
    CHECK(v.is_zero());
  }

  const WittVec<IntegerRing> over_z(IntegerRing{}, 2, {BigInt(1), BigInt(0)});
  CHECK_THROWS_AS(times_p(over_z), Error);
}

TEST_CASE("truncations") {
  const auto F2 = FqField::prime(2);
  const auto a = lvec(F2, {mono(F2, -1), mono(F2, -3)});
  CHECK(mu(a, 1) == lvec(F2, {mono(F2, -1), LaurentPoly(F2)}));
  CHECK(lambda(a, 1) == lvec(F2, {LaurentPoly(F2), mono(F2, -3)}));
  CHECK(wadd(mu(a, 1), lambda(a, 1)) == a);
  CHECK(truncate(a, 1) == lvec(F2, {mono(F2, -1)}));
  for (std::size_t bad : {std::size_t{0}, std::size_t{2}}) {
    try {
      (void)mu(a, bad);
      FAIL("expected CutOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CutOutOfRange);
    }
  }
}

TEST_CASE("shape checks") {
  const auto F2 = FqField::prime(2);
  const auto F3 = FqField::prime(3);
  CHECK_THROWS_AS(wadd(lvec(F2, {mono(F2, 1)}), lvec(F2, {mono(F2, 1), mono(F2, 2)})), Error);
  CHECK_THROWS_AS(wadd(lvec(F2, {mono(F2, 1)}), lvec(F3, {mono(F3, 1)})), Error);
  CHECK_THROWS_AS(LVec(LaurentRing(F2), 2, {}), Error);
}

TEST_CASE("ring axioms over finite fields") {
  std::mt19937_64 rng(21);
  for (auto [p, e] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 1u}, std::pair{3u, 2u}}) {
    const auto F = FqField::create(p, e);
    const FqRing r(F);
    std::uniform_int_distribution<FqField::Code> pick(0, F->order() - 1);
    const std::size_t max_n = p == 2 ? 4 : 3;
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto rnd = [&] {
        std::vector<FqElement> c;
        for (std::size_t i = 0; i < n; ++i) c.emplace_back(F, pick(rng));
        return WittVec<FqRing>(r, p, std::move(c));
      };
      const auto one = WittVec<FqRing>::one(r, p, n);
      for (int s = 0; s < 30; ++s) {
        const auto a = rnd(), b = rnd(), c = rnd();
        CHECK(wadd(a, b) == wadd(b, a));
        CHECK(wadd(wadd(a, b), c) == wadd(a, wadd(b, c)));
        CHECK(wmul(wmul(a, b), c) == wmul(a, wmul(b, c)));
        CHECK(wmul(a, wadd(b, c)) == wadd(wmul(a, b), wmul(a, c)));
        CHECK(wmul(a, one) == a);
        CHECK(wsub(a, a).is_zero());
        CHECK(times_p(a) == scalar_multiple(p, a));
        CHECK(frobenius(wadd(a, b)) == wadd(frobenius(a), frobenius(b)));
        CHECK(frobenius(wmul(a, b)) == wmul(frobenius(a), frobenius(b)));
      }
    }
  }
}

TEST_CASE("ring axioms over Laurent polynomials") {
  std::mt19937_64 rng(22);
  for (unsigned p : {2u, 3u}) {
    const auto F = FqField::prime(p);
    const std::size_t max_add = p == 2 ? 4 : 3;
    for (std::size_t n = 1; n <= max_add; ++n) {
      for (int s = 0; s < 10; ++s) {
        const auto a = random_lvec(F, n, rng), b = random_lvec(F, n, rng), c = random_lvec(F, n, rng);
        CHECK(wadd(a, b) == wadd(b, a));
        CHECK(wadd(wadd(a, b), c) == wadd(a, wadd(b, c)));
        CHECK(wsub(wadd(a, b), b) == a);
        CHECK(times_p(a) == scalar_multiple(p, a));
        CHECK(frobenius(wadd(a, b)) == wadd(frobenius(a), frobenius(b)));
      }
    }
    const std::size_t max_mul = p == 2 ? 3 : 2;
    for (std::size_t n = 1; n <= max_mul; ++n) {
      const auto one = LVec::one(LaurentRing(F), p, n);
      for (int s = 0; s < 5; ++s) {
        const auto a = random_lvec(F, n, rng), b = random_lvec(F, n, rng), c = random_lvec(F, n, rng);
        CHECK(wmul(a, b) == wmul(b, a));
        CHECK(wmul(a, wadd(b, c)) == wadd(wmul(a, b), wmul(a, c)));
        CHECK(wmul(a, one) == a);
        CHECK(frobenius(wmul(a, b)) == wmul(frobenius(a), frobenius(b)));
      }
    }
  }
}

TEST_CASE("symbolic Witt arithmetic") {
  // Over Z[X_0, X_1, Y_0, Y_1] the generic vectors add to the sum polynomials.
  const IntPolyRing zx(4);
  const WittVec<IntPolyRing> x(zx, 2, {zx.variable(0), zx.variable(1)});
  const WittVec<IntPolyRing> y(zx, 2, {zx.variable(2), zx.variable(3)});
  const auto s = wadd(x, y);
  const auto set = gen_witt_polys(2, 2);
  CHECK(s[0] == set.sum[0]);
  CHECK(s[1] == set.sum[1]);
  CHECK(wsub(s, y) == x);
}

TEST_CASE("structural identities") {
  const auto F2 = FqField::prime(2);
  const auto F3 = FqField::prime(3);
  std::function<LaurentPoly(std::mt19937_64&)> gen2 = [&](std::mt19937_64& rng) { return random_laurent(F2, rng); };
  std::function<LaurentPoly(std::mt19937_64&)> gen3 = [&](std::mt19937_64& rng) { return random_laurent(F3, rng); };
  CHECK(check_structural_identities(2, 3, 30, LaurentRing(F2), gen2, 1).checks > 0);
  CHECK(check_structural_identities(3, 2, 30, LaurentRing(F3), gen3, 2).checks > 0);
  CHECK(check_structural_identities(2, 1, 30, LaurentRing(F2), gen2, 3).checks == 0);
}
