#include "witt/verify.hpp"

#include <random>

#include "witt/batch.hpp"
#include "witt/random.hpp"
#include "witt/witt_polys.hpp"

namespace witt {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::IdentityViolation, what);
}

SuiteResult phantom_suite(std::uint64_t seed, std::size_t samples) {
  SuiteResult r{"phantom identities"};
  for (auto [p, max_n] : {std::pair{2u, 4u}, std::pair{3u, 3u}, std::pair{5u, 2u}, std::pair{7u, 2u}}) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      r.checks += check_phantom_identities(*cached_witt_polys(p, n), samples, seed + n).checks;
    }
  }
  return r;
}

SuiteResult shift_suite() {
  SuiteResult r{"shift identity"};
  for (auto [p, n] : {std::pair{2u, 4u}, std::pair{3u, 3u}}) {
    r.checks += check_shift_identity(*witt_family(p, n, WittOpKind::Sum, false)).checks;
  }
  return r;
}

SuiteResult specialized_suite() {
  SuiteResult r{"specialized sums"};
  for (unsigned p : {2u, 3u}) {
    std::uint32_t pj = 1;
    for (std::size_t j = 1; j <= 3; ++j) {
      pj *= p;
      const IntPolynomial f = specialized_sum_poly(p, j);
      const std::string tag = "f_" + std::to_string(j) + " at p = " + std::to_string(p);
      require(mod_ui(f.coefficient({1, pj - 1}), p) == p - 1, tag + ": X_0 Y_0^(p^j-1) coefficient");
      require(f.total_degree() == pj, tag + ": total degree");
      require(f.coefficient({0, pj}) == 0, tag + ": Y_0^(p^j) coefficient");
      r.checks += 3;
    }
  }
  return r;
}

SuiteResult witt_suite(std::uint64_t seed, std::size_t samples) {
  SuiteResult r{"Witt vector identities"};
  std::mt19937_64 rng(seed);
  for (unsigned p : {2u, 3u}) {
    const auto F = FqField::prime(p);
    const std::size_t max_n = p == 2 ? 3 : 2;
    std::function<LaurentPoly(std::mt19937_64&)> gen = [&](std::mt19937_64& g) {
      return random_laurent(F, g, -3, 2, 2);
    };
    for (std::size_t n = 1; n <= max_n; ++n) {
      r.checks += check_structural_identities(p, n, samples, LaurentRing(F), gen, rng()).checks;
      const auto one = CharacterVec::one(LaurentRing(F), p, n);
      for (std::size_t s = 0; s < samples; ++s) {
        const auto a = random_character(F, n, rng, -3, 2, 2);
        const auto b = random_character(F, n, rng, -3, 2, 2);
        require(wadd(a, b) == wadd(b, a), "sum is not commutative at a = " + format_witt(a));
        require(wsub(a, a).is_zero(), "a - a is not zero at a = " + format_witt(a));
        require(wmul(a, one) == a, "one is not neutral at a = " + format_witt(a));
        require(times_p(a) == scalar_multiple(p, a), "p a differs from the p-fold sum at a = " + format_witt(a));
        require(frobenius(wadd(a, b)) == wadd(frobenius(a), frobenius(b)),
                "Frobenius is not additive at a = " + format_witt(a));
        r.checks += 5;
      }
    }
  }
  return r;
}

SuiteResult reduction_suite(std::uint64_t seed, std::size_t samples) {
  SuiteResult r{"reduction certificates"};
  std::mt19937_64 rng(seed);
  for (auto [p, e] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 1u}, std::pair{3u, 2u}}) {
    const auto F = FqField::create(p, e);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t s = 0; s < samples; ++s) {
        const auto a = random_character(F, n, rng, -9, 3);
        const auto cert = reduce(a);
        require(cert.verified && is_reduced(cert.reduced), "reduction failed at a = " + format_witt(a));
        require(artin_schreier_twist(a, cert.witness) == cert.reduced,
                "certificate does not recompute at a = " + format_witt(a));
        r.checks += 2;
      }
    }
  }
  return r;
}

SuiteResult breaks_suite(std::uint64_t seed, std::size_t samples) {
  SuiteResult r{"break coherence"};
  std::mt19937_64 rng(seed);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto F = FqField::prime(p);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto profile = full_profile(random_ramified_character(F, 3, 12, rng));
      require(upper_from_lower(p, profile.lower) == profile.upper, "lower/upper round trip");
      const auto hh = hasse_herbrand(profile);
      for (std::size_t i = 0; i < profile.lower.size(); ++i) {
        require(hh.phi(Rational(profile.lower[i])) == Rational(profile.upper[i]), "phi(b_i) = u_i");
        require(hh.psi(Rational(profile.upper[i])) == Rational(profile.lower[i]), "psi(u_i) = b_i");
        r.checks += 2;
      }
    }
  }
  return r;
}

SuiteResult oracle_suite(std::uint64_t seed, std::size_t samples) {
  SuiteResult r{"oracle agreement"};
  std::mt19937_64 rng(seed);
  std::vector<CharacterVec> cases;
  for (unsigned p : {2u, 3u}) {
    const auto F = FqField::prime(p);
    for (std::size_t s = 0; s < samples; ++s) cases.push_back(random_ramified_character(F, 2, 7, rng));
  }
  for (const auto& outcome : compare_batch_parallel(cases, 2)) {
    if (outcome.error) fail(*outcome.error, outcome.message);
    if (!outcome.agrees()) fail(ErrorCode::OracleMismatch, "formula and oracle breaks differ");
    ++r.checks;
  }
  return r;
}

}  // namespace

void run_verify_suites(std::uint64_t seed, std::size_t samples, const std::function<void(const SuiteResult&)>& done) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::vector<std::uint64_t> seeds(6);
  seq.generate(seeds.begin(), seeds.end());
  done(phantom_suite(seeds[0], samples));
  done(shift_suite());
  done(specialized_suite());
  done(witt_suite(seeds[1], samples));
  done(reduction_suite(seeds[2], samples));
  done(breaks_suite(seeds[3], samples));
  done(oracle_suite(seeds[4], samples));
}

}  // namespace witt
