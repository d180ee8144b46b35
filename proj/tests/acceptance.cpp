// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "witt/batch.hpp"
#include "witt/problem.hpp"
#include "witt/random.hpp"
#include "witt/witt_polys.hpp"

using namespace witt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  Outcome finish(const std::string& summary) const {
    Outcome o{failed_ == 0, summary + ", " + std::to_string(checks_) + " checks"};
    for (const auto& f : failures_) o.detail += "; failed: " + f;
    if (failed_ > failures_.size()) o.detail += "; ...";
    return o;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

Outcome guarded(const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

std::string pq(unsigned p, unsigned e) { return "p=" + std::to_string(p) + ",q=" + std::to_string(ipow(p, e)); }

Outcome witt_polynomial_generation() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  std::size_t sets = 0;
  for (auto [p, max_n] : {std::pair{2u, 4u}, std::pair{3u, 3u}, std::pair{5u, 2u}, std::pair{7u, 2u}}) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      // Fresh generation: exact division is asserted inside the recursion.
      const WittPolySet set = gen_witt_polys(p, n);
      c.expect(check_phantom_identities(set, 20, 100 * p + n).checks > 0, "phantom identities");
      ++sets;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60.0, "runtime under 60 s");
  char buf[80];
  std::snprintf(buf, sizeof buf, "generated %zu sets in %.2f s (limit 60 s)", sets, secs);
  return c.finish(buf);
}

Outcome shift_identity_and_times_p() {
  Checker c;
  std::mt19937_64 rng(2);
  for (unsigned p : {2u, 3u}) {
    const auto F = FqField::prime(p);
    for (std::size_t n = 1; n <= 4; ++n) {
      if (n >= 2) c.expect(check_shift_identity(*witt_family(p, n, WittOpKind::Sum, false)).checks == n - 1, "shift");
      for (int s = 0; s < 100; ++s) {
        const auto a = random_character(F, n, rng, -4, 3, 3);
        auto sum = a;
        for (unsigned k = 1; k < p; ++k) sum = wadd(sum, a);
        c.expect(times_p(a) == sum, "p a at " + format_witt(a));
      }
    }
  }
  return c.finish("p in {2,3}, n <= 4, 100 Laurent vectors per configuration");
}

Outcome specialized_sums() {
  Checker c;
  for (unsigned p : {2u, 3u}) {
    std::uint32_t pj = 1;
    for (std::size_t j = 1; j <= 3; ++j) {
      pj *= p;
      const IntPolynomial f = specialized_sum_poly(p, j);
      const std::string tag = "p=" + std::to_string(p) + ",j=" + std::to_string(j);
      c.expect(mod_ui(f.coefficient({1, pj - 1}), p) == p - 1, tag + " -X_0 Y_0^(p^j-1)");
      c.expect(f.total_degree() == pj, tag + " degree");
      c.expect(f.coefficient({0, pj}) == 0, tag + " Y_0^(p^j)");
    }
  }
  // Valuation of f_j(x_0, a_0) in K_1 = K(x_0), inside depth-two towers.
  std::mt19937_64 rng(3);
  std::size_t towers = 0;
  for (unsigned p : {2u, 3u}) {
    const auto F = FqField::prime(p);
    for (int s = 0; s < 10; ++s) {
      const auto a = random_ramified_character(F, 2, 9, rng);
      const auto tw = build_tower(a, 2);
      ++towers;
      const long long m0 = -a[0].valuation().value;
      long long pj = 1;
      for (std::size_t j = 1; j <= 3; ++j) {
        pj *= p;
        const long long expected = -(pj * p - p + 1) * m0;
        const long long got = tower_valuation(specialized_sum_in_tower(tw, a[0], j));
        c.expect(got == expected, "v(f_" + std::to_string(j) + ") = " + std::to_string(got) + " for m_0 = " +
                                      std::to_string(m0) + ", p = " + std::to_string(p));
      }
    }
  }
  return c.finish("symbolic claims for p in {2,3}, j <= 3; valuations in " + std::to_string(towers) + " towers");
}

Outcome subextension_identities() {
  Checker c;
  std::uint64_t seed = 4;
  for (unsigned p : {2u, 3u}) {
    const auto F = FqField::prime(p);
    std::function<LaurentPoly(std::mt19937_64&)> gen = [&](std::mt19937_64& g) {
      return random_laurent(F, g, -4, 3, 2);
    };
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto report = check_structural_identities(p, n, 100, LaurentRing(F), gen, seed++);
      c.expect(report.checks > 0, "structural identities");
    }
  }
  return c.finish("100 samples per (p,n), all cuts i, p in {2,3}, n <= 4");
}

Outcome reduction_certificates() {
  Checker c;
  std::mt19937_64 rng(5);
  for (unsigned p : {2u, 3u}) {
    for (unsigned e : {1u, 2u}) {
      const auto F = FqField::create(p, e);
      for (std::size_t n = 1; n <= 3; ++n) {
        for (int s = 0; s < 100; ++s) {
          const auto a = random_character(F, n, rng, -12, 3, 3);
          const auto cert = reduce(a);
          c.expect(is_reduced(cert.reduced), pq(p, e) + " not reduced: " + format_witt(cert.reduced));
          c.expect(wsub(wadd(a, frobenius(cert.witness)), cert.witness) == cert.reduced,
                   pq(p, e) + " certificate: " + format_witt(a));
        }
      }
    }
  }
  return c.finish("100 vectors per (p,q,n) in {2,3} x {p,p^2} x {1,2,3}");
}

struct CentralData {
  std::vector<BreakProfile> profiles;
};

Outcome central_check(CentralData& data) {
  Checker c;
  std::mt19937_64 rng(6);
  std::vector<CharacterVec> twos, ones;
  for (unsigned p : {2u, 3u}) {
    for (unsigned e : {1u, 2u}) {
      const auto F = FqField::create(p, e);
      for (int s = 0; s < 50; ++s) twos.push_back(random_ramified_character(F, 2, 9, rng));
    }
  }
  for (unsigned p : {2u, 3u, 5u}) {
    const auto F = FqField::prime(p);
    for (int s = 0; s < 20; ++s) ones.push_back(random_ramified_character(F, 1, 9, rng));
  }
  std::size_t agree = 0;
  auto tally = [&](const std::vector<CharacterVec>& cases, std::size_t depth) {
    const auto outcomes = compare_batch_parallel(cases, depth);
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto& o = outcomes[i];
      c.expect(o.agrees(), format_witt(cases[i]) + (o.error ? " " + o.message : " mismatch"));
      if (o.agrees()) ++agree;
      data.profiles.push_back(full_profile(cases[i]));
    }
  };
  tally(twos, 2);
  tally(ones, 1);
  return c.finish(std::to_string(agree) + "/" + std::to_string(twos.size() + ones.size()) +
                  " formula lower breaks equal oracle breaks (n=2: 200, n=1: 60)");
}

Outcome hasse_herbrand_coherence(const CentralData& data) {
  Checker c;
  if (data.profiles.empty()) c.expect(false, "no profiles from the central check");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(0, 5000), den(1, 97);
  for (const auto& pr : data.profiles) {
    const auto hh = hasse_herbrand(pr);
    for (std::size_t i = 0; i < pr.lower.size(); ++i) {
      const Rational b(pr.lower[i]), u(pr.upper[i]);
      c.expect(hh.phi(b) == u, "phi(b_i) = u_i");
      c.expect(hh.psi(hh.phi(b)) == b, "psi(phi(b_i)) = b_i");
    }
    for (int s = 0; s < 10; ++s) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      c.expect(hh.psi(hh.phi(x)) == x, "psi(phi(x)) = x at " + x.get_str());
    }
    c.expect(upper_from_lower(pr.p, pr.lower) == pr.upper, "lower to upper");
    c.expect(lower_from_upper(pr.p, pr.upper) == pr.lower, "upper to lower");
  }
  return c.finish(std::to_string(data.profiles.size()) + " profiles");
}

Outcome mixed_type_profiles() {
  Checker c;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long long> odd(0, 9), tail(1, 6);
  for (unsigned e : {1u, 2u}) {
    const auto F = FqField::create(2, e);
    for (int s = 0; s < 20; ++s) {
      const long long m = 2 * odd(rng) + 1;
      FqField::Code u = 0;
      while (u == 0 || F->trace(u) == 0) u = random_unit(*F, rng);
      LaurentPoly unit = LaurentPoly::constant(F, u) + LaurentPoly::monomial(F, random_unit(*F, rng), tail(rng));
      const auto pole = LaurentPoly::monomial(F, random_unit(*F, rng), -m);
      const auto pr = full_profile(make_character(F, {unit, pole}));
      const std::string tag = "q=" + std::to_string(F->order()) + ", m=" + std::to_string(m);
      c.expect(pr.residue_degree == 2 && pr.ram_index == 2, tag + " f = e = 2");
      c.expect(pr.upper == std::vector<BigInt>{BigInt(static_cast<long>(m))}, tag + " upper break m");
      c.expect(pr.minus_one_break, tag + " minus_one_break");
      const auto shifted = full_profile(shift_char(make_character(F, {pole}), 1));
      const auto single = full_profile(make_character(F, {pole}));
      c.expect(shifted == single, tag + " shifted profile");
    }
  }
  return c.finish("p=2, q in {2,4}, 20 vectors each");
}

Outcome cli_round_trip() {
  Checker c;
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(WITT_PROBLEM_DIR)) {
    const std::string text = read_text_file(entry.path().string());
    const Problem pr = parse_problem(text);
    c.expect(print_problem(pr) == text, entry.path().filename().string() + " print(parse) differs");
    c.expect(parse_problem(print_problem(pr)) == pr, entry.path().filename().string() + " parse(print) differs");
    ++files;
  }
  c.expect(files == 20, "corpus holds 20 files");
  auto run = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return std::to_string(status) + "\n" + out.str() + err.str();
  };
  const std::vector<std::vector<std::string>> commands{
      {"verify", "--seed", "7"},
      {"oracle-compare", "--random", "8", "--p", "2", "--q", "4", "--n", "2", "--seed", "11"},
      {"breaks", std::string(WITT_PROBLEM_DIR) + "/08_f9.json"},
      {"witt-polys", "--p", "3", "--n", "3", "--format", "json"}};
  for (const auto& cmd : commands) {
    const std::string first = run(cmd);
    c.expect(first.rfind("0\n", 0) == 0, cmd[0] + " exit status");
    c.expect(run(cmd) == first, cmd[0] + " rerun differs");
  }
  return c.finish(std::to_string(files) + " problem files, " + std::to_string(commands.size()) +
                  " commands rerun byte-identically");
}

}  // namespace

int main() {
  CentralData central;
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, witt_polynomial_generation},
      {2, shift_identity_and_times_p},
      {3, specialized_sums},
      {4, subextension_identities},
      {5, reduction_certificates},
      {6, [&] { return central_check(central); }},
      {7, [&] { return hasse_herbrand_coherence(central); }},
      {8, mixed_type_profiles},
      {9, cli_round_trip},
  };
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = guarded(fn);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s (%s) [%.2f s]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
