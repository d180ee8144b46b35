#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <random>
#include <sstream>

#include "witt/batch.hpp"
#include "witt/problem.hpp"
#include "witt/random.hpp"
#include "witt/verify.hpp"
#include "witt/witt_polys.hpp"

namespace witt::cli {

namespace {

using Json = nlohmann::ordered_json;

Json big_json(const BigInt& x) { return fits_int64(x) ? Json(to_int64(x)) : Json(to_decimal(x)); }

Json big_list(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(big_json(x));
  return out;
}

Json rational_json(const Rational& x) {
  if (x.get_den() == 1) return big_json(x.get_num());
  return x.get_str();
}

Json field_json(const FqField& f) {
  Json out{{"degree", f.degree()}};
  if (f.degree() > 1) out["modulus"] = f.modulus();
  return out;
}

Json laurent_json(const LaurentPoly& c) {
  Json out = Json::array();
  for (const auto& [e, code] : c.terms()) out.push_back(Json::array({e, c.field()->format(code)}));
  return out;
}

Json vector_json(const CharacterVec& a) {
  Json out = Json::array();
  for (const auto& c : a.components()) out.push_back(laurent_json(c));
  return out;
}

Json profile_json(const BreakProfile& pr) {
  Json m = Json::array();
  for (const auto& x : pr.m) m.push_back(x ? Json(*x) : Json(nullptr));
  Json phi = Json::array();
  const auto hh = hasse_herbrand(pr);
  for (const auto& [x, y] : hh.phi.points()) phi.push_back(Json::array({rational_json(x), rational_json(y)}));
  return Json{{"p", pr.p},
              {"n", pr.n},
              {"m", m},
              {"upper", big_list(pr.upper)},
              {"lower", big_list(pr.lower)},
              {"residue_degree", big_json(pr.residue_degree)},
              {"ram_index", big_json(pr.ram_index)},
              {"minus_one_break", pr.minus_one_break},
              {"phi_breakpoints", phi}};
}

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + to_decimal(x);
  return s;
}

std::string profile_text(const BreakProfile& pr) {
  std::ostringstream os;
  std::string m;
  for (const auto& x : pr.m) m += (m.empty() ? "" : " ") + (x ? std::to_string(*x) : std::string("-"));
  os << "p = " << pr.p << ", n = " << pr.n << "\n"
     << "m = " << m << "\n"
     << "upper = " << join(pr.upper) << "\n"
     << "lower = " << join(pr.lower) << "\n"
     << "residue_degree = " << to_decimal(pr.residue_degree) << "\n"
     << "ram_index = " << to_decimal(pr.ram_index) << "\n"
     << "minus_one_break = " << (pr.minus_one_break ? "true" : "false") << "\n";
  return os.str();
}

std::string pl_text(const char* name, const PLFunction& f) {
  std::ostringstream os;
  os << name << ":\n";
  for (std::size_t k = 0; k < f.points().size(); ++k) {
    os << "  " << f.points()[k].first.get_str() << " -> " << f.points()[k].second.get_str()
       << "  slope " << f.slopes()[k].get_str() << "\n";
  }
  return os.str();
}

Json pl_json(const PLFunction& f) {
  Json pts = Json::array(), slopes = Json::array();
  for (const auto& [x, y] : f.points()) pts.push_back(Json::array({rational_json(x), rational_json(y)}));
  for (const auto& s : f.slopes()) slopes.push_back(rational_json(s));
  return Json{{"breakpoints", pts}, {"slopes", slopes}};
}

Json verdict_json(std::size_t index, const CharacterVec& a, const CaseOutcome& o) {
  Json j{{"case", index}, {"p", a.p()}, {"residue_field", field_json(*a.ring().field())}, {"vector", vector_json(a)}};
  if (o.verdict) {
    j["formula_lower"] = big_list(o.verdict->formula_lower);
    j["oracle_lower"] = big_list(o.verdict->oracle_lower);
    j["formula_upper"] = big_list(o.verdict->formula_upper);
    j["equal"] = o.verdict->equal;
  } else {
    j["error"] = std::string(error_code_name(*o.error));
    j["message"] = o.message;
  }
  return j;
}

std::vector<std::string> poly_names(std::size_t n) {
  std::vector<std::string> names;
  for (const char* block : {"X", "Y"}) {
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(block) + "_" + std::to_string(i));
  }
  return names;
}

Json poly_json(const IntPolynomial& f, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& [exps, c] : f.terms()) {
    Json vars = Json::object();
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] != 0) vars[names[v]] = exps[v];
    }
    terms.push_back(Json{{"vars", vars}, {"coeff", to_decimal(c)}});
  }
  return terms;
}

unsigned log_base(unsigned p, unsigned q) {
  unsigned e = 0;
  unsigned long long acc = 1;
  while (acc < q) {
    acc *= p;
    ++e;
  }
  if (acc != q || e == 0) fail(ErrorCode::ValidationError, std::to_string(q) + " is not a power of " + std::to_string(p));
  return e;
}

struct Options {
  std::string format = "json";
  std::string file;
  std::optional<long long> precision;
  std::uint64_t seed = 1;
  std::size_t depth = 0;
  std::size_t samples = 20;
  std::size_t random_count = 0;
  unsigned p = 0, q = 0;
  std::size_t n = 2;
  long long max_m = 9;
  bool serial = false;
  std::vector<long long> m;
};

int cmd_breaks(const Options& o, std::ostream& out) {
  const auto a = problem_vector(parse_problem(read_text_file(o.file)));
  const auto profile = full_profile(reduce(a).reduced);
  if (o.format == "text") {
    out << profile_text(profile);
  } else {
    out << profile_json(profile).dump(2) << "\n";
  }
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const auto a = problem_vector(parse_problem(read_text_file(o.file)));
  Json j;
  if (o.precision) {
    const auto sr = strongly_reduce(a, o.precision);
    Json prec = Json::array();
    for (const auto& c : sr.result.components()) prec.push_back(c.precision() ? Json(*c.precision()) : Json(nullptr));
    j = Json{{"p", a.p()},
             {"residue_field", field_json(*sr.field)},
             {"n", a.length()},
             {"precision", *o.precision},
             {"reduced", vector_json(sr.result)},
             {"component_precision", prec},
             {"witness", vector_json(sr.witness)},
             {"verified", sr.verified}};
  } else {
    const auto cert = reduce(a);
    j = Json{{"p", a.p()},
             {"residue_field", field_json(*a.ring().field())},
             {"n", a.length()},
             {"reduced", vector_json(cert.reduced)},
             {"witness", vector_json(cert.witness)},
             {"verified", cert.verified}};
  }
  if (o.format == "text") {
    const auto& red = j["reduced"];
    out << "reduced = " << red.dump() << "\nwitness = " << j["witness"].dump()
        << "\nverified = " << (j["verified"].get<bool>() ? "true" : "false") << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  std::vector<CharacterVec> cases;
  if (!o.file.empty()) {
    cases.push_back(problem_vector(parse_problem(read_text_file(o.file))));
  } else {
    if (o.random_count == 0 || o.p == 0) {
      fail(ErrorCode::ValidationError, "give a vector file or --random with --p");
    }
    const unsigned q = o.q == 0 ? o.p : o.q;
    const auto field = FqField::create(o.p, log_base(o.p, q));
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.random_count; ++i) {
      cases.push_back(random_ramified_character(field, o.n, o.max_m, rng));
    }
  }
  const std::size_t n = cases.front().length();
  const std::size_t depth = o.depth != 0 ? o.depth : std::min<std::size_t>(n, 2);
  const auto outcomes = o.serial ? compare_batch_serial(cases, depth) : compare_batch_parallel(cases, depth);

  std::size_t equal = 0, mismatched = 0, failed = 0;
  std::optional<Error> first_error;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& oc = outcomes[i];
    if (oc.verdict) {
      oc.verdict->equal ? ++equal : ++mismatched;
    } else {
      ++failed;
      if (!first_error) first_error.emplace(*oc.error, oc.message);
    }
    if (o.format == "text") {
      out << "case " << i << ": ";
      if (oc.verdict) {
        out << "formula [" << join(oc.verdict->formula_lower) << "] oracle [" << join(oc.verdict->oracle_lower)
            << "] " << (oc.verdict->equal ? "equal" : "MISMATCH") << "\n";
      } else {
        out << oc.message << "\n";
      }
    } else {
      out << verdict_json(i, cases[i], oc).dump() << "\n";
    }
  }
  out << "summary: " << outcomes.size() << " cases, " << equal << " equal, " << mismatched << " mismatched, "
      << failed << " failed\n";
  if (mismatched > 0) return static_cast<int>(ErrorClass::Internal);
  if (first_error) return first_error->exit_status();
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  run_verify_suites(o.seed, o.samples, [&](const SuiteResult& r) {
    out << r.name << ": pass (" << r.checks << " checks)\n";
  });
  out << "all suites pass\n";
  return 0;
}

int cmd_hh(const Options& o, std::ostream& out) {
  BreakProfile profile;
  if (!o.file.empty()) {
    profile = full_profile(reduce(problem_vector(parse_problem(read_text_file(o.file)))).reduced);
  } else {
    if (o.p == 0 || o.m.empty()) fail(ErrorCode::ValidationError, "give a vector file or --p with --m");
    if (!is_prime(o.p)) fail(ErrorCode::ValidationError, std::to_string(o.p) + " is not prime");
    ValuationProfile m(o.m.begin(), o.m.end());
    profile = profile_from_valuations(o.p, m);
  }
  const auto hh = hasse_herbrand(profile);
  if (o.format == "text") {
    out << "lower = " << join(profile.lower) << "\nupper = " << join(profile.upper) << "\n";
    out << pl_text("phi", hh.phi) << pl_text("psi", hh.psi);
  } else {
    out << Json{{"p", profile.p},
                {"lower", big_list(profile.lower)},
                {"upper", big_list(profile.upper)},
                {"phi", pl_json(hh.phi)},
                {"psi", pl_json(hh.psi)}}
               .dump(2)
        << "\n";
  }
  return 0;
}

int cmd_witt_polys(const Options& o, std::ostream& out) {
  if (!is_prime(o.p)) fail(ErrorCode::ValidationError, std::to_string(o.p) + " is not prime");
  if (o.n < 1) fail(ErrorCode::ValidationError, "length must be at least 1");
  const auto set = cached_witt_polys(o.p, o.n);
  const auto names = poly_names(o.n);
  const std::pair<const char*, const std::vector<IntPolynomial>*> families[] = {
      {"S", &set->sum}, {"M", &set->product}, {"I", &set->negation}};
  if (o.format == "json") {
    Json j{{"p", o.p}, {"n", o.n}};
    for (const auto& [name, fam] : families) {
      Json arr = Json::array();
      for (const auto& f : *fam) arr.push_back(poly_json(f, names));
      j[name] = arr;
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [name, fam] : families) {
      for (std::size_t i = 0; i < fam->size(); ++i) out << name << "_" << i << " = " << (*fam)[i].to_string(names) << "\n";
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Witt vectors and ramification breaks of Artin-Schreier-Witt extensions", "wittram"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json"});

  auto* breaks = app.add_subcommand("breaks", "ramification data of the character defined by a vector file");
  breaks->add_option("file", o.file, "problem file")->required();
  breaks->add_option("--format", o.format)->check(formats);

  auto* red = app.add_subcommand("reduce", "reduce a vector modulo F(c) - c, with a certificate");
  red->add_option("file", o.file, "problem file")->required();
  red->add_option("--precision", o.precision, "strong reduction modulo t^N");
  red->add_option("--format", o.format)->check(formats);

  auto* oracle = app.add_subcommand("oracle-compare", "check the break formula against the tower oracle");
  oracle->add_option("file", o.file, "problem file");
  oracle->add_option("--random", o.random_count, "number of random strongly reduced vectors");
  oracle->add_option("--p", o.p, "characteristic");
  oracle->add_option("--q", o.q, "residue field order");
  oracle->add_option("--n", o.n, "vector length");
  oracle->add_option("--max-m", o.max_m, "bound on -v(a_i)")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", o.seed);
  oracle->add_option("--depth", o.depth)->check(CLI::Range(1, 3));
  oracle->add_flag("--serial", o.serial, "run the serial reference");
  oracle->add_option("--format", o.format)->check(formats);

  auto* verify = app.add_subcommand("verify", "run the identity suites");
  verify->add_option("--seed", o.seed);
  verify->add_option("--samples", o.samples)->check(CLI::PositiveNumber);

  auto* hh = app.add_subcommand("hh", "Hasse-Herbrand breakpoints of a profile");
  hh->add_option("file", o.file, "problem file");
  hh->add_option("--p", o.p, "characteristic");
  hh->add_option("--m", o.m, "valuations m_0 m_1 ...")->delimiter(',');
  hh->add_option("--format", o.format)->check(formats);

  auto* polys = app.add_subcommand("witt-polys", "print the Witt sum, product and negation polynomials");
  polys->add_option("--p", o.p)->required();
  polys->add_option("--n", o.n)->required();
  std::string poly_format = "text";
  polys->add_option("--format", poly_format)->check(formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "wittram: " << e.what() << "\n";
    return static_cast<int>(ErrorClass::Parse);
  }

  try {
    if (*breaks) return cmd_breaks(o, out);
    if (*red) return cmd_reduce(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*hh) return cmd_hh(o, out);
    o.format = poly_format;
    return cmd_witt_polys(o, out);
  } catch (const Error& e) {
    err << "wittram: " << e.what() << "\n";
    return e.exit_status();
  } catch (const std::exception& e) {
    err << "wittram: internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorClass::Internal);
  }
}

}  // namespace witt::cli
