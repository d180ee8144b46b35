#include "witt/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace witt {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& what) { fail(ErrorCode::ValidationError, what); }

const Json& member(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where + " is missing \"" + key + "\"");
  return *it;
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) invalid(where + " has unknown key \"" + k + "\"");
  }
}

long long integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) invalid(what + " must be an integer");
  return j.get<long long>();
}

unsigned small_positive(const Json& j, const std::string& what) {
  const long long v = integer(j, what);
  if (v < 1 || v > 1'000'000) invalid(what + " out of range");
  return static_cast<unsigned>(v);
}

std::string quoted(const std::string& s) { return Json(s).dump(); }

}  // namespace

Problem parse_problem(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(ErrorCode::ParseError, "malformed JSON at line " + std::to_string(line) + ", column " +
                                    std::to_string(column));
  }
  if (!doc.is_object()) invalid("top level must be an object");
  only_keys(doc, {"p", "residue_field", "n", "components"}, "problem");

  Problem out;
  out.p = small_positive(member(doc, "p", "problem"), "p");
  const Json& rf = member(doc, "residue_field", "problem");
  if (!rf.is_object()) invalid("residue_field must be an object");
  only_keys(rf, {"degree", "modulus"}, "residue_field");
  out.degree = small_positive(member(rf, "degree", "residue_field"), "degree");
  if (const auto it = rf.find("modulus"); it != rf.end()) {
    if (!it->is_array()) invalid("modulus must be an array");
    PrimePoly mod;
    for (const auto& c : *it) {
      const long long v = integer(c, "modulus coefficient");
      if (v < 0 || v >= static_cast<long long>(out.p)) invalid("modulus coefficient outside 0..p-1");
      mod.push_back(static_cast<unsigned>(v));
    }
    out.modulus = std::move(mod);
  }
  const FieldPtr field = problem_field(out);

  const unsigned n = small_positive(member(doc, "n", "problem"), "n");
  const Json& comps = member(doc, "components", "problem");
  if (!comps.is_array()) invalid("components must be an array");
  if (comps.size() != n) invalid("components has " + std::to_string(comps.size()) + " entries, n is " +
                                 std::to_string(n));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "component " + std::to_string(i);
    if (!comps[i].is_array()) invalid(where + " must be an array of terms");
    std::vector<ProblemTerm> terms;
    for (const auto& t : comps[i]) {
      if (!t.is_array() || t.size() != 2) invalid(where + ": a term is [exponent, coefficient]");
      const long long e = integer(t[0], where + " exponent");
      if (!t[1].is_string()) invalid(where + ": coefficient must be a string");
      const std::string c = t[1].get<std::string>();
      FqField::Code code;
      try {
        code = field->parse(c);
      } catch (const Error&) {
        invalid(where + ": bad coefficient \"" + c + "\"");
      }
      if (code == 0) invalid(where + ": zero coefficient at exponent " + std::to_string(e));
      if (!terms.empty() && e <= terms.back().exponent) invalid(where + ": exponents must strictly increase");
      terms.push_back({e, c});
    }
    out.components.push_back(std::move(terms));
  }
  return out;
}

std::string print_problem(const Problem& problem) {
  std::ostringstream os;
  os << "{\n  \"p\": " << problem.p << ",\n  \"residue_field\": {\"degree\": " << problem.degree;
  if (problem.modulus) {
    os << ", \"modulus\": [";
    for (std::size_t i = 0; i < problem.modulus->size(); ++i) os << (i ? ", " : "") << (*problem.modulus)[i];
    os << "]";
  }
  os << "},\n  \"n\": " << problem.n() << ",\n  \"components\": [";
  for (std::size_t i = 0; i < problem.components.size(); ++i) {
    os << (i ? ",\n    [" : "\n    [");
    const auto& terms = problem.components[i];
    for (std::size_t k = 0; k < terms.size(); ++k) {
      os << (k ? ", " : "") << "[" << terms[k].exponent << ", " << quoted(terms[k].coeff) << "]";
    }
    os << "]";
  }
  os << (problem.components.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

FieldPtr problem_field(const Problem& problem) {
  return FqField::create(problem.p, problem.degree, problem.modulus);
}

CharacterVec problem_vector(const Problem& problem) { return problem_vector(problem, problem_field(problem)); }

CharacterVec problem_vector(const Problem& problem, const FieldPtr& field) {
  std::vector<LaurentPoly> comps;
  for (const auto& terms : problem.components) {
    std::vector<LaurentPoly::Term> t;
    for (const auto& term : terms) t.emplace_back(term.exponent, field->parse(term.coeff));
    comps.push_back(LaurentPoly::from_terms(field, std::move(t)));
  }
  return make_character(field, std::move(comps));
}

Problem problem_from_vector(const CharacterVec& a) {
  const FieldPtr& field = a.ring().field();
  Problem out;
  out.p = field->p();
  out.degree = field->degree();
  if (field->degree() > 1) out.modulus = field->modulus();
  for (const auto& c : a.components()) {
    std::vector<ProblemTerm> terms;
    for (const auto& [e, code] : c.terms()) terms.push_back({e, field->format(code)});
    out.components.push_back(std::move(terms));
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace witt
