#include "witt/batch.hpp"

namespace witt {

namespace {

CaseOutcome run_case(const CharacterVec& a, std::size_t depth) {
  CaseOutcome out;
  try {
    out.verdict = compare(a, depth);
  } catch (const Error& e) {
    out.error = e.code();
    out.message = e.what();
  }
  return out;
}

bool same_verdict(const Verdict& a, const Verdict& b) {
  return a.formula_lower == b.formula_lower && a.oracle_lower == b.oracle_lower &&
         a.formula_upper == b.formula_upper && a.equal == b.equal;
}

}  // namespace

bool operator==(const CaseOutcome& a, const CaseOutcome& b) {
  if (a.error != b.error || a.message != b.message) return false;
  if (a.verdict.has_value() != b.verdict.has_value()) return false;
  return !a.verdict || same_verdict(*a.verdict, *b.verdict);
}

std::vector<CaseOutcome> compare_batch_serial(const std::vector<CharacterVec>& cases, std::size_t depth) {
  std::vector<CaseOutcome> out;
  out.reserve(cases.size());
  for (const auto& a : cases) out.push_back(run_case(a, depth));
  return out;
}

std::vector<CaseOutcome> compare_batch_parallel(const std::vector<CharacterVec>& cases, std::size_t depth) {
  std::vector<CaseOutcome> out(cases.size());
  const long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = run_case(cases[static_cast<std::size_t>(i)], depth);
  }
  return out;
}

}  // namespace witt
