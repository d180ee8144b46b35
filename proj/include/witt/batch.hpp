#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "witt/tower.hpp"

namespace witt {

struct CaseOutcome {
  std::optional<Verdict> verdict;
  // Set when compare threw; the code and message of the error.
  std::optional<ErrorCode> error;
  std::string message;

  bool agrees() const { return verdict && verdict->equal; }
  friend bool operator==(const CaseOutcome& a, const CaseOutcome& b);
};

// Reference implementation: one case after another.
std::vector<CaseOutcome> compare_batch_serial(const std::vector<CharacterVec>& cases, std::size_t depth);

// OpenMP kernel over independent cases. Results are stored by index, so the
// output equals the serial one regardless of scheduling.
std::vector<CaseOutcome> compare_batch_parallel(const std::vector<CharacterVec>& cases, std::size_t depth);

}  // namespace witt
