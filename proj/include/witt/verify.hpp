#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace witt {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
};

// Runs the identity suites for Witt polynomials, Witt vectors, reduction and
// the break formulas from one seed. Each finished suite is reported through
// `done`; the first failure throws the error of the failing check.
void run_verify_suites(std::uint64_t seed, std::size_t samples, const std::function<void(const SuiteResult&)>& done);

}  // namespace witt
