#ifndef PFZ_VERIFY_HPP
#define PFZ_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "json_io.hpp"

namespace pfz {

// Aggregated oracle run for one named suite.
struct SuiteResult {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;

  bool pass() const { return failures == 0 && cases > 0; }
};

// Known suites: crt, sl, sigma, sumproduct, fixedpoint.
SuiteResult run_suite(const std::string& name, const Int& max_modulus, std::uint64_t seed,
                      std::uint64_t budget = kDefaultEnumBudget);

Json suite_to_json(const SuiteResult& r);

}  // namespace pfz

#endif
