#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gmred/config.hpp"
#include "gmred/examples/suite.hpp"
#include "gmred/harness/report.hpp"

namespace gmred {

/// Options for the verification battery.
struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Tolerance overrides keyed by check name.  A key without the '/...'
  /// suffix overrides the whole family (e.g. "jacobi-identity").
  std::map<std::string, double> tol;
};

/// Run every check applicable to the suite, in a fixed order: structure
/// invariants, symmetry identities, reduction postconditions, the
/// two-orderings equivalence, and reconstruction round trips.  Identical
/// seed and suite give an identical report list.  Domain or degeneracy
/// errors raised inside a check surface as a failed report (infinite
/// deviation) instead of an exception.
std::vector<CheckReport> verify_suite(const ExampleSuite& suite,
                                      const VerifyOptions& opt = {});

}  // namespace gmred
