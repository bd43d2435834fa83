// Differential conformance suite: every closed-form answer is replayed
// against definition-chasing oracles over all sandwich elements at a given
// scale.  Used by the `verify` CLI subcommand and the test harness.

#ifndef SANDWICH_VERIFY_HPP
#define SANDWICH_VERIFY_HPP

#include <ostream>
#include <string>

#include "sandwich/sandwich.hpp"

namespace sandwich {

struct VerifyOptions {
  Variant variant = Variant::PT;
  int max_size = 2;
  long long cap = kDefaultCap;
  long long budget = 2'000'000;
  bool include_rank_checks = true;
};

struct VerifyOutcome {
  bool ok = true;
  bool budget_exhausted = false;
  long long checks = 0;
  long long mismatches = 0;
};

// Runs the suite, streaming one deterministic line per check group.
VerifyOutcome run_verify(const VerifyOptions& opt, std::ostream& out);

}  // namespace sandwich

#endif  // SANDWICH_VERIFY_HPP
