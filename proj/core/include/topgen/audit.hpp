#ifndef TOPGEN_AUDIT_HPP
#define TOPGEN_AUDIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "topgen/engine.hpp"

namespace topgen {

struct AuditReport {
  int checks_run = 0;
  std::uint64_t domain_size = 0;
  std::vector<std::string> failures;
  std::vector<std::string> gaps;  // data-coverage gaps, listed but not fatal
  double elapsed_seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

struct AuditOptions {
  bool fast = false;  // restrict to primes {2,3,5,7,31}
  bool verbose = false;
};

AuditReport run_audit(const Engine& eng, const AuditOptions& opt = {});

}  // namespace topgen

#endif
