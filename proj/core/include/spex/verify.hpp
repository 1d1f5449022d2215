#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spex {

struct VerifyOptions {
  int n_lo = 0, n_hi = 0;  // 0 keeps the per-theorem default range
  int r_lo = 0, r_hi = 0;
  std::vector<double> p_values;      // kang_nikiforov, p_main
  std::vector<double> alpha_values;  // nikiforov_alpha
  int jobs = 1;
  uint64_t seed = 1;
};

struct VerificationRow {
  std::string theorem;
  int n = 0;
  int r = 0;
  std::string param;  // "p=...", "alpha=...", or empty
  double found = 0.0;
  double expected = 0.0;
  std::vector<std::string> witnesses;  // graph6 (canonical for n <= 10)
  bool unique = false;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::string theorem;
  std::vector<VerificationRow> rows;
  bool pass = true;            // every row passes
  bool empty_warning = false;  // some row had an empty graph class, or no rows
};

const std::vector<std::string>& theorem_catalog();

// Runs the desk-scale check for one catalog entry.  Unknown ids throw.
VerificationReport verify_theorem(const std::string& id,
                                  const VerifyOptions& opt = {});

}  // namespace spex
