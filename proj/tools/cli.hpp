#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <ffmoment/enumerate.hpp>

namespace ffm::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

struct GRange {
  int lo = 1;
  int hi = 1;
};

/// "N" or "a:b" with 1 <= a <= b; throws std::invalid_argument.
GRange parse_g_range(const std::string& text);

/// Default size guard: q^{2g+1} <= 19683.
bool within_default_range(std::uint32_t q, int g);

struct CheckResult {
  std::string name;
  std::string scope;
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

/// The exact-identity suite behind `selftest`, for g = 1..max_g over F_q.
/// With corrupt_coefficients the functional-equation check sees a perturbed
/// copy of one L-polynomial; nothing else is affected.
std::vector<CheckResult> run_selftest(std::uint32_t q, int max_g, unsigned workers, IrreducibleCatalog& catalog,
                                      bool corrupt_coefficients = false);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffm::cli
