#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace norminf {

struct CheckRow {
  std::string id;
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct CheckReport {
  std::vector<CheckRow> rows;
  bool pass() const;
};

struct CheckOptions {
  bool deep = false;           // include the 4-prime sweep
  std::uint64_t seed = 0;      // random subsets and n = 4 samples
  int threads = 0;
  std::optional<std::string> group;  // run only a count row for this group
  std::size_t n4_samples = 2000;
};

/// Known totals by number of primes. The four-prime values are regression
/// pins from a run in which both symmetry checks passed.
inline constexpr std::uint64_t kSquarefreeTotals[] = {1, 2, 10, 450, 5389480};
inline constexpr std::uint64_t kFourPrimeByComp[] = {2663121, 25568, 12102, 25568, 2663121};

std::uint64_t catalan(unsigned n);

/// Reference total for a group when one is known (prime powers via the
/// Catalan law, squarefree up to four primes).
std::optional<std::uint64_t> reference_total(const std::string& group_spec);

CheckReport run_checks(const CheckOptions& options);
void print_report(std::ostream& out, const CheckReport& report);

}  // namespace norminf
