#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace norminf {

struct PrimePower {
  std::uint64_t prime = 0;
  int multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A cyclic group C_m described by the prime factorization of m.
///
/// Primes are kept strictly increasing. Only the multiplicities influence
/// any computation; the primes themselves are labels for display.
class GroupSpec {
 public:
  /// Throws InvalidArgument on an empty list, a non-prime, a repeated
  /// prime or a multiplicity below 1. Input order does not matter.
  explicit GroupSpec(std::vector<PrimePower> factors);

  /// Parses "2,3,5", "2^3", "2^2,3". Whitespace around tokens is ignored.
  static GroupSpec parse(std::string_view text);

  /// Canonical string form, e.g. "2^2,3".
  std::string to_string() const;

  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool squarefree() const;
  std::vector<int> multiplicities() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  struct Unchecked {};
  GroupSpec(Unchecked, std::vector<PrimePower> factors)
      : factors_(std::move(factors)) {}

  std::vector<PrimePower> factors_;

  friend class Lattice;
};

bool is_prime(std::uint64_t n);

}  // namespace norminf
