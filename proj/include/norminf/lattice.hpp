#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "norminf/group_spec.hpp"

namespace norminf {

/// Position of a subgroup in a lattice's canonical divisor list.
using DivisorId = std::uint32_t;

/// A subgroup of C_m, written as its exponent vector over the primes of m.
struct Subgroup {
  std::vector<int> exponents;

  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// An arrow H -> K with H strictly below K (a norm map).
struct Arrow {
  DivisorId source = 0;
  DivisorId target = 0;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

enum class Naming { concrete, symbolic };

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

/// Sub-lattice [bottom, top] of a lattice together with its embedding.
struct Interval {
  LatticePtr lattice;
  std::vector<DivisorId> divisor_map;  // sub divisor -> parent divisor
  std::vector<std::size_t> pair_map;   // sub pair index -> parent pair index
};

/// The subgroup lattice of a cyclic group, i.e. the divisor lattice of m.
///
/// Divisors are listed lexicographically by exponent vector (first prime most
/// significant), so the trivial subgroup is id 0 and G is the last id. Strict
/// comparable pairs are listed by (source id, target id); that order fixes the
/// bit positions of every transfer-system encoding. Immutable once built.
class Lattice {
 public:
  static constexpr std::size_t kMaxDivisors = 1024;

  /// Throws LimitExceeded past kMaxDivisors.
  static LatticePtr build(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  std::size_t rank() const { return spec_.rank(); }
  bool squarefree() const { return spec_.squarefree(); }

  std::size_t size() const { return subgroups_.size(); }
  DivisorId bottom() const { return 0; }
  DivisorId top() const { return static_cast<DivisorId>(size() - 1); }

  const Subgroup& subgroup(DivisorId id) const { return subgroups_.at(id); }
  /// Throws InvalidArgument when the vector is not a divisor of m.
  DivisorId index_of(const Subgroup& h) const;
  std::optional<DivisorId> find(const Subgroup& h) const;

  bool leq(DivisorId a, DivisorId b) const { return leq_[a * size() + b] != 0; }
  bool less(DivisorId a, DivisorId b) const { return a != b && leq(a, b); }
  DivisorId meet(DivisorId a, DivisorId b) const { return meet_[a * size() + b]; }
  DivisorId join(DivisorId a, DivisorId b) const { return join_[a * size() + b]; }
  /// Total number of prime factors (with multiplicity).
  int height(DivisorId a) const { return heights_[a]; }

  std::span<const Arrow> pairs() const { return pairs_; }
  std::size_t pair_count() const { return pairs_.size(); }
  const Arrow& pair(std::size_t index) const { return pairs_.at(index); }
  std::optional<std::size_t> find_pair(DivisorId source, DivisorId target) const;
  /// Throws InvalidArgument if source is not strictly below target.
  std::size_t pair_index(DivisorId source, DivisorId target) const;
  /// Pair indices with the given source, ascending by target.
  std::pair<std::size_t, std::size_t> pairs_from(DivisorId source) const {
    return {source_begin_[source], source_begin_[source + 1]};
  }

  /// Subgroup on the complementary prime set. Squarefree lattices only.
  DivisorId complement(DivisorId h) const;

  /// Throws InvalidArgument unless bottom <= top.
  Interval interval(DivisorId bottom, DivisorId top) const;

  std::string name(DivisorId id, Naming naming = Naming::concrete) const;

  /// FNV-1a over the canonical pair list; identifies the bit layout.
  std::uint64_t fingerprint() const;

 private:
  explicit Lattice(GroupSpec spec);

  GroupSpec spec_;
  std::vector<int> radix_;
  std::vector<Subgroup> subgroups_;
  std::vector<int> heights_;
  std::vector<std::uint8_t> leq_;
  std::vector<DivisorId> meet_;
  std::vector<DivisorId> join_;
  std::vector<Arrow> pairs_;
  std::vector<std::int32_t> pair_lookup_;
  std::vector<std::size_t> source_begin_;
};

inline LatticePtr build_lattice(const GroupSpec& spec) { return Lattice::build(spec); }

}  // namespace norminf
