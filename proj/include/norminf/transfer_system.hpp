#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "norminf/lattice.hpp"
#include "norminf/pair_set.hpp"

namespace norminf {

enum class Axiom { transitivity, restriction };

/// Witness that a set of arrows is not a transfer system.
///
/// Transitivity: `first` = H->K and `second` = K->L are members, `missing` =
/// H->L is not. Restriction: `first` = H->K is a member, `intersect_with` = L,
/// `missing` = (H meet L)->(K meet L) is not.
struct Violation {
  Axiom kind = Axiom::transitivity;
  Arrow first;
  std::optional<Arrow> second;
  std::optional<DivisorId> intersect_with;
  Arrow missing;

  std::string describe(const Lattice& lattice, Naming naming = Naming::concrete) const;
};

/// Throws LimitExceeded when the lattice has more pairs than a PairSet holds.
void require_pair_capacity(const Lattice& lattice);

/// Converts an arrow list to a bit vector; throws InvalidArgument on arrows
/// that are not strict comparable pairs of the lattice.
PairSet to_pair_set(const Lattice& lattice, std::span<const Arrow> arrows);
std::vector<Arrow> to_arrows(const Lattice& lattice, const PairSet& members);

/// First axiom violation in canonical order, or nullopt when `members` is a
/// transfer system. Member arrows are scanned by pair index; for each one,
/// transitivity partners (by pair index) are tried before restriction
/// subgroups (by divisor id).
std::optional<Violation> check(const Lattice& lattice, const PairSet& members);
std::optional<Violation> check(const Lattice& lattice, std::span<const Arrow> arrows);

/// Smallest transfer system containing `members` (round-based fixed point).
PairSet close(const Lattice& lattice, PairSet members);

/// A set of arrows satisfying transitivity and restriction on its lattice.
class TransferSystem {
 public:
  /// Throws InvalidArgument carrying the violation if the axioms fail.
  TransferSystem(LatticePtr lattice, const PairSet& members);

  static TransferSystem empty(LatticePtr lattice);
  static TransferSystem full(LatticePtr lattice);
  static TransferSystem from_arrows(LatticePtr lattice, std::span<const Arrow> arrows);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const PairSet& members() const { return members_; }
  bool contains(DivisorId source, DivisorId target) const;
  std::vector<Arrow> arrows() const { return to_arrows(*lattice_, members_); }
  std::size_t size() const { return members_.count(); }

  friend bool operator==(const TransferSystem& a, const TransferSystem& b) {
    return a.lattice_->spec() == b.lattice_->spec() && a.members_ == b.members_;
  }

 private:
  struct Trusted {};
  TransferSystem(Trusted, LatticePtr lattice, const PairSet& members)
      : lattice_(std::move(lattice)), members_(members) {}

  LatticePtr lattice_;
  PairSet members_;

  friend TransferSystem closure(LatticePtr, const PairSet&);
  friend TransferSystem restrict(const TransferSystem&, DivisorId, DivisorId);
  friend TransferSystem meet_ts(const TransferSystem&, const TransferSystem&);
  friend TransferSystem join_ts(const TransferSystem&, const TransferSystem&);
};

TransferSystem closure(LatticePtr lattice, const PairSet& members);
TransferSystem closure(LatticePtr lattice, std::span<const Arrow> arrows);

/// The induced system on the interval [bottom, top], expressed on the
/// interval's own lattice.
TransferSystem restrict(const TransferSystem& t, DivisorId bottom, DivisorId top);

/// Intersection of members. Throws LatticeMismatch across lattices.
TransferSystem meet_ts(const TransferSystem& a, const TransferSystem& b);
/// Closure of the union. Throws LatticeMismatch across lattices.
TransferSystem join_ts(const TransferSystem& a, const TransferSystem& b);

}  // namespace norminf
