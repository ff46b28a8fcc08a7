#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "norminf/lattice.hpp"
#include "norminf/pair_set.hpp"
#include "norminf/transfer_system.hpp"

namespace norminf {

/// Decomposition class of a transfer system on the n-cube.
///
/// `g_zero` is the meet of all sources of arrows into G (G itself when there
/// are none) and `d` = n - (number of primes dividing g_zero). d = 0 means no
/// arrow reaches G; d = n means 1 -> G is present.
struct CompClass {
  DivisorId g_zero = 0;
  int d = 0;

  friend bool operator==(const CompClass&, const CompClass&) = default;
};

// All functions below require a squarefree lattice and throw
// UnsupportedOperation otherwise.

DivisorId g_zero(const Lattice& lattice, const PairSet& members);
CompClass comp_index(const Lattice& lattice, const PairSet& members);

/// True iff every arrow either starts at or above g_zero, or lies in a bottom
/// facet B_i (subgroups not divisible by p_i) for some prime p_i of g_zero.
/// There are n - d such facets.
bool support_check(const Lattice& lattice, const PairSet& members);

/// The involution swapping Comp_d and Comp_{n-d}. With c the prime-set
/// complement, A -> B is in the image iff the input has no arrow X -> c(A)
/// with c(B) <= X < c(A). On cube edges this is the edge complement with
/// vertices relabelled H -> G/H; on 1 -> G it is "no arrow into G".
PairSet phi(const Lattice& lattice, const PairSet& members);

inline CompClass comp_index(const TransferSystem& t) { return comp_index(t.lattice(), t.members()); }
inline bool support_check(const TransferSystem& t) { return support_check(t.lattice(), t.members()); }
TransferSystem phi(const TransferSystem& t);

/// Total recovered from the lower half of a Comp table using
/// |Comp_d| = |Comp_{n-d}|: twice the classes below n/2, plus the middle
/// class once when n is even.
std::uint64_t comp_pairing_total(const std::vector<std::uint64_t>& by_comp);

struct InvolutionReport {
  bool ok = true;
  std::uint64_t systems = 0;
  std::vector<std::uint64_t> by_comp;
  std::optional<std::string> counterexample;
};

/// Checks phi(phi(t)) = t, that phi(t) satisfies the axioms and that
/// d(phi(t)) = n - d(t) for every t in `systems`. Parallel over systems; the
/// reported counterexample is the first one in list order.
InvolutionReport verify_involution(const Lattice& lattice, const std::vector<PairSet>& systems,
                                   int threads = 0);
/// Exhaustive form: enumerates the lattice first.
InvolutionReport verify_involution(const Lattice& lattice, int threads = 0);

struct SupportReport {
  bool ok = true;
  std::uint64_t systems = 0;
  std::optional<std::string> counterexample;
};

SupportReport support_sweep(const Lattice& lattice, const std::vector<PairSet>& systems,
                            int threads = 0);

}  // namespace norminf
