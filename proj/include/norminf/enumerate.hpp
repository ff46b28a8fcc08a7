#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "norminf/lattice.hpp"
#include "norminf/pair_set.hpp"

namespace norminf {

enum class Engine { brute, dfs };

using SystemVisitor = std::function<void(const PairSet&)>;

inline constexpr std::size_t kDefaultBruteCeiling = 25;

/// Tests every subset of the pair set against the axioms, in increasing
/// bit-vector order. Serial. Throws LimitExceeded when the lattice has more
/// than `ceiling` pairs (or more than 63, whatever the ceiling).
void enumerate_brute(const Lattice& lattice, const SystemVisitor& visit,
                     std::size_t ceiling = kDefaultBruteCeiling);

/// Depth-first search over pairs (highest index first, absent before
/// present) with unit propagation of the axioms read as Horn clauses.
/// Emits in increasing bit-vector order. Serial reference implementation.
void enumerate_dfs(const Lattice& lattice, const SystemVisitor& visit);

struct EnumerationOptions {
  Engine engine = Engine::dfs;
  std::size_t brute_ceiling = kDefaultBruteCeiling;
  int threads = 0;  // 0: OpenMP default, capped by NORMINF_THREADS
};

struct EnumerationResult {
  std::uint64_t total = 0;
  std::optional<std::vector<std::uint64_t>> by_comp;
  std::optional<std::vector<PairSet>> systems;
};

/// Parallel kernels. Results are identical to the serial engines for any
/// thread count.
std::uint64_t count_systems(const Lattice& lattice, const EnumerationOptions& options = {});
std::vector<PairSet> collect_systems(const Lattice& lattice,
                                     const EnumerationOptions& options = {});

/// Counts per Comp class d = 0..n. Squarefree lattices only.
EnumerationResult count_by_comp(const Lattice& lattice, const EnumerationOptions& options = {});

/// Uniform sample (reservoir, seeded) of `k` systems from a streaming DFS
/// pass, returned in increasing order. Never materializes the full list.
std::vector<PairSet> sample_systems(const Lattice& lattice, std::size_t k, std::uint64_t seed);

/// Worker count after applying the NORMINF_THREADS cap.
int worker_count(int requested = 0);

}  // namespace norminf
