#include "norminf/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "horn_search.hpp"
#include "norminf/errors.hpp"
#include "norminf/symmetry.hpp"
#include "norminf/transfer_system.hpp"

namespace norminf {

namespace {

constexpr std::size_t kBruteHardLimit = 63;
constexpr std::size_t kBruteChunkBits = 12;
constexpr std::size_t kSplitDepth = 10;

std::uint64_t brute_candidates(const Lattice& lattice, std::size_t ceiling) {
  const std::size_t pairs = lattice.pair_count();
  if (pairs > ceiling || pairs > kBruteHardLimit) {
    throw LimitExceeded("brute-force engine refuses " + std::to_string(pairs) +
                        " pairs (ceiling " + std::to_string(std::min(ceiling, kBruteHardLimit)) +
                        "); use the dfs engine");
  }
  return std::uint64_t{1} << pairs;
}

// Runs the brute engine over fixed-size chunks of the candidate range in
// parallel. Chunk k covers masks [k * chunk, (k + 1) * chunk), so per-chunk
// results concatenate in increasing order.
template <typename Acc, typename Visit>
std::vector<Acc> brute_partitioned(const Lattice& lattice, std::size_t ceiling, int threads,
                                   Visit visit) {
  const std::uint64_t total = brute_candidates(lattice, ceiling);
  const std::uint64_t chunk = std::min<std::uint64_t>(total, std::uint64_t{1} << kBruteChunkBits);
  const auto chunks = static_cast<std::int64_t>(total / chunk);
  std::vector<Acc> acc(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count(threads))
  for (std::int64_t k = 0; k < chunks; ++k) {
    const std::uint64_t begin = static_cast<std::uint64_t>(k) * chunk;
    for (std::uint64_t mask = begin; mask < begin + chunk; ++mask) {
      PairSet candidate = PairSet::from_word(mask);
      if (!check(lattice, candidate)) visit(acc[static_cast<std::size_t>(k)], candidate);
    }
  }
  return acc;
}

// Splits the DFS tree at a fixed decision depth and searches each subtree as
// an independent task. Prefixes come out of the splitter in increasing order.
template <typename Acc, typename Visit>
std::vector<Acc> dfs_partitioned(const Lattice& lattice, int threads, Visit visit) {
  detail::HornProgram program(lattice);
  const int workers = worker_count(threads);
  std::vector<std::vector<detail::Decision>> prefixes;
  {
    detail::HornSearch splitter(program);
    prefixes = splitter.frontier(workers > 1 ? kSplitDepth : 0);
  }
  std::vector<Acc> acc(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(prefixes.size()); ++k) {
    auto& slot = acc[static_cast<std::size_t>(k)];
    detail::HornSearch search(program);
    for (const auto& d : prefixes[static_cast<std::size_t>(k)]) search.decide(d.var, d.value);
    search.search([&](const PairSet& s) { visit(slot, s); });
  }
  return acc;
}

template <typename Acc, typename Visit>
std::vector<Acc> partitioned(const Lattice& lattice, const EnumerationOptions& options,
                             Visit visit) {
  if (options.engine == Engine::brute) {
    return brute_partitioned<Acc>(lattice, options.brute_ceiling, options.threads, visit);
  }
  return dfs_partitioned<Acc>(lattice, options.threads, visit);
}

}  // namespace

int worker_count(int requested) {
  int workers = requested > 0 ? requested : omp_get_max_threads();
  if (const char* cap = std::getenv("NORMINF_THREADS")) {
    int limit = std::atoi(cap);
    if (limit > 0) workers = std::min(workers, limit);
  }
  return std::max(workers, 1);
}

void enumerate_brute(const Lattice& lattice, const SystemVisitor& visit, std::size_t ceiling) {
  const std::uint64_t total = brute_candidates(lattice, ceiling);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    PairSet candidate = PairSet::from_word(mask);
    if (!check(lattice, candidate)) visit(candidate);
  }
}

void enumerate_dfs(const Lattice& lattice, const SystemVisitor& visit) {
  detail::HornProgram program(lattice);
  detail::HornSearch search(program);
  search.search([&](const PairSet& s) { visit(s); });
}

std::uint64_t count_systems(const Lattice& lattice, const EnumerationOptions& options) {
  auto counts = partitioned<std::uint64_t>(
      lattice, options, [](std::uint64_t& c, const PairSet&) { ++c; });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::vector<PairSet> collect_systems(const Lattice& lattice, const EnumerationOptions& options) {
  auto parts = partitioned<std::vector<PairSet>>(
      lattice, options, [](std::vector<PairSet>& out, const PairSet& s) { out.push_back(s); });
  std::vector<PairSet> all;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  all.reserve(total);
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

std::vector<PairSet> sample_systems(const Lattice& lattice, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PairSet> reservoir;
  reservoir.reserve(k);
  std::uint64_t seen = 0;
  enumerate_dfs(lattice, [&](const PairSet& s) {
    ++seen;
    if (reservoir.size() < k) {
      reservoir.push_back(s);
    } else if (k > 0) {
      std::uniform_int_distribution<std::uint64_t> pick(0, seen - 1);
      auto slot = pick(rng);
      if (slot < k) reservoir[slot] = s;
    }
  });
  std::sort(reservoir.begin(), reservoir.end());
  return reservoir;
}

EnumerationResult count_by_comp(const Lattice& lattice, const EnumerationOptions& options) {
  if (!lattice.squarefree()) {
    throw UnsupportedOperation("Comp classes need a squarefree group, got " +
                               lattice.spec().to_string());
  }
  const std::size_t buckets = lattice.rank() + 1;
  auto parts = partitioned<std::vector<std::uint64_t>>(
      lattice, options, [&](std::vector<std::uint64_t>& c, const PairSet& s) {
        if (c.empty()) c.assign(buckets, 0);
        ++c[static_cast<std::size_t>(comp_index(lattice, s).d)];
      });
  EnumerationResult result;
  std::vector<std::uint64_t> by_comp(buckets, 0);
  for (const auto& p : parts) {
    for (std::size_t d = 0; d < p.size(); ++d) by_comp[d] += p[d];
  }
  for (auto c : by_comp) result.total += c;
  result.by_comp = std::move(by_comp);
  return result;
}

}  // namespace norminf
