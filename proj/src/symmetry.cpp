#include "norminf/symmetry.hpp"

#include <omp.h>

#include <sstream>

#include "norminf/enumerate.hpp"
#include "norminf/errors.hpp"

namespace norminf {

namespace {

void require_cube(const Lattice& lattice, const char* what) {
  if (!lattice.squarefree()) {
    throw UnsupportedOperation(std::string(what) + " needs a squarefree group, got " +
                               lattice.spec().to_string());
  }
}

std::string arrows_text(const Lattice& lattice, const PairSet& members) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  members.for_each([&](std::size_t i) {
    const Arrow& a = lattice.pair(i);
    out << (first ? "" : ", ") << lattice.name(a.source) << "->" << lattice.name(a.target);
    first = false;
  });
  out << '}';
  return out.str();
}

// Per-system involution failure, or empty string.
std::string involution_failure(const Lattice& lattice, const PairSet& t) {
  const int n = static_cast<int>(lattice.rank());
  PairSet image = phi(lattice, t);
  if (auto v = check(lattice, image)) {
    return "phi" + arrows_text(lattice, t) + " is not a transfer system (" +
           v->describe(lattice) + ")";
  }
  if (phi(lattice, image) != t) {
    return "phi(phi(t)) != t for t = " + arrows_text(lattice, t);
  }
  int d = comp_index(lattice, t).d;
  int e = comp_index(lattice, image).d;
  if (d + e != n) {
    return "comp index " + std::to_string(d) + " maps to " + std::to_string(e) + " for t = " +
           arrows_text(lattice, t);
  }
  return {};
}

}  // namespace

DivisorId g_zero(const Lattice& lattice, const PairSet& members) {
  require_cube(lattice, "g_zero");
  DivisorId g = lattice.top();
  for (DivisorId h = 0; h < lattice.top(); ++h) {
    if (members.test(lattice.pair_index(h, lattice.top()))) g = lattice.meet(g, h);
  }
  return g;
}

CompClass comp_index(const Lattice& lattice, const PairSet& members) {
  DivisorId g = g_zero(lattice, members);
  return CompClass{g, static_cast<int>(lattice.rank()) - lattice.height(g)};
}

bool support_check(const Lattice& lattice, const PairSet& members) {
  DivisorId g = g_zero(lattice, members);
  bool ok = true;
  members.for_each([&](std::size_t i) {
    const Arrow& a = lattice.pair(i);
    bool in_core = lattice.leq(g, a.source);
    bool in_bottom_facet = !lattice.leq(g, a.target);
    ok = ok && (in_core || in_bottom_facet);
  });
  return ok;
}

PairSet phi(const Lattice& lattice, const PairSet& members) {
  require_cube(lattice, "phi");
  require_pair_capacity(lattice);
  PairSet image;
  for (std::size_t k = 0; k < lattice.pair_count(); ++k) {
    const Arrow& ab = lattice.pair(k);
    const DivisorId upper = lattice.complement(ab.source);
    const DivisorId lower = lattice.complement(ab.target);
    bool blocked = false;
    for (DivisorId x = lower; x < upper && !blocked; ++x) {
      if (lattice.leq(lower, x) && lattice.less(x, upper)) {
        blocked = members.test(lattice.pair_index(x, upper));
      }
    }
    if (!blocked) image.set(k);
  }
  return image;
}

TransferSystem phi(const TransferSystem& t) {
  return TransferSystem(t.lattice_ptr(), phi(t.lattice(), t.members()));
}

std::uint64_t comp_pairing_total(const std::vector<std::uint64_t>& by_comp) {
  if (by_comp.empty()) return 0;
  const std::size_t n = by_comp.size() - 1;
  std::uint64_t total = 0;
  for (std::size_t d = 0; 2 * d < n; ++d) total += 2 * by_comp[d];
  if (n % 2 == 0) total += by_comp[n / 2];
  return total;
}

InvolutionReport verify_involution(const Lattice& lattice, const std::vector<PairSet>& systems,
                                   int threads) {
  require_cube(lattice, "verify_involution");
  const std::size_t count = systems.size();
  const std::size_t buckets = lattice.rank() + 1;
  std::vector<std::uint8_t> bad(count, 0);
  std::vector<std::uint64_t> by_comp(buckets, 0);

#pragma omp parallel num_threads(worker_count(threads))
  {
    std::vector<std::uint64_t> local(buckets, 0);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      const auto& t = systems[static_cast<std::size_t>(i)];
      ++local[static_cast<std::size_t>(comp_index(lattice, t).d)];
      if (!involution_failure(lattice, t).empty()) bad[static_cast<std::size_t>(i)] = 1;
    }
#pragma omp critical
    for (std::size_t d = 0; d < buckets; ++d) by_comp[d] += local[d];
  }

  InvolutionReport report;
  report.systems = count;
  report.by_comp = std::move(by_comp);
  for (std::size_t i = 0; i < count; ++i) {
    if (bad[i]) {
      report.ok = false;
      report.counterexample = involution_failure(lattice, systems[i]);
      break;
    }
  }
  return report;
}

InvolutionReport verify_involution(const Lattice& lattice, int threads) {
  require_cube(lattice, "verify_involution");
  EnumerationOptions options;
  options.threads = threads;
  return verify_involution(lattice, collect_systems(lattice, options), threads);
}

SupportReport support_sweep(const Lattice& lattice, const std::vector<PairSet>& systems,
                            int threads) {
  require_cube(lattice, "support_sweep");
  const std::size_t count = systems.size();
  std::vector<std::uint8_t> bad(count, 0);
#pragma omp parallel for schedule(dynamic, 256) num_threads(worker_count(threads))
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    if (!support_check(lattice, systems[static_cast<std::size_t>(i)])) {
      bad[static_cast<std::size_t>(i)] = 1;
    }
  }
  SupportReport report;
  report.systems = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (bad[i]) {
      report.ok = false;
      report.counterexample = "arrow outside the core and the bottom facets in " +
                              arrows_text(lattice, systems[i]);
      break;
    }
  }
  return report;
}

}  // namespace norminf
