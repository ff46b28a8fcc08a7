#include "norminf/check_suite.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "norminf/enumerate.hpp"
#include "norminf/errors.hpp"
#include "norminf/symmetry.hpp"
#include "norminf/transfer_system.hpp"

namespace norminf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

LatticePtr cube(std::size_t n) {
  static const char* specs[] = {"", "2", "2,3", "2,3,5", "2,3,5,7"};
  return Lattice::build(GroupSpec::parse(specs[n]));
}

// Runs `body`, which fills `computed` and returns pass, then applies the time
// limit (in ms, 0 for none).
template <typename Body>
CheckRow timed_row(std::string id, std::string claim, std::string expected, double limit_ms,
                   Body body) {
  CheckRow row{std::move(id), std::move(claim), std::move(expected), {}, false, 0.0};
  auto start = Clock::now();
  try {
    row.pass = body(row.computed);
  } catch (const std::exception& e) {
    row.computed = std::string("error: ") + e.what();
    row.pass = false;
  }
  row.elapsed_ms = ms_since(start);
  if (limit_ms > 0 && row.elapsed_ms >= limit_ms) {
    row.pass = false;
    row.computed += " (over " + std::to_string(static_cast<int>(limit_ms)) + " ms)";
  }
  return row;
}

CheckRow count_row(const std::string& id, const std::string& group, std::uint64_t expected,
                   Engine engine, double limit_ms, int threads) {
  return timed_row(id, "transfer systems on C(" + group + ")", std::to_string(expected), limit_ms,
                   [&](std::string& computed) {
                     auto lattice = Lattice::build(GroupSpec::parse(group));
                     EnumerationOptions o;
                     o.engine = engine;
                     o.threads = threads;
                     auto n = count_systems(*lattice, o);
                     computed = std::to_string(n) +
                                (engine == Engine::brute ? " [brute]" : " [dfs]");
                     return n == expected;
                   });
}

CheckRow comp_row(const std::string& id, std::size_t n, const std::vector<std::uint64_t>& expected,
                  int threads) {
  return timed_row(id, "Comp table for the " + std::to_string(n) + "-cube", join(expected), 0,
                   [&](std::string& computed) {
                     EnumerationOptions o;
                     o.threads = threads;
                     auto r = count_by_comp(*cube(n), o);
                     computed = join(*r.by_comp);
                     return *r.by_comp == expected;
                   });
}

// Closure laws on one arrow set: extensive, idempotent, result passes the
// axioms; monotone against a subset `sub`.
bool closure_laws_hold(const Lattice& l, const PairSet& sub, const PairSet& set) {
  PairSet c = close(l, set);
  PairSet cs = close(l, sub);
  return set.is_subset_of(c) && close(l, c) == c && !check(l, c) && cs.is_subset_of(c);
}

bool intersections_closed(const Lattice& l, const std::vector<PairSet>& systems) {
  for (std::size_t i = 0; i < systems.size(); ++i) {
    for (std::size_t j = i; j < systems.size(); ++j) {
      if (check(l, systems[i] & systems[j])) return false;
    }
  }
  return true;
}

void standard_rows(const CheckOptions& opt, CheckReport& report) {
  const int th = opt.threads;
  report.rows.push_back(count_row("AC1", "2", 2, Engine::dfs, 1.0, th));
  report.rows.push_back(count_row("AC2a", "2,3", 10, Engine::brute, 10.0, th));
  report.rows.push_back(count_row("AC2b", "2,3", 10, Engine::dfs, 10.0, th));
  report.rows.push_back(count_row("AC3a", "2,3,5", 450, Engine::brute, 10000.0, th));
  report.rows.push_back(count_row("AC3b", "2,3,5", 450, Engine::dfs, 1000.0, th));
  report.rows.push_back(comp_row("AC4", 3, {198, 27, 27, 198}, th));
  report.rows.push_back(comp_row("AC5", 2, {4, 2, 4}, th));

  report.rows.push_back(timed_row(
      "AC6", "prime-power chains C(p^n), n = 1..6, follow Catalan(n+1)", "2,5,14,42,132,429",
      30000.0, [&](std::string& computed) {
        std::vector<std::uint64_t> got;
        for (int n = 1; n <= 6; ++n) {
          auto l = Lattice::build(GroupSpec({{2, n}}));
          EnumerationOptions o;
          o.threads = th;
          got.push_back(count_systems(*l, o));
        }
        computed = join(got);
        return computed == "2,5,14,42,132,429";
      }));

  report.rows.push_back(timed_row(
      "AC7", "phi is an involution swapping Comp_d and Comp_{n-d}, n = 1..3",
      "0 counterexamples over 2+10+450", 5000.0, [&](std::string& computed) {
        std::uint64_t seen = 0;
        for (std::size_t n = 1; n <= 3; ++n) {
          auto r = verify_involution(*cube(n), th);
          seen += r.systems;
          if (!r.ok) {
            computed = *r.counterexample;
            return false;
          }
        }
        computed = "0 counterexamples over " + std::to_string(seen);
        return seen == 462;
      }));

  report.rows.push_back(timed_row(
      "AC8", "support property on C(2,3,5)", "0 counterexamples over 450", 0,
      [&](std::string& computed) {
        auto l = cube(3);
        auto r = support_sweep(*l, collect_systems(*l), th);
        computed = r.ok ? "0 counterexamples over " + std::to_string(r.systems) : *r.counterexample;
        return r.ok && r.systems == 450;
      }));

  report.rows.push_back(timed_row(
      "AC9", "brute and dfs engines agree on every lattice with <= 19 pairs",
      "identical outputs on 8 lattices", 0, [&](std::string& computed) {
        const char* groups[] = {"2", "2^2", "2^3", "2^4", "2^5", "2,3", "2^2,3", "2,3,5"};
        int agreed = 0;
        for (const char* g : groups) {
          auto l = Lattice::build(GroupSpec::parse(g));
          std::vector<PairSet> brute, dfs;
          enumerate_brute(*l, [&](const PairSet& s) { brute.push_back(s); });
          enumerate_dfs(*l, [&](const PairSet& s) { dfs.push_back(s); });
          if (brute != dfs) {
            computed = std::string("engines differ on ") + g;
            return false;
          }
          ++agreed;
        }
        computed = "identical outputs on " + std::to_string(agreed) + " lattices";
        return agreed == 8;
      }));

  report.rows.push_back(timed_row(
      "AC10", "closure laws and intersection-closedness",
      "all 2^5 subsets (pq), 10000 random subsets (pqr), all pairs n <= 3", 0,
      [&](std::string& computed) {
        auto pq = cube(2);
        for (std::uint64_t t = 0; t < 32; ++t) {
          for (std::uint64_t s = t;; s = (s - 1) & t) {
            if (!closure_laws_hold(*pq, PairSet::from_word(s), PairSet::from_word(t))) {
              computed = "closure law fails on pq subset " + std::to_string(t);
              return false;
            }
            if (s == 0) break;
          }
        }
        auto pqr = cube(3);
        std::mt19937_64 rng(opt.seed);
        for (int k = 0; k < 10000; ++k) {
          std::uint64_t t = rng() & ((std::uint64_t{1} << 19) - 1);
          std::uint64_t s = t & rng();
          if (!closure_laws_hold(*pqr, PairSet::from_word(s), PairSet::from_word(t))) {
            computed = "closure law fails on pqr subset " + std::to_string(t);
            return false;
          }
        }
        for (std::size_t n = 1; n <= 3; ++n) {
          auto l = cube(n);
          if (!intersections_closed(*l, collect_systems(*l))) {
            computed = "intersection leaves the transfer systems for n = " + std::to_string(n);
            return false;
          }
        }
        computed = "all laws hold";
        return true;
      }));
}

void deep_rows(const CheckOptions& opt, CheckReport& report) {
  std::vector<std::uint64_t> pinned(std::begin(kFourPrimeByComp), std::end(kFourPrimeByComp));
  report.rows.push_back(timed_row(
      "AC11", "4-prime stretch: dfs total, Comp symmetry, sampled involution (derived pin)",
      std::to_string(kSquarefreeTotals[4]) + " = " + join(pinned), 0,
      [&](std::string& computed) {
        auto l = cube(4);
        EnumerationOptions o;
        o.threads = opt.threads;
        auto r = count_by_comp(*l, o);
        const auto& c = *r.by_comp;
        bool symmetric = true;
        for (std::size_t d = 0; d <= 4; ++d) symmetric = symmetric && c[d] == c[4 - d];
        auto sample = sample_systems(*l, opt.n4_samples, opt.seed);
        auto inv = verify_involution(*l, sample, opt.threads);
        auto sup = support_sweep(*l, sample, opt.threads);
        computed = std::to_string(r.total) + " = " + join(c) + "; " +
                   (symmetric ? "symmetric" : "NOT symmetric") + "; involution on " +
                   std::to_string(inv.systems) + " samples " + (inv.ok ? "ok" : "FAILED") +
                   "; support " + (sup.ok ? "ok" : "FAILED");
        return symmetric && inv.ok && sup.ok && r.total == kSquarefreeTotals[4] && c == pinned;
      }));
}

}  // namespace

bool CheckReport::pass() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return !rows.empty();
}

std::uint64_t catalan(unsigned n) {
  std::uint64_t c = 1;
  for (unsigned k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::optional<std::uint64_t> reference_total(const std::string& group_spec) {
  GroupSpec spec = GroupSpec::parse(group_spec);
  if (spec.rank() == 1) return catalan(static_cast<unsigned>(spec.factors()[0].multiplicity) + 1);
  if (spec.squarefree() && spec.rank() < std::size(kSquarefreeTotals)) {
    return kSquarefreeTotals[spec.rank()];
  }
  return std::nullopt;
}

CheckReport run_checks(const CheckOptions& options) {
  CheckReport report;
  if (options.group) {
    const std::string& g = *options.group;
    auto lattice = Lattice::build(GroupSpec::parse(g));
    if (auto expected = reference_total(g)) {
      report.rows.push_back(count_row("group", lattice->spec().to_string(), *expected, Engine::dfs,
                                      0, options.threads));
    } else {
      report.rows.push_back(timed_row(
          "group", "engine agreement on C(" + lattice->spec().to_string() + ")",
          "brute = dfs", 0, [&](std::string& computed) {
            EnumerationOptions dfs;
            dfs.threads = options.threads;
            auto n = count_systems(*lattice, dfs);
            EnumerationOptions brute = dfs;
            brute.engine = Engine::brute;
            auto m = count_systems(*lattice, brute);
            computed = std::to_string(n) + " [dfs], " + std::to_string(m) + " [brute]";
            return n == m;
          }));
    }
    return report;
  }
  standard_rows(options, report);
  if (options.deep) deep_rows(options, report);
  return report;
}

void print_report(std::ostream& out, const CheckReport& report) {
  for (const auto& r : report.rows) {
    out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(5) << r.id << ' ' << r.claim
        << " | expected " << r.expected << " | got " << r.computed << " | " << std::fixed
        << std::setprecision(2) << r.elapsed_ms << " ms\n";
  }
  std::size_t passed = 0;
  for (const auto& r : report.rows) passed += r.pass ? 1 : 0;
  out << (report.pass() ? "ALL PASS" : "FAILURES") << " (" << passed << "/" << report.rows.size()
      << ")\n";
}

}  // namespace norminf
