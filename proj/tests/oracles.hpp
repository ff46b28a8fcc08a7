#pragma once

// Test-only reference computations. None of these call the library's axiom
// checker, closure, DFS engine or phi; they work from exponent vectors or
// from the recursive facet construction directly.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "norminf/lattice.hpp"
#include "norminf/pair_set.hpp"

namespace oracle {

using Vec = std::vector<int>;
using ArrowSet = std::set<std::pair<Vec, Vec>>;

inline std::vector<Vec> all_vectors(const std::vector<int>& mult) {
  std::vector<Vec> out{Vec{}};
  for (int m : mult) {
    std::vector<Vec> next;
    for (const auto& v : out) {
      for (int e = 0; e <= m; ++e) {
        auto w = v;
        w.push_back(e);
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Vec meet(const Vec& a, const Vec& b) {
  Vec m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::min(a[i], b[i]);
  return m;
}

inline std::size_t strict_pairs(const std::vector<int>& mult) {
  auto vs = all_vectors(mult);
  std::size_t n = 0;
  for (const auto& a : vs) {
    for (const auto& b : vs) n += (a != b && leq(a, b)) ? 1 : 0;
  }
  return n;
}

/// Both axioms quantified literally over arrows and subgroups.
inline bool is_transfer_system(const std::vector<int>& mult, const ArrowSet& arrows) {
  auto vs = all_vectors(mult);
  for (const auto& [h, k] : arrows) {
    for (const auto& [k2, l] : arrows) {
      if (k2 == k && !arrows.count({h, l})) return false;
    }
    for (const auto& sub : vs) {
      auto a = meet(h, sub), b = meet(k, sub);
      if (a != b && !arrows.count({a, b})) return false;
    }
  }
  return true;
}

inline ArrowSet to_arrow_set(const norminf::Lattice& l, const norminf::PairSet& s) {
  ArrowSet out;
  s.for_each([&](std::size_t i) {
    const auto& a = l.pair(i);
    out.insert({l.subgroup(a.source).exponents, l.subgroup(a.target).exponents});
  });
  return out;
}

/// Phi by recursion over facets: every arrow other than bottom -> top lies in
/// a facet F (coordinate i fixed); its image membership is read off phi of
/// the opposite facet F' (coordinate i toggled), translated back. The big
/// diagonal is present iff the input has no arrow into top. `last_coordinate`
/// picks the shared coordinate when there are several; the result should not
/// depend on it.
inline norminf::PairSet phi_recursive(const norminf::Lattice& l, const norminf::PairSet& d,
                                      bool last_coordinate = false) {
  using namespace norminf;
  PairSet image;
  const std::size_t n = l.rank();
  for (std::size_t k = 0; k < l.pair_count(); ++k) {
    const Arrow& ab = l.pair(k);
    if (ab.source == l.bottom() && ab.target == l.top()) {
      bool into_top = false;
      for (DivisorId h = 0; h < l.top(); ++h) into_top = into_top || d.test(l.pair_index(h, l.top()));
      image.assign(k, !into_top);
      continue;
    }
    const auto& a = l.subgroup(ab.source).exponents;
    const auto& b = l.subgroup(ab.target).exponents;
    std::vector<std::size_t> shared;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == b[i]) shared.push_back(i);
    }
    std::size_t i = last_coordinate ? shared.back() : shared.front();
    const int opposite = 1 - a[i];
    Vec lo(n, 0), hi(n, 1);
    lo[i] = hi[i] = opposite;
    Interval facet = l.interval(l.index_of(Subgroup{lo}), l.index_of(Subgroup{hi}));
    PairSet sub;
    for (std::size_t s = 0; s < facet.pair_map.size(); ++s) {
      if (d.test(facet.pair_map[s])) sub.set(s);
    }
    PairSet sub_image = phi_recursive(*facet.lattice, sub, last_coordinate);
    Vec ta = a, tb = b;
    ta[i] = tb[i] = opposite;
    auto pa = l.index_of(Subgroup{ta}), pb = l.index_of(Subgroup{tb});
    bool present = false;
    for (std::size_t s = 0; s < facet.pair_map.size(); ++s) {
      const Arrow& parent = l.pair(facet.pair_map[s]);
      if (parent.source == pa && parent.target == pb) present = sub_image.test(s);
    }
    image.assign(k, present);
  }
  return image;
}

}  // namespace oracle
