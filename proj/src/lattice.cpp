#include "norminf/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "norminf/errors.hpp"

namespace norminf {

namespace {

constexpr const char* kLetters = "pqrstuvw";

std::string prime_letter(std::size_t position) {
  if (position < 8) return std::string(1, kLetters[position]);
  return "p" + std::to_string(position + 1);
}

}  // namespace

LatticePtr Lattice::build(const GroupSpec& spec) {
  return LatticePtr(new Lattice(spec));
}

Lattice::Lattice(GroupSpec spec) : spec_(std::move(spec)) {
  const std::size_t n = spec_.rank();
  std::size_t count = 1;
  for (const auto& f : spec_.factors()) {
    radix_.push_back(f.multiplicity + 1);
    count *= static_cast<std::size_t>(f.multiplicity + 1);
    if (count > kMaxDivisors) {
      throw LimitExceeded("group " + spec_.to_string() + " has more than " +
                          std::to_string(kMaxDivisors) + " subgroups");
    }
  }

  // Mixed-radix counting with the first prime most significant gives the
  // lexicographic order directly.
  subgroups_.reserve(count);
  heights_.reserve(count);
  std::vector<int> e(n, 0);
  for (std::size_t id = 0; id < count; ++id) {
    subgroups_.push_back(Subgroup{e});
    int h = 0;
    for (int x : e) h += x;
    heights_.push_back(h);
    for (std::size_t i = n; i-- > 0;) {
      if (++e[i] < radix_[i]) break;
      e[i] = 0;
    }
  }

  leq_.assign(count * count, 0);
  meet_.assign(count * count, 0);
  join_.assign(count * count, 0);
  std::vector<int> lo(n), hi(n);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      const auto& ea = subgroups_[a].exponents;
      const auto& eb = subgroups_[b].exponents;
      bool le = true;
      for (std::size_t i = 0; i < n; ++i) {
        le = le && ea[i] <= eb[i];
        lo[i] = std::min(ea[i], eb[i]);
        hi[i] = std::max(ea[i], eb[i]);
      }
      leq_[a * count + b] = le ? 1 : 0;
      meet_[a * count + b] = index_of(Subgroup{lo});
      join_[a * count + b] = index_of(Subgroup{hi});
    }
  }

  pair_lookup_.assign(count * count, -1);
  source_begin_.assign(count + 1, 0);
  for (std::size_t a = 0; a < count; ++a) {
    source_begin_[a] = pairs_.size();
    for (std::size_t b = 0; b < count; ++b) {
      if (a != b && leq_[a * count + b]) {
        pair_lookup_[a * count + b] = static_cast<std::int32_t>(pairs_.size());
        pairs_.push_back(Arrow{static_cast<DivisorId>(a), static_cast<DivisorId>(b)});
      }
    }
  }
  source_begin_[count] = pairs_.size();
}

std::optional<DivisorId> Lattice::find(const Subgroup& h) const {
  if (h.exponents.size() != radix_.size()) return std::nullopt;
  std::size_t id = 0;
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    int x = h.exponents[i];
    if (x < 0 || x >= radix_[i]) return std::nullopt;
    id = id * static_cast<std::size_t>(radix_[i]) + static_cast<std::size_t>(x);
  }
  return static_cast<DivisorId>(id);
}

DivisorId Lattice::index_of(const Subgroup& h) const {
  if (auto id = find(h)) return *id;
  std::ostringstream msg;
  msg << "exponent vector [";
  for (std::size_t i = 0; i < h.exponents.size(); ++i) msg << (i ? "," : "") << h.exponents[i];
  msg << "] is not a subgroup of C(" << spec_.to_string() << ")";
  throw InvalidArgument(msg.str());
}

std::optional<std::size_t> Lattice::find_pair(DivisorId source, DivisorId target) const {
  if (source >= size() || target >= size()) return std::nullopt;
  auto v = pair_lookup_[source * size() + target];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

std::size_t Lattice::pair_index(DivisorId source, DivisorId target) const {
  if (auto p = find_pair(source, target)) return *p;
  if (source >= size() || target >= size()) {
    throw InvalidArgument("arrow endpoint outside the lattice");
  }
  throw InvalidArgument("no arrow " + name(source) + " -> " + name(target) +
                        ": source is not strictly below target");
}

DivisorId Lattice::complement(DivisorId h) const {
  if (!squarefree()) {
    throw UnsupportedOperation("complement needs a squarefree group, got " + spec_.to_string());
  }
  return top() - h;
}

Interval Lattice::interval(DivisorId bottom, DivisorId top) const {
  if (bottom >= size() || top >= size() || !leq(bottom, top)) {
    throw InvalidArgument("interval bounds must satisfy bottom <= top");
  }
  const auto& lo = subgroups_[bottom].exponents;
  const auto& hi = subgroups_[top].exponents;
  std::vector<PrimePower> factors;
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    if (hi[i] > lo[i]) {
      factors.push_back(PrimePower{spec_.factors()[i].prime, hi[i] - lo[i]});
      coords.push_back(i);
    }
  }

  Interval out;
  out.lattice = LatticePtr(new Lattice(GroupSpec(GroupSpec::Unchecked{}, std::move(factors))));
  const Lattice& sub = *out.lattice;
  out.divisor_map.reserve(sub.size());
  for (DivisorId s = 0; s < sub.size(); ++s) {
    std::vector<int> e = lo;
    for (std::size_t k = 0; k < coords.size(); ++k) e[coords[k]] += sub.subgroup(s).exponents[k];
    out.divisor_map.push_back(index_of(Subgroup{std::move(e)}));
  }
  out.pair_map.reserve(sub.pair_count());
  for (const auto& a : sub.pairs()) {
    out.pair_map.push_back(pair_index(out.divisor_map[a.source], out.divisor_map[a.target]));
  }
  return out;
}

std::string Lattice::name(DivisorId id, Naming naming) const {
  const auto& e = subgroup(id).exponents;
  if (heights_[id] == 0) return "1";
  std::ostringstream out;
  if (naming == Naming::concrete) {
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) order *= spec_.factors()[i].prime;
    }
    out << "C_" << order;
    return out.str();
  }
  std::string body;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    body += prime_letter(i);
    if (e[i] > 1) body += "^" + std::to_string(e[i]);
  }
  if (body.size() == 1) return "C_" + body;
  return "C_{" + body + "}";
}

std::uint64_t Lattice::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(radix_.size());
  for (int r : radix_) mix(static_cast<std::uint64_t>(r));
  for (const auto& a : pairs_) {
    for (int x : subgroups_[a.source].exponents) mix(static_cast<std::uint64_t>(x));
    for (int x : subgroups_[a.target].exponents) mix(static_cast<std::uint64_t>(x));
  }
  return h;
}

}  // namespace norminf
