#include "norminf/transfer_system.hpp"

#include <sstream>

#include "norminf/errors.hpp"

namespace norminf {

namespace {

std::string arrow_text(const Lattice& l, const Arrow& a, Naming naming) {
  return l.name(a.source, naming) + " -> " + l.name(a.target, naming);
}

void require_same_lattice(const TransferSystem& a, const TransferSystem& b) {
  if (a.lattice_ptr() != b.lattice_ptr() && !(a.lattice().spec() == b.lattice().spec())) {
    throw LatticeMismatch("transfer systems live on different lattices: " +
                          a.lattice().spec().to_string() + " vs " +
                          b.lattice().spec().to_string());
  }
}

}  // namespace

std::string Violation::describe(const Lattice& lattice, Naming naming) const {
  std::ostringstream out;
  if (kind == Axiom::transitivity) {
    out << "transitivity: " << arrow_text(lattice, first, naming) << " and "
        << arrow_text(lattice, *second, naming) << " present but "
        << arrow_text(lattice, missing, naming) << " missing";
  } else {
    out << "restriction: " << arrow_text(lattice, first, naming) << " present, intersecting with "
        << lattice.name(*intersect_with, naming) << " requires "
        << arrow_text(lattice, missing, naming);
  }
  return out.str();
}

void require_pair_capacity(const Lattice& lattice) {
  if (lattice.pair_count() > PairSet::kCapacity) {
    throw LimitExceeded("lattice of " + lattice.spec().to_string() + " has " +
                        std::to_string(lattice.pair_count()) + " comparable pairs; at most " +
                        std::to_string(PairSet::kCapacity) + " are supported");
  }
}

PairSet to_pair_set(const Lattice& lattice, std::span<const Arrow> arrows) {
  require_pair_capacity(lattice);
  PairSet s;
  for (const auto& a : arrows) s.set(lattice.pair_index(a.source, a.target));
  return s;
}

std::vector<Arrow> to_arrows(const Lattice& lattice, const PairSet& members) {
  std::vector<Arrow> out;
  members.for_each([&](std::size_t i) { out.push_back(lattice.pair(i)); });
  return out;
}

std::optional<Violation> check(const Lattice& lattice, const PairSet& members) {
  require_pair_capacity(lattice);
  const std::size_t pairs = lattice.pair_count();
  for (std::size_t i = 0; i < pairs; ++i) {
    if (!members.test(i)) continue;
    const Arrow& hk = lattice.pair(i);

    auto [begin, end] = lattice.pairs_from(hk.target);
    for (std::size_t j = begin; j < end; ++j) {
      if (!members.test(j)) continue;
      const Arrow& kl = lattice.pair(j);
      std::size_t composite = lattice.pair_index(hk.source, kl.target);
      if (!members.test(composite)) {
        return Violation{Axiom::transitivity, hk, kl, std::nullopt, {hk.source, kl.target}};
      }
    }

    for (DivisorId l = 0; l < lattice.size(); ++l) {
      DivisorId src = lattice.meet(hk.source, l);
      DivisorId dst = lattice.meet(hk.target, l);
      if (src == dst) continue;
      if (!members.test(lattice.pair_index(src, dst))) {
        return Violation{Axiom::restriction, hk, std::nullopt, l, {src, dst}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> check(const Lattice& lattice, std::span<const Arrow> arrows) {
  return check(lattice, to_pair_set(lattice, arrows));
}

PairSet close(const Lattice& lattice, PairSet members) {
  require_pair_capacity(lattice);
  const std::size_t pairs = lattice.pair_count();
  while (true) {
    PairSet next = members;
    for (std::size_t i = 0; i < pairs; ++i) {
      if (!members.test(i)) continue;
      const Arrow& hk = lattice.pair(i);
      auto [begin, end] = lattice.pairs_from(hk.target);
      for (std::size_t j = begin; j < end; ++j) {
        if (members.test(j)) next.set(lattice.pair_index(hk.source, lattice.pair(j).target));
      }
      for (DivisorId l = 0; l < lattice.size(); ++l) {
        DivisorId src = lattice.meet(hk.source, l);
        DivisorId dst = lattice.meet(hk.target, l);
        if (src != dst) next.set(lattice.pair_index(src, dst));
      }
    }
    if (next == members) return members;
    members = next;
  }
}

TransferSystem::TransferSystem(LatticePtr lattice, const PairSet& members)
    : lattice_(std::move(lattice)), members_(members) {
  if (!lattice_) throw InvalidArgument("transfer system needs a lattice");
  require_pair_capacity(*lattice_);
  if ((members_ & PairSet::first_n(lattice_->pair_count())) != members_) {
    throw InvalidArgument("bit set beyond the lattice's pair count");
  }
  if (auto v = check(*lattice_, members_)) {
    throw InvalidArgument("not a transfer system: " + v->describe(*lattice_));
  }
}

TransferSystem TransferSystem::empty(LatticePtr lattice) {
  require_pair_capacity(*lattice);
  return TransferSystem(Trusted{}, std::move(lattice), PairSet{});
}

TransferSystem TransferSystem::full(LatticePtr lattice) {
  require_pair_capacity(*lattice);
  auto all = PairSet::first_n(lattice->pair_count());
  return TransferSystem(Trusted{}, std::move(lattice), all);
}

TransferSystem TransferSystem::from_arrows(LatticePtr lattice, std::span<const Arrow> arrows) {
  auto members = to_pair_set(*lattice, arrows);
  return TransferSystem(std::move(lattice), members);
}

bool TransferSystem::contains(DivisorId source, DivisorId target) const {
  auto p = lattice_->find_pair(source, target);
  return p && members_.test(*p);
}

TransferSystem closure(LatticePtr lattice, const PairSet& members) {
  auto closed = close(*lattice, members);
  return TransferSystem(TransferSystem::Trusted{}, std::move(lattice), closed);
}

TransferSystem closure(LatticePtr lattice, std::span<const Arrow> arrows) {
  auto members = to_pair_set(*lattice, arrows);
  return closure(std::move(lattice), members);
}

TransferSystem restrict(const TransferSystem& t, DivisorId bottom, DivisorId top) {
  Interval iv = t.lattice().interval(bottom, top);
  PairSet sub;
  for (std::size_t k = 0; k < iv.pair_map.size(); ++k) {
    if (t.members().test(iv.pair_map[k])) sub.set(k);
  }
  return TransferSystem(TransferSystem::Trusted{}, std::move(iv.lattice), sub);
}

TransferSystem meet_ts(const TransferSystem& a, const TransferSystem& b) {
  require_same_lattice(a, b);
  return TransferSystem(TransferSystem::Trusted{}, a.lattice_, a.members_ & b.members_);
}

TransferSystem join_ts(const TransferSystem& a, const TransferSystem& b) {
  require_same_lattice(a, b);
  return closure(a.lattice_, a.members_ | b.members_);
}

}  // namespace norminf
