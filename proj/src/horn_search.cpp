#include "horn_search.hpp"

#include <algorithm>

#include "norminf/errors.hpp"

namespace norminf::detail {

HornProgram::HornProgram(const Lattice& lattice) : vars_(lattice.pair_count()) {
  if (vars_ > PairSet::kCapacity) throw LimitExceeded("too many comparable pairs for the DFS engine");
  implies_.resize(vars_);
  implied_by_.resize(vars_);
  implies_with_.resize(vars_);
  implied_by_pair_.resize(vars_);

  for (std::size_t a = 0; a < vars_; ++a) {
    const Arrow& hk = lattice.pair(a);
    std::vector<std::uint32_t> consequences;
    for (DivisorId l = 0; l < lattice.size(); ++l) {
      DivisorId src = lattice.meet(hk.source, l);
      DivisorId dst = lattice.meet(hk.target, l);
      if (src == dst) continue;
      auto c = lattice.find_pair(src, dst);
      if (*c != a) consequences.push_back(static_cast<std::uint32_t>(*c));
    }
    std::sort(consequences.begin(), consequences.end());
    consequences.erase(std::unique(consequences.begin(), consequences.end()), consequences.end());
    for (auto c : consequences) {
      implies_[a].push_back(c);
      implied_by_[c].push_back(static_cast<std::uint32_t>(a));
    }

    // Composable pairs start at hk.target.
    for (DivisorId l = 0; l < lattice.size(); ++l) {
      auto b = lattice.find_pair(hk.target, l);
      if (!b) continue;
      auto c = static_cast<std::uint32_t>(*lattice.find_pair(hk.source, l));
      auto ua = static_cast<std::uint32_t>(a);
      auto ub = static_cast<std::uint32_t>(*b);
      implies_with_[ua].emplace_back(ub, c);
      implies_with_[ub].emplace_back(ua, c);
      implied_by_pair_[c].emplace_back(ua, ub);
    }
  }
}

HornSearch::HornSearch(const HornProgram& program)
    : program_(program), value_(program.vars(), -1) {
  trail_.reserve(program.vars());
}

bool HornSearch::assign(std::uint32_t var, bool value) {
  const std::int8_t v = value ? 1 : 0;
  if (value_[var] >= 0) return value_[var] == v;
  value_[var] = v;
  if (value) current_.set(var);
  trail_.push_back(var);
  return true;
}

bool HornSearch::propagate() {
  while (head_ < trail_.size()) {
    const std::uint32_t var = trail_[head_++];
    if (value_[var] == 1) {
      for (auto c : program_.implies_[var]) {
        if (!assign(c, true)) return false;
      }
      for (auto [other, c] : program_.implies_with_[var]) {
        if (value_[other] == 1 && !assign(c, true)) return false;
        if (value_[c] == 0 && !assign(other, false)) return false;
      }
    } else {
      for (auto a : program_.implied_by_[var]) {
        if (!assign(a, false)) return false;
      }
      for (auto [a, b] : program_.implied_by_pair_[var]) {
        if (value_[a] == 1 && !assign(b, false)) return false;
        if (value_[b] == 1 && !assign(a, false)) return false;
      }
    }
  }
  return true;
}

bool HornSearch::decide(std::uint32_t var, bool value) {
  return assign(var, value) && propagate();
}

void HornSearch::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    auto var = trail_.back();
    trail_.pop_back();
    value_[var] = -1;
    current_.reset(var);
  }
  head_ = std::min(head_, mark);
}

std::vector<std::vector<Decision>> HornSearch::frontier(std::size_t depth) {
  std::vector<std::vector<Decision>> out;
  std::vector<Decision> prefix;
  frontier_from(program_.vars(), depth, prefix, out);
  return out;
}

void HornSearch::frontier_from(std::size_t cursor, std::size_t depth,
                               std::vector<Decision>& prefix,
                               std::vector<std::vector<Decision>>& out) {
  while (cursor > 0 && value_[cursor - 1] >= 0) --cursor;
  if (cursor == 0 || prefix.size() == depth) {
    out.push_back(prefix);
    return;
  }
  const auto var = static_cast<std::uint32_t>(cursor - 1);
  for (bool v : {false, true}) {
    std::size_t m = mark();
    if (decide(var, v)) {
      prefix.push_back({var, v});
      frontier_from(cursor - 1, depth, prefix, out);
      prefix.pop_back();
    }
    undo(m);
  }
}

}  // namespace norminf::detail
