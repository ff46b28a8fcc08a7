#pragma once

// Depth-first transfer-system search. The two axioms are compiled into Horn
// clauses over one boolean per comparable pair:
//   restriction   x[H->K]             => x[H^L -> K^L]
//   transitivity  x[H->K] & x[K->L]   => x[H->L]
// and every decision is followed by unit propagation in both directions, so
// a branch dies as soon as it forces an arrow it already excluded.

#include <cstdint>
#include <utility>
#include <vector>

#include "norminf/lattice.hpp"
#include "norminf/pair_set.hpp"

namespace norminf::detail {

class HornProgram {
 public:
  explicit HornProgram(const Lattice& lattice);

  std::size_t vars() const { return vars_; }

 private:
  friend class HornSearch;

  std::size_t vars_ = 0;
  std::vector<std::vector<std::uint32_t>> implies_;       // a => c
  std::vector<std::vector<std::uint32_t>> implied_by_;    // c <= a
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> implies_with_;  // at a: (b, c)
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> implied_by_pair_;  // at c: (a, b)
};

struct Decision {
  std::uint32_t var;
  bool value;
};

class HornSearch {
 public:
  explicit HornSearch(const HornProgram& program);

  /// Assigns and propagates. On false the caller must undo to a prior mark.
  bool decide(std::uint32_t var, bool value);
  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark);

  /// Enumerates every completion of the current partial assignment in
  /// increasing bit-vector order.
  template <typename Emit>
  void search(Emit&& emit) {
    search_from(program_.vars(), emit);
  }

  /// Runs the same search but stops after `depth` decisions, reporting each
  /// surviving decision prefix (or complete solution reached earlier).
  std::vector<std::vector<Decision>> frontier(std::size_t depth);

 private:
  bool assign(std::uint32_t var, bool value);
  bool propagate();

  template <typename Emit>
  void search_from(std::size_t cursor, Emit& emit) {
    while (cursor > 0 && value_[cursor - 1] >= 0) --cursor;
    if (cursor == 0) {
      emit(current_);
      return;
    }
    const auto var = static_cast<std::uint32_t>(cursor - 1);
    for (bool v : {false, true}) {
      std::size_t m = mark();
      if (decide(var, v)) search_from(cursor - 1, emit);
      undo(m);
    }
  }

  void frontier_from(std::size_t cursor, std::size_t depth, std::vector<Decision>& prefix,
                     std::vector<std::vector<Decision>>& out);

  const HornProgram& program_;
  std::vector<std::int8_t> value_;  // -1 unassigned, 0 absent, 1 present
  std::vector<std::uint32_t> trail_;
  std::size_t head_ = 0;
  PairSet current_;
};

}  // namespace norminf::detail
