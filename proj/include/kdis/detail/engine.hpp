#pragma once

#include <cstddef>
#include <vector>

#include "kdis/detail/bits.hpp"

namespace kdis::detail {

/// Branch-and-bound over (chosen, excluded, undecided) vertex partitions.
///
/// Invariants at every node:
///   - chosen is independent and no undecided vertex is adjacent to chosen
///     (neighbors of a chosen vertex move to excluded immediately);
///   - every excluded vertex still sees at least k chosen-or-undecided
///     neighbors, otherwise the node is pruned.
/// Leaves (nothing undecided) are exactly the k-DISes, each reached once
/// because the two branches on a vertex are disjoint.
template <std::size_t W>
class KdisEngine {
 public:
  using Bits = FixedBits<W>;

  KdisEngine(const Bits* adj, std::size_t n, int k) : adj_(adj), n_(n), k_(k) {}

  /// Visits every k-DIS once; visit(const Bits&) may be called in any order.
  template <class Visit>
  void run(Visit&& visit) const {
    Bits chosen{}, excluded{};
    Bits undecided = Bits::prefix(n_);
    if (propagate(chosen, excluded, undecided)) search(chosen, excluded, undecided, visit);
  }

 private:
  bool choose(std::size_t v, Bits& chosen, Bits& excluded, Bits& undecided) const {
    if (!undecided.test(v)) return chosen.test(v);
    chosen.set(v);
    undecided.reset(v);
    Bits nb = adj_[v] & undecided;
    excluded |= nb;
    undecided.remove(nb);
    return true;
  }

  bool propagate(Bits& chosen, Bits& excluded, Bits& undecided) const {
    for (;;) {
      bool changed = false;
      bool ok = true;
      excluded.for_each([&](std::size_t x) {
        if (!ok) return;
        const int avail = count_and(adj_[x], chosen | undecided);
        if (avail < k_) {
          ok = false;
          return;
        }
        if (avail == k_ && count_and(adj_[x], chosen) < k_) {
          // Every remaining candidate neighbor is needed.
          (adj_[x] & undecided).for_each([&](std::size_t f) {
            if (ok && !choose(f, chosen, excluded, undecided)) ok = false;
          });
          changed = true;
        }
      });
      if (!ok) return false;
      // An undecided vertex that cannot collect k dominators must be chosen.
      undecided.for_each([&](std::size_t u) {
        if (!ok || !undecided.test(u)) return;
        if (count_and(adj_[u], chosen | undecided) < k_) {
          if (!choose(u, chosen, excluded, undecided)) ok = false;
          changed = true;
        }
      });
      if (!ok) return false;
      if (!changed) return true;
    }
  }

  template <class Visit>
  void search(const Bits& chosen, const Bits& excluded, const Bits& undecided,
              Visit& visit) const {
    if (!undecided.any()) {
      visit(chosen);
      return;
    }
    std::size_t pick = 0;
    int best = 1 << 30;
    undecided.for_each([&](std::size_t u) {
      const int d = count_and(adj_[u], undecided);
      if (d < best) {
        best = d;
        pick = u;
      }
    });
    {
      Bits c = chosen, x = excluded, u = undecided;
      choose(pick, c, x, u);
      if (propagate(c, x, u)) search(c, x, u, visit);
    }
    {
      Bits c = chosen, x = excluded, u = undecided;
      x.set(pick);
      u.reset(pick);
      if (propagate(c, x, u)) search(c, x, u, visit);
    }
  }

  const Bits* adj_;
  std::size_t n_;
  int k_;
};

/// Maximum independent set size by include/exclude branching with a
/// cardinality bound.
template <std::size_t W>
class MisEngine {
 public:
  using Bits = FixedBits<W>;
  MisEngine(const Bits* adj, std::size_t n) : adj_(adj), n_(n) {}

  int run() {
    best_ = 0;
    search(Bits::prefix(n_), 0);
    return best_;
  }

 private:
  void search(Bits cand, int size) {
    // Degree <= 1 vertices are always safe to take.
    bool again = true;
    while (again) {
      again = false;
      cand.for_each([&](std::size_t v) {
        if (!cand.test(v)) return;
        if (count_and(adj_[v], cand) <= 1) {
          cand.reset(v);
          cand.remove(adj_[v]);
          ++size;
          again = true;
        }
      });
    }
    if (!cand.any()) {
      if (size > best_) best_ = size;
      return;
    }
    if (size + cand.count() <= best_) return;
    std::size_t pick = 0;
    int deg = -1;
    cand.for_each([&](std::size_t v) {
      const int d = count_and(adj_[v], cand);
      if (d > deg) {
        deg = d;
        pick = v;
      }
    });
    Bits with = cand;
    with.reset(pick);
    with.remove(adj_[pick]);
    search(with, size + 1);
    Bits without = cand;
    without.reset(pick);
    search(without, size);
  }

  const Bits* adj_;
  std::size_t n_;
  int best_ = 0;
};

}  // namespace kdis::detail
