#pragma once

// Bitmask helpers shared by every module: subsets of [n] and of the
// doubled vertex set [n] u [n-bar] are plain 32-bit masks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace neuralcode {

using Mask = std::uint32_t;

inline constexpr int kMaxNeurons = 16;

/// Mask with the low `count` bits set.
constexpr Mask full_mask(int count) noexcept {
  return count >= 32 ? ~Mask{0} : (Mask{1} << count) - 1;
}

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

/// Bit for neuron `i` (1-based).
constexpr Mask neuron_bit(int i) noexcept { return Mask{1} << (i - 1); }

/// Calls f(s) for every s with s a subset of `m`, in descending numeric order
/// (m first, 0 last).
template <class F>
void for_each_subset(Mask m, F&& f) {
  for (Mask s = m;; s = (s - 1) & m) {
    f(s);
    if (s == 0) break;
  }
}

/// Calls f(i) for each 0-based bit index set in `m`, ascending.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

/// Every mask below 2^bits, ordered by popcount and then by value.
std::vector<Mask> masks_by_popcount(int bits);

/// Keeps only the inclusion-minimal sets; result sorted ascending, no
/// duplicates.
std::vector<Mask> minimal_sets(std::vector<Mask> sets);

/// Keeps only the inclusion-maximal sets; result sorted ascending.
std::vector<Mask> maximal_sets(std::vector<Mask> sets);

/// True when no element of `sets` contains another (duplicates count as
/// comparable).
bool is_antichain(std::span<const Mask> sets);

/// Minimal transversals (minimal hitting sets) of a hypergraph, by
/// depth-first branching on the first unhit edge. An empty edge makes the
/// result empty; an empty edge list yields {0}.
std::vector<Mask> minimal_transversals(std::span<const Mask> edges);

/// Same set as minimal_transversals, computed by Berge multiplication:
/// distribute each edge over the partial transversals and re-minimize.
std::vector<Mask> minimal_transversals_by_product(std::span<const Mask> edges);

}  // namespace neuralcode
