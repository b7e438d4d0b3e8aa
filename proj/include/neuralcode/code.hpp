#pragma once

// Codes, codewords, Boolean intervals and the plain combinatorics on them.
//
// Neuron i (1-based) is bit i-1 of a mask. All types are immutable values.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "neuralcode/bits.hpp"

namespace neuralcode {

class SimplicialComplex;

/// A subset of [n]; which n is carried by the owning Code.
struct Codeword {
  Mask bits = 0;

  constexpr Codeword() = default;
  constexpr explicit Codeword(Mask b) : bits(b) {}

  /// Codeword from 1-based neuron indices, e.g. of({1, 2}) is "12".
  static Codeword of(std::initializer_list<int> neurons);

  constexpr bool subset_of(Codeword other) const noexcept {
    return is_subset(bits, other.bits);
  }
  constexpr bool contains(int neuron) const noexcept {
    return (bits & neuron_bit(neuron)) != 0;
  }
  constexpr int size() const noexcept { return popcount(bits); }

  friend constexpr Codeword operator&(Codeword a, Codeword b) noexcept {
    return Codeword{a.bits & b.bits};
  }
  friend constexpr Codeword operator|(Codeword a, Codeword b) noexcept {
    return Codeword{a.bits | b.bits};
  }
  friend constexpr auto operator<=>(Codeword, Codeword) = default;
};

/// Boolean interval [lo, hi] = { w : lo <= w <= hi }.
class Interval {
 public:
  /// Throws std::invalid_argument unless lo is a subset of hi.
  Interval(Codeword lo, Codeword hi);

  Codeword lo() const noexcept { return lo_; }
  Codeword hi() const noexcept { return hi_; }

  bool contains(Codeword w) const noexcept {
    return lo_.subset_of(w) && w.subset_of(hi_);
  }
  /// Interval containment: [c1,d1] within [c2,d2] iff c2 <= c1 and d1 <= d2.
  bool within(const Interval& other) const noexcept {
    return other.lo_.subset_of(lo_) && hi_.subset_of(other.hi_);
  }
  std::size_t member_count() const noexcept {
    return std::size_t{1} << (hi_.size() - lo_.size());
  }

  friend auto operator<=>(const Interval&, const Interval&) = default;

 private:
  Codeword lo_;
  Codeword hi_;
};

/// A neural code on n neurons: a nonempty proper subset of 2^[n].
class Code {
 public:
  /// Deduplicates and sorts `words`. Throws InvalidCode for n outside
  /// [1, 16], for words outside [n], and for the empty or full code.
  Code(int n, std::vector<Codeword> words);

  static Code from_masks(int n, std::span<const Mask> masks);

  int n() const noexcept { return n_; }
  Mask universe() const noexcept { return full_mask(n_); }
  std::span<const Codeword> words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }

  bool contains(Codeword w) const noexcept {
    return w.bits < member_.size() && member_[w.bits];
  }

  friend bool operator==(const Code& a, const Code& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  int n_;
  std::vector<Codeword> words_;
  std::vector<bool> member_;
};

/// The code 2^[n] minus `code`.
Code complement(const Code& code);

/// Every w with lo <= w <= hi, ascending.
std::vector<Codeword> interval_members(const Interval& iv);

/// True iff every member of `iv` is a codeword.
bool contains_interval(const Code& code, const Interval& iv);

/// Intervals of `code` that are maximal under containment, ordered by
/// (lo, hi). Candidates are restricted to hi below some maximal codeword;
/// maximality is checked by one-step widening.
std::vector<Interval> maximal_intervals(const Code& code);

/// Codewords maximal under inclusion, ascending.
std::vector<Codeword> maximal_codewords(const Code& code);

/// Delta(C): the smallest simplicial complex on [n] containing the code.
SimplicialComplex downward_closure(const Code& code);

}  // namespace neuralcode
