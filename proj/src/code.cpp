#include "neuralcode/code.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "neuralcode/complex.hpp"
#include "neuralcode/errors.hpp"

namespace neuralcode {

Codeword Codeword::of(std::initializer_list<int> neurons) {
  Mask bits = 0;
  for (int i : neurons) {
    if (i < 1 || i > kMaxNeurons)
      throw std::invalid_argument("neuron index out of range: " +
                                  std::to_string(i));
    bits |= neuron_bit(i);
  }
  return Codeword{bits};
}

Interval::Interval(Codeword lo, Codeword hi) : lo_(lo), hi_(hi) {
  if (!lo.subset_of(hi))
    throw std::invalid_argument("interval lower end is not a subset of upper end");
}

Code::Code(int n, std::vector<Codeword> words) : n_(n), words_(std::move(words)) {
  if (n < 1 || n > kMaxNeurons)
    throw InvalidCode("neuron count must be between 1 and " +
                      std::to_string(kMaxNeurons) + ", got " + std::to_string(n));
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  const Mask all = full_mask(n);
  for (Codeword w : words_)
    if (!is_subset(w.bits, all))
      throw InvalidCode("codeword uses a neuron outside [" + std::to_string(n) + "]");
  if (words_.empty()) throw InvalidCode("the empty code is not allowed");
  if (words_.size() == (std::size_t{1} << n))
    throw InvalidCode("the full code 2^[n] is not allowed");
  member_.assign(std::size_t{1} << n, false);
  for (Codeword w : words_) member_[w.bits] = true;
}

Code Code::from_masks(int n, std::span<const Mask> masks) {
  std::vector<Codeword> words;
  words.reserve(masks.size());
  for (Mask m : masks) words.emplace_back(m);
  return Code(n, std::move(words));
}

Code complement(const Code& code) {
  std::vector<Codeword> words;
  for (Mask m = 0; m <= code.universe(); ++m)
    if (!code.contains(Codeword{m})) words.emplace_back(m);
  return Code(code.n(), std::move(words));
}

std::vector<Codeword> interval_members(const Interval& iv) {
  std::vector<Codeword> out;
  out.reserve(iv.member_count());
  const Mask free = iv.hi().bits & ~iv.lo().bits;
  for_each_subset(free, [&](Mask s) { out.emplace_back(iv.lo().bits | s); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool interval_inside(const Code& code, Mask lo, Mask hi) {
  const Mask free = hi & ~lo;
  bool inside = true;
  for (Mask s = free;; s = (s - 1) & free) {
    if (!code.contains(Codeword{lo | s})) {
      inside = false;
      break;
    }
    if (s == 0) break;
  }
  return inside;
}

}  // namespace

bool contains_interval(const Code& code, const Interval& iv) {
  if (!is_subset(iv.hi().bits, code.universe())) return false;
  return interval_inside(code, iv.lo().bits, iv.hi().bits);
}

std::vector<Interval> maximal_intervals(const Code& code) {
  const Mask all = code.universe();
  std::set<std::pair<Mask, Mask>> found;
  for (Codeword top : maximal_codewords(code)) {
    for_each_subset(top.bits, [&](Mask hi) {
      for_each_subset(hi, [&](Mask lo) {
        if (found.contains({lo, hi}) || !interval_inside(code, lo, hi)) return;
        // Any strictly larger interval inside C contains a one-step widening.
        bool maximal = true;
        for_each_bit(lo, [&](int v) {
          if (maximal && interval_inside(code, lo & ~(Mask{1} << v), hi))
            maximal = false;
        });
        for_each_bit(all & ~hi, [&](int v) {
          if (maximal && interval_inside(code, lo, hi | (Mask{1} << v)))
            maximal = false;
        });
        if (maximal) found.emplace(lo, hi);
      });
    });
  }
  std::vector<Interval> out;
  out.reserve(found.size());
  for (auto [lo, hi] : found) out.emplace_back(Codeword{lo}, Codeword{hi});
  return out;
}

std::vector<Codeword> maximal_codewords(const Code& code) {
  std::vector<Mask> masks;
  masks.reserve(code.size());
  for (Codeword w : code.words()) masks.push_back(w.bits);
  std::vector<Codeword> out;
  for (Mask m : maximal_sets(std::move(masks))) out.emplace_back(m);
  return out;
}

SimplicialComplex downward_closure(const Code& code) {
  std::vector<Mask> facets;
  for (Codeword m : maximal_codewords(code)) facets.push_back(m.bits);
  return SimplicialComplex(VertexUniverse::plain, code.n(), std::move(facets));
}

}  // namespace neuralcode
