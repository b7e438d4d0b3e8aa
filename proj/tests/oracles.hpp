#pragma once

// Brute-force reference implementations. These scan whole Boolean lattices
// and never call into the library's enumeration code, so they can be used to
// check it.

#include <algorithm>
#include <vector>

#include "neuralcode/code.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/ideal.hpp"

namespace neuralcode::oracle {

inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<Mask> all_masks(int bits) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << bits); ++m) out.push_back(m);
  return out;
}

/// [c,d] inside C, by scanning every point of 2^[n].
inline bool interval_in_code(const Code& code, Mask c, Mask d) {
  for (Mask w : all_masks(code.n()))
    if (sub(c, w) && sub(w, d) && !code.contains(Codeword{w})) return false;
  return true;
}

/// All intervals of C, as (lo, hi) pairs over the 3^n pairs c <= d.
inline std::vector<std::pair<Mask, Mask>> all_intervals(const Code& code) {
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask d : all_masks(code.n()))
    for (Mask c : all_masks(code.n()))
      if (sub(c, d) && interval_in_code(code, c, d)) out.emplace_back(c, d);
  return out;
}

/// Maximal intervals by pairwise comparison of every interval.
inline std::vector<Interval> maximal_intervals(const Code& code) {
  auto all = all_intervals(code);
  std::vector<Interval> out;
  for (auto [c, d] : all) {
    bool dominated = std::any_of(all.begin(), all.end(), [&](auto o) {
      return o != std::pair{c, d} && sub(o.first, c) && sub(d, o.second);
    });
    if (!dominated) out.emplace_back(Codeword{c}, Codeword{d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// phi in J_C iff phi vanishes on every codeword (J_C is radical with zero
/// set C); checked over every point of 2^[n].
inline bool in_ideal(Mask sigma, Mask tau, const Code& code) {
  for (Mask w : all_masks(code.n())) {
    bool value = sub(sigma, w) && (tau & w) == 0;
    if (value && code.contains(Codeword{w})) return false;
  }
  return true;
}

/// Every disjoint (sigma, tau), by ternary digit expansion.
inline std::vector<Pseudomonomial> all_pseudomonomials(int n) {
  std::vector<Pseudomonomial> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    Mask sigma = 0, tau = 0;
    int t = code;
    for (int i = 0; i < n; ++i, t /= 3) {
      if (t % 3 == 1) sigma |= Mask{1} << i;
      if (t % 3 == 2) tau |= Mask{1} << i;
    }
    out.emplace_back(sigma, tau);
  }
  return out;
}

/// Minimal pseudomonomials of J_C: members with no proper divisor that is a
/// member.
inline std::vector<Pseudomonomial> canonical_form(const Code& code) {
  std::vector<Pseudomonomial> members;
  for (const auto& p : all_pseudomonomials(code.n()))
    if (in_ideal(p.sigma(), p.tau(), code)) members.push_back(p);
  std::vector<Pseudomonomial> out;
  for (const auto& p : members) {
    bool reducible = std::any_of(members.begin(), members.end(), [&](const auto& q) {
      return q != p && sub(q.sigma(), p.sigma()) && sub(q.tau(), p.tau());
    });
    if (!reducible) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Facets of the complex whose non-faces are the supersets of `gens`, by
/// scanning all 2^vertices subsets.
inline std::vector<Mask> facets_of_ideal(const std::vector<Mask>& gens, int vertices) {
  auto is_face = [&](Mask s) {
    return std::none_of(gens.begin(), gens.end(), [&](Mask g) { return sub(g, s); });
  };
  std::vector<Mask> out;
  for (Mask s : all_masks(vertices)) {
    if (!is_face(s)) continue;
    bool maximal = true;
    for (int v = 0; v < vertices && maximal; ++v)
      if (!(s >> v & 1) && is_face(s | Mask{1} << v)) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

/// Minimal non-faces of a complex given by facets, by subset scan.
inline std::vector<Mask> minimal_nonfaces(const std::vector<Mask>& facets, int vertices) {
  auto is_face = [&](Mask s) {
    return std::any_of(facets.begin(), facets.end(), [&](Mask f) { return sub(s, f); });
  };
  std::vector<Mask> out;
  for (Mask s : all_masks(vertices)) {
    if (is_face(s)) continue;
    bool minimal = true;
    for (int v = 0; v < vertices && minimal; ++v)
      if ((s >> v & 1) && !is_face(s & ~(Mask{1} << v))) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

/// Generators of the intersection of the polarized prime components of
/// J_C: a support lies in every prime iff it meets each prime's variables.
/// Components come from the oracle's maximal intervals.
inline std::vector<Mask> factor_ideal(const Code& code) {
  const int n = code.n();
  std::vector<Mask> prime_vars;
  for (const Interval& iv : oracle::maximal_intervals(code))
    prime_vars.push_back((full_mask(n) & ~iv.hi().bits) | (iv.lo().bits << n));
  auto member = [&](Mask s) {
    return std::all_of(prime_vars.begin(), prime_vars.end(), [&](Mask p) { return (s & p) != 0; });
  };
  std::vector<Mask> out;
  for (Mask s : all_masks(2 * n)) {
    if (!member(s)) continue;
    bool minimal = true;
    for (int v = 0; v < 2 * n && minimal; ++v)
      if ((s >> v & 1) && member(s & ~(Mask{1} << v))) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

/// m is an intersection of a nonempty subfamily of `family` iff m equals
/// the intersection of all members containing m.
inline bool closed_under_intersection(const std::vector<Mask>& family, const Code& code) {
  for (Mask m : all_masks(code.n())) {
    Mask meet = full_mask(code.n());
    bool any = false;
    for (Mask w : family)
      if (sub(m, w)) {
        meet &= w;
        any = true;
      }
    if (any && meet == m && !code.contains(Codeword{m})) return false;
  }
  return true;
}

inline bool intersection_complete(const Code& code) {
  std::vector<Mask> words;
  for (Codeword w : code.words()) words.push_back(w.bits);
  return closed_under_intersection(words, code);
}

inline bool max_intersection_complete(const Code& code) {
  std::vector<Mask> tops;
  for (Codeword w : code.words()) {
    bool top = std::none_of(code.words().begin(), code.words().end(), [&](Codeword v) {
      return v != w && sub(w.bits, v.bits);
    });
    if (top) tops.push_back(w.bits);
  }
  return closed_under_intersection(tops, code);
}

}  // namespace neuralcode::oracle
