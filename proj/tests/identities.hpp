#pragma once

// Cross-method agreement and structural identities, phrased as checks that
// return an empty string on success and a description of the first failure
// otherwise. Shared by the unit tests and the acceptance binary.

#include <stdexcept>
#include <string>

#include "neuralcode/classify.hpp"
#include "neuralcode/code.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/format.hpp"
#include "neuralcode/ideal.hpp"
#include "oracles.hpp"

namespace neuralcode::identities {

inline std::string fail(const Code& code, const std::string& what) {
  return format_code_inline(code) + ": " + what;
}

/// IC by brute force, canonical form, facets and the oracle; MIC likewise
/// (the facets decider also compares its two facet conditions internally).
inline std::string deciders_agree(const Code& code) {
  try {
    const bool ic = oracle::intersection_complete(code);
    if (is_intersection_complete_bruteforce(code).verdict != ic) return fail(code, "IC brute");
    if (is_intersection_complete_cf(code).verdict != ic) return fail(code, "IC canonical form");
    if (is_intersection_complete_facets(code).verdict != ic) return fail(code, "IC facets");
    const bool mic = oracle::max_intersection_complete(code);
    if (is_mic_bruteforce(code).verdict != mic) return fail(code, "MIC brute");
    if (is_mic_algebraic(code).verdict != mic) return fail(code, "MIC algebraic");
    if (is_mic_facets(code).verdict != mic) return fail(code, "MIC facets");
  } catch (const std::logic_error& e) {
    return fail(code, e.what());
  }
  return {};
}

inline std::string dictionary_holds(const Code& code) {
  const DictionaryReport r = verify_dictionary(code);
  for (const auto& item : r.items)
    if (!item.passed) return fail(code, item.name + ": " + item.detail);
  return {};
}

/// phi in J_C iff P(phi) in FI(C) iff P(phi) in P(J_C), over every
/// pseudomonomial on [n].
inline std::string polarization_membership(const Code& code) {
  const auto fi = factor_ideal(code);
  const auto pj = polar_ideal(code);
  for (const auto& p : oracle::all_pseudomonomials(code.n())) {
    const bool member = in_neural_ideal(p, code);
    const PolarVertexSet pp = polarize(p);
    if (fi.contains(pp) != member) return fail(code, "FI membership of " + format_pseudomonomial(p));
    if (pj.contains(pp) != member) return fail(code, "P(J) membership of " + format_pseudomonomial(p));
  }
  for (Mask g : pj.generators())
    if (!fi.contains(g)) return fail(code, "P(J) generator outside FI");
  return {};
}

/// [c,d] inside C iff d u bar([n] \ c) is a face, for both complexes. The
/// c = d case is the codeword criterion.
inline std::string interval_faces(const Code& code) {
  const int n = code.n();
  const auto factor = factor_complex(code);
  const auto polar = polar_complex(code);
  bool ok = true;
  std::string where;
  for_each_subset(full_mask(n), [&](Mask d) {
    for_each_subset(d, [&](Mask c) {
      if (!ok) return;
      const Interval iv{Codeword{c}, Codeword{d}};
      const bool inside = contains_interval(code, iv);
      const PolarVertexSet f = interval_to_face(iv, n);
      if (factor.is_face(f) != inside || polar.is_face(f) != inside) {
        ok = false;
        where = format_interval(iv, n);
      }
      if (c == d && code.contains(Codeword{c}) != factor.is_face(f)) {
        ok = false;
        where = "codeword " + format_set(c, n);
      }
    });
  });
  return ok ? std::string{} : fail(code, "interval-face at " + where);
}

/// Facets of the factor complex are effective and are exactly the effective
/// facets of the polar complex; every factor face is a polar face.
inline std::string factor_is_effective_polar(const Code& code) {
  const int n = code.n();
  const auto factor = factor_complex(code);
  const auto polar = polar_complex(code);
  std::vector<Mask> effective;
  for (Mask f : polar.facets())
    if (is_effective(PolarVertexSet::unpack(f, n), n)) effective.push_back(f);
  if (effective != factor.facets()) return fail(code, "factor facets differ from effective polar facets");
  for (Mask f : factor.facets()) {
    if (!is_effective(PolarVertexSet::unpack(f, n), n)) return fail(code, "defective factor facet");
    if (!polar.is_face(f)) return fail(code, "factor facet outside the polar complex");
  }
  return {};
}

/// B-bar is a prime-set of the factor complex of C' iff <x_i : i in B>
/// contains every monomial of CF(J_C).
inline std::string prime_set_criterion(const Code& code) {
  const int n = code.n();
  const auto monomials = cf_monomials(canonical_form(code));
  std::vector<Mask> expected;
  for (Mask b = 0; b <= full_mask(n); ++b) {
    bool contains_all = true;
    for (const auto& m : monomials)
      if ((m.sigma() & b) == 0) contains_all = false;
    if (contains_all) expected.push_back(b);
  }
  std::vector<Mask> got;
  for (const auto& f : prime_sets(complement(code), false)) got.push_back(f.y);
  std::sort(got.begin(), got.end());
  return got == expected ? std::string{} : fail(code, "prime-sets of C' vs monomial primes");
}

inline std::string all_identities(const Code& code) {
  for (auto check : {polarization_membership, interval_faces, factor_is_effective_polar,
                     prime_set_criterion}) {
    std::string r = check(code);
    if (!r.empty()) return r;
  }
  return {};
}

}  // namespace neuralcode::identities
