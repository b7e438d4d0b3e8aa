#include "neuralcode/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "neuralcode/format.hpp"

namespace neuralcode {

const char* to_string(Property p) noexcept {
  switch (p) {
    case Property::intersection_complete: return "IC";
    case Property::max_intersection_complete: return "MIC";
  }
  return "?";
}

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::brute_force: return "brute_force";
    case Method::canonical_form: return "canonical_form";
    case Method::factor_complex: return "factor_complex";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

template <class Body>
ClassificationReport timed(Property property, Method method, Body&& body) {
  const auto start = Clock::now();
  ClassificationReport report;
  report.property = property;
  report.method = method;
  body(report);
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return report;
}

// i in tau, and every minimal prime B of I(Delta(C)) with i in B contains
// phi, i.e. meets sigma.
bool algebraic_clauses_hold(const Pseudomonomial& phi, int i, std::span<const Mask> primes) {
  const Mask bit = neuron_bit(i);
  if ((phi.tau() & bit) == 0) return false;
  return std::all_of(primes.begin(), primes.end(), [&](Mask b) {
    return (b & bit) == 0 || (b & phi.sigma()) != 0;
  });
}

std::optional<int> algebraic_index(const Pseudomonomial& phi, int n, std::span<const Mask> primes) {
  for (int i = 1; i <= n; ++i)
    if (algebraic_clauses_hold(phi, i, primes)) return i;
  return std::nullopt;
}

// i not in F, and every minimal prime-set containing i-bar has some j-bar
// outside F.
bool facet_clauses_hold(const PolarVertexSet& facet, int i, std::span<const Mask> prime_sets) {
  const Mask bit = neuron_bit(i);
  if (facet.x & bit) return false;
  return std::all_of(prime_sets.begin(), prime_sets.end(), [&](Mask b) {
    return (b & bit) == 0 || (b & ~facet.y) != 0;
  });
}

std::optional<int> facet_index(const PolarVertexSet& facet, int n, std::span<const Mask> prime_sets) {
  for (int i = 1; i <= n; ++i)
    if (facet_clauses_hold(facet, i, prime_sets)) return i;
  return std::nullopt;
}

std::vector<int> h_f(const PolarVertexSet& facet, std::span<const Mask> prime_sets) {
  std::vector<int> out;
  for (std::size_t v = 0; v < prime_sets.size(); ++v)
    if (is_subset(prime_sets[v], facet.y)) out.push_back(static_cast<int>(v));
  return out;
}

// ([n] \ union_{v in H_F} B_v) is not inside F.
bool star_holds(const PolarVertexSet& facet, int n, std::span<const Mask> prime_sets) {
  Mask covered = 0;
  for (int v : h_f(facet, prime_sets)) covered |= prime_sets[v];
  return !is_subset(full_mask(n) & ~covered, facet.x);
}

std::vector<Mask> minimal_prime_set_supports(const Code& complement_code) {
  std::vector<Mask> out;
  for (const PolarVertexSet& b : prime_sets(complement_code, true)) out.push_back(b.y);
  return out;
}

}  // namespace

ClassificationReport is_intersection_complete_bruteforce(const Code& code) {
  return timed(Property::intersection_complete, Method::brute_force, [&](auto& r) {
    const auto words = code.words();
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = a + 1; b < words.size(); ++b) {
        Codeword meet = words[a] & words[b];
        if (!code.contains(meet)) {
          r.witness = MissingIntersection{{words[a], words[b]}, meet};
          return;
        }
      }
    r.verdict = true;
  });
}

ClassificationReport is_intersection_complete_cf(const Code& code) {
  return timed(Property::intersection_complete, Method::canonical_form, [&](auto& r) {
    for (const Pseudomonomial& p : canonical_form(code).elements)
      if (popcount(p.tau()) > 1) {
        r.witness = ViolatingPseudomonomial{p};
        return;
      }
    r.verdict = true;
  });
}

ClassificationReport is_intersection_complete_facets(const Code& code) {
  return timed(Property::intersection_complete, Method::factor_complex, [&](auto& r) {
    const int n = code.n();
    for (const PolarVertexSet& f : factor_complex(complement(code)).polar_facets())
      if (popcount(f.x) < n - 1) {
        r.witness = ViolatingFacet{f};
        return;
      }
    r.verdict = true;
  });
}

ClassificationReport is_mic_bruteforce(const Code& code) {
  return timed(Property::max_intersection_complete, Method::brute_force, [&](auto& r) {
    const std::vector<Codeword> tops = maximal_codewords(code);
    // Closure of the maximal codewords under pairwise intersection; each
    // value keeps the first (smallest) index set that produced it.
    std::map<Mask, std::vector<int>> reached;
    std::vector<Mask> frontier;
    for (std::size_t j = 0; j < tops.size(); ++j)
      if (reached.emplace(tops[j].bits, std::vector<int>{static_cast<int>(j)}).second)
        frontier.push_back(tops[j].bits);
    while (!frontier.empty()) {
      std::sort(frontier.begin(), frontier.end());
      std::vector<Mask> next;
      for (Mask v : frontier) {
        const std::vector<int> from = reached.at(v);
        for (std::size_t j = 0; j < tops.size(); ++j) {
          Mask meet = v & tops[j].bits;
          if (reached.contains(meet)) continue;
          std::vector<int> idx = from;
          idx.push_back(static_cast<int>(j));
          std::sort(idx.begin(), idx.end());
          reached.emplace(meet, std::move(idx));
          next.push_back(meet);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& [value, idx] : reached) {
      if (code.contains(Codeword{value})) continue;
      MissingIntersection w{{}, Codeword{value}};
      for (int j : idx) w.words.push_back(tops[j]);
      r.witness = std::move(w);
      return;
    }
    r.verdict = true;
  });
}

ClassificationReport is_mic_algebraic(const Code& code) {
  return timed(Property::max_intersection_complete, Method::canonical_form, [&](auto& r) {
    const int n = code.n();
    const CanonicalForm cf = canonical_form(code);
    MicCertificate cert{sr_minimal_primes(code), {}};
    for (const Pseudomonomial& phi : cf.elements) {
      if (phi.is_monomial()) continue;
      auto i = algebraic_index(phi, n, cert.prime_supports);
      if (!i) {
        r.witness = ViolatingPseudomonomial{phi};
        return;
      }
      // phi = alpha([c,d]) with c = sigma, d = [n] \ tau.
      Interval iv(Codeword{phi.sigma()}, Codeword{full_mask(n) & ~phi.tau()});
      PolarVertexSet f = interval_to_face(iv, n);
      cert.entries.push_back({phi, f, *i, h_f(f, cert.prime_supports)});
    }
    r.verdict = true;
    r.certificate = std::move(cert);
  });
}

ClassificationReport is_mic_facets(const Code& code) {
  return timed(Property::max_intersection_complete, Method::factor_complex, [&](auto& r) {
    const int n = code.n();
    const Code comp = complement(code);
    MicCertificate cert{minimal_prime_set_supports(comp), {}};
    std::optional<PolarVertexSet> violation;
    for (const PolarVertexSet& f : factor_complex(comp).polar_facets()) {
      if (f.x == full_mask(n)) continue;
      auto i = facet_index(f, n, cert.prime_supports);
      if (i.has_value() != star_holds(f, n, cert.prime_supports)) {
        throw std::logic_error("facet criterion and H_F criterion disagree on facet " +
                               format_face(f, n) + " of code " + format_code_inline(code));
      }
      if (!i) {
        if (!violation) violation = f;
        continue;
      }
      Pseudomonomial phi = interval_to_pm(face_to_interval(f, n), n);
      cert.entries.push_back({phi, f, *i, h_f(f, cert.prime_supports)});
    }
    if (violation) {
      r.witness = ViolatingFacet{*violation};
      return;
    }
    std::sort(cert.entries.begin(), cert.entries.end(),
              [](const auto& a, const auto& b) { return a.element < b.element; });
    r.verdict = true;
    r.certificate = std::move(cert);
  });
}

bool replay_witness(const Code& code, const ClassificationReport& report) {
  if (report.verdict || !report.witness) return false;
  const int n = code.n();
  const bool mic = report.property == Property::max_intersection_complete;
  return std::visit(
      [&](const auto& w) -> bool {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, MissingIntersection>) {
          if (w.words.empty()) return false;
          const std::vector<Codeword> tops = maximal_codewords(code);
          Codeword meet{code.universe()};
          for (Codeword c : w.words) {
            if (!code.contains(c)) return false;
            if (mic && !std::binary_search(tops.begin(), tops.end(), c)) return false;
            meet = meet & c;
          }
          return meet == w.intersection && !code.contains(meet);
        } else if constexpr (std::is_same_v<W, ViolatingPseudomonomial>) {
          const CanonicalForm cf = canonical_form(code);
          if (!std::binary_search(cf.elements.begin(), cf.elements.end(), w.element)) return false;
          if (!mic) return popcount(w.element.tau()) > 1;
          return !w.element.is_monomial() &&
                 !algebraic_index(w.element, n, sr_minimal_primes(code)).has_value();
        } else {
          const Code comp = complement(code);
          if (!factor_complex(comp).is_facet(w.facet.pack(n))) return false;
          if (!mic) return popcount(w.facet.x) < n - 1;
          return w.facet.x != full_mask(n) &&
                 !facet_index(w.facet, n, minimal_prime_set_supports(comp)).has_value();
        }
      },
      *report.witness);
}

bool check_certificate(const Code& code, const MicCertificate& cert) {
  const int n = code.n();
  const Code comp = complement(code);
  const CanonicalForm cf = canonical_form(code);
  const SimplicialComplex cx = factor_complex(comp);
  if (cert.prime_supports != sr_minimal_primes(code)) return false;
  std::size_t non_monomials = std::count_if(cf.elements.begin(), cf.elements.end(),
                                            [](const auto& p) { return !p.is_monomial(); });
  if (cert.entries.size() != non_monomials) return false;
  for (const MicCertificateEntry& e : cert.entries) {
    if (!std::binary_search(cf.elements.begin(), cf.elements.end(), e.element)) return false;
    if (e.element.is_monomial()) return false;
    if (e.index < 1 || e.index > n) return false;
    if (!algebraic_clauses_hold(e.element, e.index, cert.prime_supports)) return false;
    if (!cx.is_facet(e.facet.pack(n))) return false;
    if (interval_to_pm(face_to_interval(e.facet, n), n) != e.element) return false;
    if (!facet_clauses_hold(e.facet, e.index, cert.prime_supports)) return false;
    if (e.h_f != h_f(e.facet, cert.prime_supports)) return false;
  }
  return true;
}

bool DictionaryReport::passed() const noexcept {
  return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.passed; });
}

namespace {

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

DictionaryReport verify_dictionary(const Code& code) {
  const int n = code.n();
  const Code comp = complement(code);
  const std::vector<Interval> intervals = maximal_intervals(code);
  const CanonicalForm cf_comp = canonical_form(comp);
  const SimplicialComplex cx = complex_of_ideal(factor_ideal(code));
  DictionaryReport report;

  auto add = [&](std::string name, std::string detail) {
    bool ok = detail.empty();
    report.items.push_back({std::move(name), ok, std::move(detail)});
  };

  {
    std::vector<Pseudomonomial> image;
    for (const Interval& iv : intervals) image.push_back(interval_to_pm(iv, n));
    image = sorted(std::move(image));
    std::string detail;
    if (image != cf_comp.elements)
      detail = "alpha image " + format_pseudomonomials(image) + " vs CF(J_C') " +
               format_pseudomonomials(cf_comp.elements);
    add("alpha: maximal intervals of C -> CF(J_C')", detail);
  }
  {
    std::vector<Mask> image;
    for (const Interval& iv : intervals) image.push_back(interval_to_face(iv, n).pack(n));
    image = sorted(std::move(image));
    std::string detail;
    if (image != cx.facets()) detail = "beta image differs from facets of the factor complex";
    add("beta: maximal intervals of C -> facets of factor complex", detail);
  }
  {
    std::string detail;
    for (const PolarVertexSet& f : cx.polar_facets())
      if (!is_effective(f, n)) {
        detail = "defective facet " + format_face(f, n);
        break;
      }
    add("every facet of the factor complex is effective", detail);
  }
  {
    std::string detail;
    for_each_subset(code.universe(), [&](Mask d) {
      for_each_subset(d, [&](Mask c) {
        if (!detail.empty()) return;
        Interval iv(Codeword{c}, Codeword{d});
        bool inside = contains_interval(code, iv);
        Mask face = interval_to_face(iv, n).pack(n);
        if (inside != cx.is_face(face)) {
          detail = "interval/face mismatch at " + format_interval(iv, n);
          return;
        }
        if (!inside) return;
        bool maximal = std::binary_search(intervals.begin(), intervals.end(), iv);
        bool in_cf = std::binary_search(cf_comp.elements.begin(), cf_comp.elements.end(),
                                        interval_to_pm(iv, n));
        bool facet = cx.is_facet(face);
        if (maximal != in_cf || maximal != facet)
          detail = "maximality mismatch at " + format_interval(iv, n);
      });
    });
    add("interval maximal <=> pseudomonomial in CF <=> face is facet", detail);
  }
  {
    const std::vector<Codeword> tops = maximal_codewords(code);
    std::vector<Mask> gamma, delta;
    for (Codeword m : tops) {
      gamma.push_back(code.universe() & ~m.bits);
      delta.push_back(code.universe() & ~m.bits);
    }
    std::vector<Mask> monomial_supports;
    for (const Pseudomonomial& p : cf_monomials(canonical_form(code)))
      monomial_supports.push_back(p.sigma());
    std::string detail;
    if (sorted(gamma) != minimal_transversals(monomial_supports))
      detail = "minimal primes of I(Delta(C)) differ from complements of maximal codewords";
    add("gamma: maximal codewords -> minimal primes of I(Delta(C))", detail);

    std::vector<Mask> found;
    for (const PolarVertexSet& b : prime_sets(comp, true)) found.push_back(b.y);
    detail.clear();
    if (sorted(delta) != found)
      detail = "minimal prime-sets of the factor complex of C' differ from complements of "
               "maximal codewords";
    add("delta: maximal codewords -> minimal prime-sets of factor complex of C'", detail);
  }
  return report;
}

}  // namespace neuralcode
