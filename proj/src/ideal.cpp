#include "neuralcode/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "neuralcode/errors.hpp"

namespace neuralcode {

Pseudomonomial::Pseudomonomial(Mask sigma, Mask tau) : sigma_(sigma), tau_(tau) {
  if (sigma & tau)
    throw std::invalid_argument("pseudomonomial has x_i and (1-x_i) for the same i");
}

Pseudomonomial indicator(Codeword c, int n) {
  return Pseudomonomial(c.bits, full_mask(n) & ~c.bits);
}

bool evaluate(const Pseudomonomial& p, Codeword w) noexcept {
  return is_subset(p.sigma(), w.bits) && (p.tau() & w.bits) == 0;
}

bool in_neural_ideal(const Pseudomonomial& p, const Code& code) {
  return std::none_of(code.words().begin(), code.words().end(),
                      [&](Codeword w) { return evaluate(p, w); });
}

bool in_neural_ideal_by_interval(const Pseudomonomial& p, const Code& code) {
  const Mask free = code.universe() & ~p.support();
  bool hit = false;
  for (Mask s = free;; s = (s - 1) & free) {
    if (code.contains(Codeword{p.sigma() | s})) {
      hit = true;
      break;
    }
    if (s == 0) break;
  }
  return !hit;
}

bool divides(const Pseudomonomial& p, const Pseudomonomial& q) noexcept {
  return is_subset(p.sigma(), q.sigma()) && is_subset(p.tau(), q.tau());
}

CanonicalForm canonical_form(const Code& code) {
  const int n = code.n();
  if (n > kCanonicalFormCap)
    throw CapExceeded("canonical form enumeration is limited to n <= " +
                      std::to_string(kCanonicalFormCap) + " (3^n candidates), got n = " +
                      std::to_string(n));
  CanonicalForm cf{n, {}};
  // Supports are visited by increasing size, so anything already found that
  // divides a candidate makes it non-minimal, and nothing found later can.
  for (Mask support : masks_by_popcount(n)) {
    const std::size_t free_points = std::size_t{1} << (n - popcount(support));
    for_each_subset(support, [&](Mask sigma) {
      Pseudomonomial p(sigma, support & ~sigma);
      bool reducible = std::any_of(cf.elements.begin(), cf.elements.end(),
                                   [&](const Pseudomonomial& q) { return divides(q, p); });
      if (reducible) return;
      bool member = free_points <= code.size() ? in_neural_ideal_by_interval(p, code)
                                               : in_neural_ideal(p, code);
      if (member) cf.elements.push_back(p);
    });
  }
  std::sort(cf.elements.begin(), cf.elements.end());
  return cf;
}

std::vector<Pseudomonomial> cf_monomials(const CanonicalForm& cf) {
  std::vector<Pseudomonomial> out;
  std::copy_if(cf.elements.begin(), cf.elements.end(), std::back_inserter(out),
               [](const Pseudomonomial& p) { return p.is_monomial(); });
  return out;
}

std::vector<PrimePseudoIdeal> primary_decomposition(const Code& code) {
  std::vector<PrimePseudoIdeal> out;
  for (const Interval& iv : maximal_intervals(code))
    out.push_back({code.universe() & ~iv.hi().bits, iv.lo().bits});
  std::sort(out.begin(), out.end());
  return out;
}

Pseudomonomial interval_to_pm(const Interval& iv, int n) {
  return Pseudomonomial(iv.lo().bits, full_mask(n) & ~iv.hi().bits);
}

}  // namespace neuralcode
