#pragma once

// Pseudomonomials over F_2 and the neural ideal J_C.
//
// Ideals are never stored as polynomials. J_C is determined by its zero set,
// the code itself, so membership, canonical forms and prime components are
// all computed from the code.

#include <compare>
#include <vector>

#include "neuralcode/bits.hpp"
#include "neuralcode/code.hpp"

namespace neuralcode {

/// prod_{i in sigma} x_i * prod_{j in tau} (1 - x_j), sigma and tau disjoint.
class Pseudomonomial {
 public:
  constexpr Pseudomonomial() = default;
  /// Throws std::invalid_argument when sigma and tau overlap.
  Pseudomonomial(Mask sigma, Mask tau);

  Mask sigma() const noexcept { return sigma_; }
  Mask tau() const noexcept { return tau_; }
  Mask support() const noexcept { return sigma_ | tau_; }
  int degree() const noexcept { return popcount(support()); }
  bool is_monomial() const noexcept { return tau_ == 0; }
  bool is_unit() const noexcept { return support() == 0; }

  friend auto operator<=>(const Pseudomonomial&, const Pseudomonomial&) = default;

 private:
  Mask sigma_ = 0;
  Mask tau_ = 0;
};

/// Prime pseudomonomial ideal <x_i : i in pos> + <1 - x_j : j in neg>.
struct PrimePseudoIdeal {
  Mask pos = 0;
  Mask neg = 0;

  /// The zero set, the interval [neg, [n] \ pos].
  Interval zero_set(int n) const { return Interval(Codeword{neg}, Codeword{full_mask(n) & ~pos}); }

  friend auto operator<=>(const PrimePseudoIdeal&, const PrimePseudoIdeal&) = default;
};

/// The divisibility-minimal pseudomonomials of a neural ideal, ascending by
/// (sigma, tau).
struct CanonicalForm {
  int n = 0;
  std::vector<Pseudomonomial> elements;
};

/// Largest n for which canonical_form runs its exhaustive 3^n scan.
inline constexpr int kCanonicalFormCap = 12;

/// Indicator polynomial phi_c: sigma = c, tau = [n] \ c.
Pseudomonomial indicator(Codeword c, int n);

/// Value of p at the 0/1 point w.
bool evaluate(const Pseudomonomial& p, Codeword w) noexcept;

/// p in J_C, decided by evaluating p on every codeword.
bool in_neural_ideal(const Pseudomonomial& p, const Code& code);

/// p in J_C, decided by checking that [sigma, [n] \ tau] holds no codeword.
bool in_neural_ideal_by_interval(const Pseudomonomial& p, const Code& code);

/// p | q.
bool divides(const Pseudomonomial& p, const Pseudomonomial& q) noexcept;

/// CF(J_C). Throws CapExceeded when n > kCanonicalFormCap.
CanonicalForm canonical_form(const Code& code);

/// The monomial elements (tau empty); they generate I(Delta(C)).
std::vector<Pseudomonomial> cf_monomials(const CanonicalForm& cf);

/// Irredundant prime components of J_C, one per maximal interval of C,
/// ascending.
std::vector<PrimePseudoIdeal> primary_decomposition(const Code& code);

/// [c,d] -> prod_{i in c} x_i * prod_{j not in d} (1 - x_j).
Pseudomonomial interval_to_pm(const Interval& iv, int n);

}  // namespace neuralcode
