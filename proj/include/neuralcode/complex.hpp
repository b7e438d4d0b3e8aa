#pragma once

// Simplicial complexes and squarefree monomial ideals on [n] and on the
// polar vertex set [n] u [n-bar].
//
// Packed polar masks put vertex i at bit i-1 and the barred vertex i-bar at
// bit n+i-1, so x_i <-> i and y_i <-> i-bar.

#include <compare>
#include <vector>

#include "neuralcode/bits.hpp"
#include "neuralcode/code.hpp"
#include "neuralcode/ideal.hpp"

namespace neuralcode {

enum class VertexUniverse { plain, polar };

/// A set of vertices of [n] u [n-bar], split into plain and barred parts.
struct PolarVertexSet {
  Mask x = 0;  // plain vertices i
  Mask y = 0;  // barred vertices i-bar

  Mask pack(int n) const noexcept { return x | (y << n); }
  static PolarVertexSet unpack(Mask packed, int n) noexcept {
    return {packed & full_mask(n), (packed >> n) & full_mask(n)};
  }

  friend auto operator<=>(const PolarVertexSet&, const PolarVertexSet&) = default;
};

/// Vertex count of the universe: n or 2n.
constexpr int vertex_count(VertexUniverse u, int n) noexcept {
  return u == VertexUniverse::polar ? 2 * n : n;
}

/// A simplicial complex given by its facets.
class SimplicialComplex {
 public:
  /// Reduces `facets` to its maximal elements, sorted ascending. An empty
  /// list is the void complex (no faces at all).
  SimplicialComplex(VertexUniverse universe, int n, std::vector<Mask> facets);

  VertexUniverse universe() const noexcept { return universe_; }
  int n() const noexcept { return n_; }
  int vertex_count() const noexcept { return neuralcode::vertex_count(universe_, n_); }
  Mask vertices() const noexcept { return full_mask(vertex_count()); }
  const std::vector<Mask>& facets() const noexcept { return facets_; }

  bool is_face(Mask face) const noexcept;
  bool is_face(const PolarVertexSet& face) const noexcept { return is_face(face.pack(n_)); }
  bool is_facet(Mask face) const noexcept;

  /// Facets split into plain and barred parts (polar universe only).
  std::vector<PolarVertexSet> polar_facets() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  VertexUniverse universe_;
  int n_;
  std::vector<Mask> facets_;
};

/// A squarefree monomial ideal, stored as the supports of its minimal
/// generators.
class SquarefreeMonomialIdeal {
 public:
  /// Reduces `generators` to an antichain, sorted ascending.
  SquarefreeMonomialIdeal(VertexUniverse universe, int n, std::vector<Mask> generators);

  VertexUniverse universe() const noexcept { return universe_; }
  int n() const noexcept { return n_; }
  const std::vector<Mask>& generators() const noexcept { return generators_; }

  /// The monomial with this support lies in the ideal.
  bool contains(Mask support) const noexcept;
  bool contains(const PolarVertexSet& support) const noexcept {
    return contains(support.pack(n_));
  }

  friend bool operator==(const SquarefreeMonomialIdeal&, const SquarefreeMonomialIdeal&) = default;

 private:
  VertexUniverse universe_;
  int n_;
  std::vector<Mask> generators_;
};

/// Polarization: x_i stays x_i and (1 - x_j) becomes y_j.
PolarVertexSet polarize(const Pseudomonomial& p) noexcept;

/// P(J_C) = < P(phi) : phi in CF(J_C) >. Propagates CapExceeded.
SquarefreeMonomialIdeal polar_ideal(const Code& code);

/// FI(C): the intersection of the polarized prime components of J_C.
SquarefreeMonomialIdeal factor_ideal(const Code& code);

/// The complex whose Stanley-Reisner ideal is `ideal`: facets are the
/// complements of the minimal transversals of the generators.
SimplicialComplex complex_of_ideal(const SquarefreeMonomialIdeal& ideal);

/// The Stanley-Reisner ideal of `complex`: its minimal non-faces.
SquarefreeMonomialIdeal ideal_of_complex(const SimplicialComplex& complex);

/// [c,d] -> d u bar([n] \ c).
PolarVertexSet interval_to_face(const Interval& iv, int n);

/// The factor complex, built from the maximal intervals of the code.
SimplicialComplex factor_complex(const Code& code);

/// The polar complex, the complex of P(J_C). Propagates CapExceeded.
SimplicialComplex polar_complex(const Code& code);

/// Contains i or i-bar for every i in [n].
bool is_effective(const PolarVertexSet& face, int n) noexcept;

/// Inverse of interval_to_face. Throws std::invalid_argument for a
/// defective face.
Interval face_to_interval(const PolarVertexSet& face, int n);

/// Largest n for which prime_sets scans all 2^n barred sets.
inline constexpr int kPrimeSetCap = 12;

/// Barred sets B-bar with [n] u B-bar not a face of the factor complex of
/// `code`; with `minimal_only`, just the inclusion-minimal ones. Every result
/// has an empty plain part. Throws CapExceeded when n > kPrimeSetCap.
std::vector<PolarVertexSet> prime_sets(const Code& code, bool minimal_only);

/// Variable sets of the minimal primes of I(Delta(C)): [n] \ M for each
/// maximal codeword M, ascending.
std::vector<Mask> sr_minimal_primes(const Code& code);

}  // namespace neuralcode
