#include "neuralcode/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "neuralcode/errors.hpp"

namespace neuralcode {

SimplicialComplex::SimplicialComplex(VertexUniverse universe, int n, std::vector<Mask> facets)
    : universe_(universe), n_(n), facets_(maximal_sets(std::move(facets))) {
  for (Mask f : facets_)
    if (!is_subset(f, vertices()))
      throw std::invalid_argument("facet uses a vertex outside the universe");
}

bool SimplicialComplex::is_face(Mask face) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](Mask f) { return is_subset(face, f); });
}

bool SimplicialComplex::is_facet(Mask face) const noexcept {
  return std::binary_search(facets_.begin(), facets_.end(), face);
}

std::vector<PolarVertexSet> SimplicialComplex::polar_facets() const {
  std::vector<PolarVertexSet> out;
  out.reserve(facets_.size());
  for (Mask f : facets_) out.push_back(PolarVertexSet::unpack(f, n_));
  return out;
}

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(VertexUniverse universe, int n,
                                                 std::vector<Mask> generators)
    : universe_(universe), n_(n), generators_(minimal_sets(std::move(generators))) {
  const Mask all = full_mask(vertex_count(universe, n));
  for (Mask g : generators_)
    if (!is_subset(g, all))
      throw std::invalid_argument("generator uses a variable outside the universe");
}

bool SquarefreeMonomialIdeal::contains(Mask support) const noexcept {
  return std::any_of(generators_.begin(), generators_.end(),
                     [support](Mask g) { return is_subset(g, support); });
}

PolarVertexSet polarize(const Pseudomonomial& p) noexcept { return {p.sigma(), p.tau()}; }

SquarefreeMonomialIdeal polar_ideal(const Code& code) {
  std::vector<Mask> gens;
  for (const Pseudomonomial& p : canonical_form(code).elements)
    gens.push_back(polarize(p).pack(code.n()));
  return SquarefreeMonomialIdeal(VertexUniverse::polar, code.n(), std::move(gens));
}

SquarefreeMonomialIdeal factor_ideal(const Code& code) {
  // A squarefree monomial lies in an intersection of variable-generated
  // primes iff its support meets each prime's variable set.
  std::vector<Mask> prime_vars;
  for (const PrimePseudoIdeal& p : primary_decomposition(code))
    prime_vars.push_back(PolarVertexSet{p.pos, p.neg}.pack(code.n()));
  return SquarefreeMonomialIdeal(VertexUniverse::polar, code.n(),
                                 minimal_transversals_by_product(prime_vars));
}

SimplicialComplex complex_of_ideal(const SquarefreeMonomialIdeal& ideal) {
  const Mask all = full_mask(vertex_count(ideal.universe(), ideal.n()));
  std::vector<Mask> facets;
  for (Mask t : minimal_transversals(ideal.generators())) facets.push_back(all & ~t);
  return SimplicialComplex(ideal.universe(), ideal.n(), std::move(facets));
}

SquarefreeMonomialIdeal ideal_of_complex(const SimplicialComplex& complex) {
  std::vector<Mask> cofacets;
  for (Mask f : complex.facets()) cofacets.push_back(complex.vertices() & ~f);
  return SquarefreeMonomialIdeal(complex.universe(), complex.n(),
                                 minimal_transversals(cofacets));
}

PolarVertexSet interval_to_face(const Interval& iv, int n) {
  return {iv.hi().bits, full_mask(n) & ~iv.lo().bits};
}

SimplicialComplex factor_complex(const Code& code) {
  std::vector<Mask> facets;
  for (const Interval& iv : maximal_intervals(code))
    facets.push_back(interval_to_face(iv, code.n()).pack(code.n()));
  return SimplicialComplex(VertexUniverse::polar, code.n(), std::move(facets));
}

SimplicialComplex polar_complex(const Code& code) {
  return complex_of_ideal(polar_ideal(code));
}

bool is_effective(const PolarVertexSet& face, int n) noexcept {
  return (face.x | face.y) == full_mask(n);
}

Interval face_to_interval(const PolarVertexSet& face, int n) {
  if (!is_effective(face, n))
    throw std::invalid_argument("defective face has no interval");
  return Interval(Codeword{full_mask(n) & ~face.y}, Codeword{face.x});
}

std::vector<PolarVertexSet> prime_sets(const Code& code, bool minimal_only) {
  const int n = code.n();
  if (n > kPrimeSetCap)
    throw CapExceeded("prime-set enumeration is limited to n <= " +
                      std::to_string(kPrimeSetCap) + ", got n = " + std::to_string(n));
  const SimplicialComplex cx = factor_complex(code);
  std::vector<Mask> found;
  for (Mask b = 0; b <= full_mask(n); ++b)
    if (!cx.is_face(PolarVertexSet{full_mask(n), b})) found.push_back(b);
  if (minimal_only) found = minimal_sets(std::move(found));
  std::vector<PolarVertexSet> out;
  for (Mask b : found) out.push_back({0, b});
  return out;
}

std::vector<Mask> sr_minimal_primes(const Code& code) {
  std::vector<Mask> out;
  for (Codeword m : maximal_codewords(code)) out.push_back(code.universe() & ~m.bits);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace neuralcode
