#pragma once

// Deciders for intersection-completeness (IC) and max-intersection-
// completeness (MIC), each by a brute-force closure and by the canonical
// form and factor complex characterizations, plus an end-to-end check of
// the interval / pseudomonomial / facet and codeword / prime / prime-set
// dictionaries.

#include <chrono>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "neuralcode/code.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/ideal.hpp"

namespace neuralcode {

enum class Property { intersection_complete, max_intersection_complete };
enum class Method { brute_force, canonical_form, factor_complex };

const char* to_string(Property p) noexcept;
const char* to_string(Method m) noexcept;

/// Codewords whose intersection is not a codeword.
struct MissingIntersection {
  std::vector<Codeword> words;
  Codeword intersection;
};

/// A canonical-form element that breaks the criterion.
struct ViolatingPseudomonomial {
  Pseudomonomial element;
};

/// A facet of the factor complex of the complement that breaks the criterion.
struct ViolatingFacet {
  PolarVertexSet facet;
};

using Witness = std::variant<MissingIntersection, ViolatingPseudomonomial, ViolatingFacet>;

/// One entry per non-monomial phi in CF(J_C), equivalently per facet F of
/// the factor complex of C' not containing [n].
struct MicCertificateEntry {
  Pseudomonomial element;
  PolarVertexSet facet;
  int index = 0;             // 1-based neuron i meeting both clauses
  std::vector<int> h_f;      // positions v (0-based) with B_v-bar inside F
};

struct MicCertificate {
  /// Variable sets B_v of the minimal primes, indexed by v.
  std::vector<Mask> prime_supports;
  std::vector<MicCertificateEntry> entries;
};

struct ClassificationReport {
  Property property;
  Method method;
  bool verdict = false;
  std::optional<Witness> witness;           // set iff verdict is false
  std::optional<MicCertificate> certificate;  // MIC, canonical form or facets, verdict true
  std::chrono::microseconds elapsed{0};
};

ClassificationReport is_intersection_complete_bruteforce(const Code& code);
ClassificationReport is_intersection_complete_cf(const Code& code);
ClassificationReport is_intersection_complete_facets(const Code& code);

ClassificationReport is_mic_bruteforce(const Code& code);
/// Canonical form of J_C against the minimal primes of I(Delta(C)).
ClassificationReport is_mic_algebraic(const Code& code);
/// Facets and minimal prime-sets of the factor complex of C'. Also
/// evaluates the H_F form of the criterion and throws std::logic_error if
/// the two disagree.
ClassificationReport is_mic_facets(const Code& code);

/// Re-checks a false verdict's witness through the public operations.
/// True when the witness really exhibits a violation.
bool replay_witness(const Code& code, const ClassificationReport& report);

/// Re-checks every entry of an MIC certificate independently.
bool check_certificate(const Code& code, const MicCertificate& cert);

struct DictionaryItem {
  std::string name;
  bool passed = false;
  std::string detail;  // the offending object when failed
};

struct DictionaryReport {
  std::vector<DictionaryItem> items;
  bool passed() const noexcept;
};

/// Checks, for `code` and its complement: the interval -> pseudomonomial
/// map onto CF(J_C'), the interval -> facet map onto the factor complex
/// with all facets effective, the three-way maximality equivalence over all
/// intervals, and the maximal codeword -> minimal prime -> minimal
/// prime-set maps.
DictionaryReport verify_dictionary(const Code& code);

}  // namespace neuralcode
