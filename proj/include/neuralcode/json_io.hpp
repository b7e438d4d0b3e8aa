#pragma once

// JSON renderings. Neuron sets are arrays of 1-based indices; polar sets are
// {"x": [...], "y": [...]}. Top-level documents carry "schema": 1.

#include <json.hpp>

#include "neuralcode/classify.hpp"
#include "neuralcode/code.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/ideal.hpp"

namespace neuralcode {

inline constexpr int kJsonSchema = 1;

nlohmann::json set_json(Mask set);
nlohmann::json code_json(const Code& code);
nlohmann::json interval_json(const Interval& iv);
nlohmann::json pseudomonomial_json(const Pseudomonomial& p);
nlohmann::json prime_json(const PrimePseudoIdeal& p);
nlohmann::json face_json(const PolarVertexSet& face);
/// Facets of a complex; polar complexes as face objects, plain as arrays.
nlohmann::json complex_json(const SimplicialComplex& cx);
/// Generator supports, in the same shape as complex_json.
nlohmann::json ideal_json(const SquarefreeMonomialIdeal& ideal);
nlohmann::json witness_json(const Witness& w);
nlohmann::json certificate_json(const MicCertificate& cert);
/// property, method, verdict, witness (null when absent), timing_us.
nlohmann::json report_json(const ClassificationReport& r);
nlohmann::json dictionary_json(const DictionaryReport& r);

}  // namespace neuralcode
