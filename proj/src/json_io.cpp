#include "neuralcode/json_io.hpp"

#include "neuralcode/format.hpp"

namespace neuralcode {

using nlohmann::json;

json set_json(Mask set) {
  json out = json::array();
  for_each_bit(set, [&](int b) { out.push_back(b + 1); });
  return out;
}

json code_json(const Code& code) {
  json words = json::array();
  for (Codeword w : code.words()) words.push_back(set_json(w.bits));
  return {{"n", code.n()}, {"words", std::move(words)}};
}

json interval_json(const Interval& iv) {
  return {{"lo", set_json(iv.lo().bits)}, {"hi", set_json(iv.hi().bits)}};
}

json pseudomonomial_json(const Pseudomonomial& p) {
  return {{"sigma", set_json(p.sigma())},
          {"tau", set_json(p.tau())},
          {"text", format_pseudomonomial(p)}};
}

json prime_json(const PrimePseudoIdeal& p) {
  return {{"x", set_json(p.pos)}, {"one_minus_x", set_json(p.neg)}, {"text", format_prime(p)}};
}

json face_json(const PolarVertexSet& face) {
  return {{"x", set_json(face.x)}, {"y", set_json(face.y)}};
}

namespace {

json sets_json(const std::vector<Mask>& sets, VertexUniverse universe, int n) {
  json out = json::array();
  for (Mask s : sets) {
    if (universe == VertexUniverse::polar)
      out.push_back(face_json(PolarVertexSet::unpack(s, n)));
    else
      out.push_back(set_json(s));
  }
  return out;
}

}  // namespace

json complex_json(const SimplicialComplex& cx) {
  return sets_json(cx.facets(), cx.universe(), cx.n());
}

json ideal_json(const SquarefreeMonomialIdeal& ideal) {
  return sets_json(ideal.generators(), ideal.universe(), ideal.n());
}

json witness_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using W = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<W, MissingIntersection>) {
          json words = json::array();
          for (Codeword c : v.words) words.push_back(set_json(c.bits));
          return {{"kind", "missing_intersection"},
                  {"words", std::move(words)},
                  {"intersection", set_json(v.intersection.bits)}};
        } else if constexpr (std::is_same_v<W, ViolatingPseudomonomial>) {
          return {{"kind", "pseudomonomial"}, {"element", pseudomonomial_json(v.element)}};
        } else {
          return {{"kind", "facet"}, {"facet", face_json(v.facet)}};
        }
      },
      w);
}

json certificate_json(const MicCertificate& cert) {
  json primes = json::array();
  for (Mask b : cert.prime_supports) primes.push_back(set_json(b));
  json entries = json::array();
  for (const MicCertificateEntry& e : cert.entries)
    entries.push_back({{"element", pseudomonomial_json(e.element)},
                       {"facet", face_json(e.facet)},
                       {"index", e.index},
                       {"h_f", e.h_f}});
  return {{"prime_supports", std::move(primes)}, {"entries", std::move(entries)}};
}

json report_json(const ClassificationReport& r) {
  json out = {{"property", to_string(r.property)},
              {"method", to_string(r.method)},
              {"verdict", r.verdict},
              {"witness", r.witness ? witness_json(*r.witness) : json(nullptr)},
              {"timing_us", r.elapsed.count()}};
  if (r.certificate) out["certificate"] = certificate_json(*r.certificate);
  return out;
}

json dictionary_json(const DictionaryReport& r) {
  json items = json::array();
  for (const DictionaryItem& i : r.items)
    items.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
  return {{"passed", r.passed()}, {"items", std::move(items)}};
}

}  // namespace neuralcode
