#include "neuralcode/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "neuralcode/classify.hpp"
#include "neuralcode/document.hpp"
#include "neuralcode/errors.hpp"
#include "neuralcode/format.hpp"
#include "neuralcode/json_io.hpp"
#include "neuralcode/survey.hpp"

namespace neuralcode {

namespace {

using nlohmann::json;

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json envelope(const char* command, const Code& code) {
  return {{"schema", kJsonSchema}, {"command", command}, {"code", code_json(code)}};
}

template <class T, class F>
std::string joined(const std::vector<T>& items, F&& fmt) {
  if (items.empty()) return "none";
  std::string out;
  for (const T& item : items) {
    if (!out.empty()) out += ' ';
    out += fmt(item);
  }
  return out;
}

std::string witness_text(const Witness& w, int n) {
  return std::visit(
      [n](const auto& v) -> std::string {
        using W = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<W, MissingIntersection>) {
          std::string out;
          for (Codeword c : v.words) out += (out.empty() ? "" : " & ") + format_codeword(c, n);
          return out + " = " + format_codeword(v.intersection, n) + " not in C";
        } else if constexpr (std::is_same_v<W, ViolatingPseudomonomial>) {
          return format_pseudomonomial(v.element) + " in CF(J_C)";
        } else {
          return "facet " + format_face(v.facet, n) + " of the factor complex of C'";
        }
      },
      w);
}

void print_report(std::ostream& out, const ClassificationReport& r, int n) {
  out << to_string(r.property) << ' ' << to_string(r.method) << ": "
      << (r.verdict ? "true" : "false");
  if (r.witness) out << "  witness: " << witness_text(*r.witness, n);
  out << '\n';
  if (!r.certificate) return;
  for (const MicCertificateEntry& e : r.certificate->entries) {
    out << "  i=" << e.index << " for " << format_pseudomonomial(e.element) << " / facet "
        << format_face(e.facet, n) << ", H_F={";
    for (std::size_t k = 0; k < e.h_f.size(); ++k) out << (k ? "," : "") << e.h_f[k];
    out << "}\n";
  }
}

struct Options {
  bool json = false;
  std::string input;
  std::string property;
  std::string method = "all";
  int survey_n = 0;
};

int cmd_cf(const Code& code, const Options& opt, std::ostream& out) {
  const CanonicalForm cf = canonical_form(code);
  if (opt.json) {
    json j = envelope("cf", code);
    j["canonical_form"] = json::array();
    for (const auto& p : cf.elements) j["canonical_form"].push_back(pseudomonomial_json(p));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& p : cf.elements) out << format_pseudomonomial(p) << '\n';
  }
  return kExitOk;
}

int cmd_intervals(const Code& code, const Options& opt, std::ostream& out) {
  const auto ivs = maximal_intervals(code);
  if (opt.json) {
    json j = envelope("intervals", code);
    j["maximal_intervals"] = json::array();
    for (const auto& iv : ivs) j["maximal_intervals"].push_back(interval_json(iv));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& iv : ivs) out << format_interval(iv, code.n()) << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const Code& code, const Options& opt, std::ostream& out) {
  const auto primes = primary_decomposition(code);
  if (opt.json) {
    json j = envelope("decompose", code);
    j["primes"] = json::array();
    for (const auto& p : primes) {
      json pj = prime_json(p);
      pj["zero_set"] = interval_json(p.zero_set(code.n()));
      j["primes"].push_back(std::move(pj));
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& p : primes)
      out << format_prime(p) << "\tzero set " << format_interval(p.zero_set(code.n()), code.n())
          << '\n';
  }
  return kExitOk;
}

int cmd_complexes(const Code& code, const Options& opt, std::ostream& out) {
  const int n = code.n();
  const SimplicialComplex delta = downward_closure(code);
  const SquarefreeMonomialIdeal sr = ideal_of_complex(delta);
  const std::vector<Mask> sr_primes = sr_minimal_primes(code);
  const SquarefreeMonomialIdeal fi = factor_ideal(code);
  const SimplicialComplex factor = factor_complex(code);
  const SquarefreeMonomialIdeal pi = polar_ideal(code);
  const SimplicialComplex polar = polar_complex(code);
  const auto all_prime_sets = prime_sets(code, false);
  const auto min_prime_sets = prime_sets(code, true);

  if (opt.json) {
    json j = envelope("complexes", code);
    j["delta"] = {{"facets", complex_json(delta)}, {"stanley_reisner", ideal_json(sr)}};
    j["sr_minimal_primes"] = json::array();
    for (Mask b : sr_primes) j["sr_minimal_primes"].push_back(set_json(b));
    j["factor"] = {{"ideal", ideal_json(fi)}, {"facets", complex_json(factor)}};
    j["polar"] = {{"ideal", ideal_json(pi)}, {"facets", complex_json(polar)}};
    json effective = json::array();
    for (const auto& f : polar.polar_facets()) effective.push_back(is_effective(f, n));
    j["polar"]["effective"] = std::move(effective);
    j["prime_sets"] = json::array();
    for (const auto& b : all_prime_sets) j["prime_sets"].push_back(face_json(b));
    j["minimal_prime_sets"] = json::array();
    for (const auto& b : min_prime_sets) j["minimal_prime_sets"].push_back(face_json(b));
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  auto plain_set = [n](Mask m) { return format_set(m, n); };
  auto face = [n](const PolarVertexSet& f) { return format_face(f, n); };
  auto mono = [](VertexUniverse u, int n) {
    return [u, n](Mask m) { return format_monomial(m, u, n); };
  };
  out << "Delta(C) facets: " << joined(delta.facets(), plain_set) << '\n';
  out << "I(Delta(C)) generators: " << joined(sr.generators(), mono(VertexUniverse::plain, n))
      << '\n';
  out << "I(Delta(C)) minimal primes: " << joined(sr_primes, format_variable_prime) << '\n';
  out << "factor ideal generators: " << joined(fi.generators(), mono(VertexUniverse::polar, n))
      << '\n';
  out << "factor complex facets: " << joined(factor.polar_facets(), face) << '\n';
  out << "polar ideal generators: " << joined(pi.generators(), mono(VertexUniverse::polar, n))
      << '\n';
  out << "polar complex facets: " << joined(polar.polar_facets(), [n](const PolarVertexSet& f) {
    return format_face(f, n) + (is_effective(f, n) ? "" : "(defective)");
  }) << '\n';
  out << "prime-sets: " << joined(all_prime_sets, face) << '\n';
  out << "minimal prime-sets: " << joined(min_prime_sets, face) << '\n';
  return kExitOk;
}

int cmd_check(const Code& code, const Options& opt, std::ostream& out, std::ostream& err) {
  const bool ic = opt.property == "ic";
  std::vector<ClassificationReport> reports;
  const std::string& m = opt.method;
  if (m == "all" || m == "brute")
    reports.push_back(ic ? is_intersection_complete_bruteforce(code) : is_mic_bruteforce(code));
  if (m == "all" || m == "cf" || m == "algebraic")
    reports.push_back(ic ? is_intersection_complete_cf(code) : is_mic_algebraic(code));
  if (m == "all" || m == "facets")
    reports.push_back(ic ? is_intersection_complete_facets(code) : is_mic_facets(code));

  if (opt.json) {
    json j = envelope("check", code);
    j["property"] = ic ? "IC" : "MIC";
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) print_report(out, r, code.n());
  }
  const bool all_true = std::all_of(reports.begin(), reports.end(), [](auto& r) { return r.verdict; });
  const bool all_false = std::none_of(reports.begin(), reports.end(), [](auto& r) { return r.verdict; });
  if (!all_true && !all_false) {
    err << "error: methods disagree on " << format_code_inline(code) << '\n';
    return kExitInputError;
  }
  return all_true ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Code& code, const Options& opt, std::ostream& out) {
  const DictionaryReport r = verify_dictionary(code);
  if (opt.json) {
    json j = envelope("verify", code);
    j["dictionary"] = dictionary_json(r);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& item : r.items) {
      out << (item.passed ? "[ok]   " : "[FAIL] ") << item.name;
      if (!item.passed) out << ": " << item.detail;
      out << '\n';
    }
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_survey(const Options& opt, std::ostream& out) {
  const SurveyResult result = survey(opt.survey_n);
  if (opt.json)
    out << survey_json(result).dump(2) << '\n';
  else
    out << render_survey_text(result);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Neural code toolkit: canonical forms, factor and polar complexes, and "
               "intersection-completeness checks.",
               "neuralcode"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_flag("--json", opt.json, "Write JSON to stdout");
  app.add_option("--input", opt.input, "Code file (default: stdin)");

  auto* cf = app.add_subcommand("cf", "Canonical form of the neural ideal");
  auto* intervals = app.add_subcommand("intervals", "Maximal intervals of the code");
  auto* decompose = app.add_subcommand("decompose", "Prime components of the neural ideal");
  auto* complexes = app.add_subcommand(
      "complexes", "Delta(C), factor and polar complexes, prime-sets, SR minimal primes");
  auto* check = app.add_subcommand("check", "Decide IC or MIC");
  check->add_option("property", opt.property, "ic or mic")
      ->required()
      ->check(CLI::IsMember({"ic", "mic"}));
  check->add_option("--method", opt.method, "all, brute, cf, facets or algebraic")
      ->check(CLI::IsMember({"all", "brute", "cf", "facets", "algebraic"}));
  auto* verify = app.add_subcommand("verify", "Check the interval/facet/prime dictionaries");
  auto* survey_cmd = app.add_subcommand("survey", "Classify every code on n neurons");
  survey_cmd->add_option("--n", opt.survey_n, "Neuron count (1..4)")->required();
  for (auto* sub : {cf, intervals, decompose, complexes, check, verify, survey_cmd})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  try {
    if (survey_cmd->parsed()) return cmd_survey(opt, out);

    std::string text;
    if (opt.input.empty()) {
      text = read_all(in);
    } else {
      std::ifstream file(opt.input);
      if (!file) {
        err << "error: cannot open " << opt.input << '\n';
        return kExitInputError;
      }
      text = read_all(file);
    }
    std::vector<std::string> warnings;
    const Code code = parse_code(text, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';

    if (cf->parsed()) return cmd_cf(code, opt, out);
    if (intervals->parsed()) return cmd_intervals(code, opt, out);
    if (decompose->parsed()) return cmd_decompose(code, opt, out);
    if (complexes->parsed()) return cmd_complexes(code, opt, out);
    if (check->parsed()) return cmd_check(code, opt, out, err);
    if (verify->parsed()) return cmd_verify(code, opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace neuralcode
