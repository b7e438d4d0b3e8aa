#include "neuralcode/survey.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "neuralcode/classify.hpp"
#include "neuralcode/errors.hpp"
#include "neuralcode/format.hpp"
#include "neuralcode/ideal.hpp"
#include "neuralcode/json_io.hpp"

namespace neuralcode {

std::uint64_t code_id(const Code& code) {
  if (code.n() > 6) throw CapExceeded("code ids are defined for n <= 6");
  std::uint64_t id = 0;
  for (Codeword w : code.words()) id |= std::uint64_t{1} << w.bits;
  return id;
}

Code code_from_id(int n, std::uint64_t id) {
  if (n < 1 || n > 6) throw CapExceeded("code ids are defined for 1 <= n <= 6");
  std::vector<Codeword> words;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if ((id >> m) & 1) words.emplace_back(m);
  return Code(n, std::move(words));
}

SurveyRow survey_row(const Code& code) {
  const CanonicalForm cf = canonical_form(code);
  SurveyRow row;
  row.id = code_id(code);
  row.maximal_codewords = static_cast<int>(maximal_codewords(code).size());
  row.maximal_intervals = static_cast<int>(maximal_intervals(code).size());
  row.cf_size = static_cast<int>(cf.elements.size());
  row.cf_non_monomials = static_cast<int>(row.cf_size - cf_monomials(cf).size());

  const bool ic = is_intersection_complete_bruteforce(code).verdict;
  const bool mic = is_mic_bruteforce(code).verdict;
  if (is_intersection_complete_cf(code).verdict != ic ||
      is_intersection_complete_facets(code).verdict != ic)
    throw std::logic_error("IC methods disagree on code " + format_code_inline(code));
  if (is_mic_algebraic(code).verdict != mic || is_mic_facets(code).verdict != mic)
    throw std::logic_error("MIC methods disagree on code " + format_code_inline(code));
  row.ic = ic;
  row.mic = mic;
  return row;
}

SurveyResult survey(int n, unsigned threads) {
  if (n < 1 || n > kSurveyCap) {
    std::ostringstream msg;
    msg << "survey is limited to 1 <= n <= " << kSurveyCap;
    if (n > kSurveyCap && n < 64) {
      // 2^(2^n) - 2 codes; n = 5 is already 4294967294.
      msg << "; n = " << n << " has 2^" << (1ull << std::min(n, 6)) << " - 2 codes";
      if (n == 5) msg << " (4294967294 codes at about 70 us each on one core, roughly 3.5 CPU-days)";
    }
    throw CapExceeded(msg.str());
  }
  const std::uint64_t last = (std::uint64_t{1} << (1u << n)) - 1;
  const std::uint64_t total = last - 1;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  auto run_chunk = [n](std::uint64_t from, std::uint64_t to) {
    std::vector<SurveyRow> rows;
    rows.reserve(to - from);
    for (std::uint64_t id = from; id < to; ++id) rows.push_back(survey_row(code_from_id(n, id)));
    return rows;
  };

  SurveyResult result;
  result.rows.reserve(total);
  std::vector<std::future<std::vector<SurveyRow>>> parts;
  const std::uint64_t step = (total + threads - 1) / threads;
  for (std::uint64_t from = 1; from < last; from += step)
    parts.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                               run_chunk, from, std::min(from + step, last)));
  for (auto& part : parts) {
    auto rows = part.get();
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
  }

  SurveySummary& s = result.summary;
  s.n = n;
  s.codes = result.rows.size();
  for (const SurveyRow& row : result.rows) {
    s.ic_codes += row.ic;
    s.mic_codes += row.mic;
    int& best = s.max_non_monomials[row.maximal_codewords];
    best = std::max(best, row.cf_non_monomials);
  }
  return result;
}

std::string render_survey_text(const SurveyResult& result) {
  const int n = result.summary.n;
  std::ostringstream out;
  out << "# id\tmaxcw\tmaxiv\tcf\tcf_nonmono\tIC\tMIC\tcode\n";
  for (const SurveyRow& r : result.rows) {
    out << r.id << '\t' << r.maximal_codewords << '\t' << r.maximal_intervals << '\t'
        << r.cf_size << '\t' << r.cf_non_monomials << '\t' << (r.ic ? "true" : "false") << '\t'
        << (r.mic ? "true" : "false") << '\t' << format_code_inline(code_from_id(n, r.id))
        << '\n';
  }
  const SurveySummary& s = result.summary;
  out << "# n=" << s.n << " codes=" << s.codes << " ic=" << s.ic_codes << " mic=" << s.mic_codes
      << " disagreements=0\n";
  for (auto [k, m] : s.max_non_monomials)
    out << "# maximal_codewords=" << k << " max_cf_non_monomials=" << m << '\n';
  return out.str();
}

nlohmann::json survey_json(const SurveyResult& result) {
  using nlohmann::json;
  const int n = result.summary.n;
  json rows = json::array();
  for (const SurveyRow& r : result.rows)
    rows.push_back({{"id", r.id},
                    {"words", code_json(code_from_id(n, r.id))["words"]},
                    {"maximal_codewords", r.maximal_codewords},
                    {"maximal_intervals", r.maximal_intervals},
                    {"cf_size", r.cf_size},
                    {"cf_non_monomials", r.cf_non_monomials},
                    {"ic", r.ic},
                    {"mic", r.mic}});
  json buckets = json::array();
  for (auto [k, m] : result.summary.max_non_monomials)
    buckets.push_back({{"maximal_codewords", k}, {"max_cf_non_monomials", m}});
  const SurveySummary& s = result.summary;
  return {{"schema", kJsonSchema},
          {"command", "survey"},
          {"n", n},
          {"rows", std::move(rows)},
          {"summary",
           {{"codes", s.codes},
            {"ic", s.ic_codes},
            {"mic", s.mic_codes},
            {"disagreements", 0},
            {"max_cf_non_monomials_by_maximal_codewords", std::move(buckets)}}}};
}

}  // namespace neuralcode
