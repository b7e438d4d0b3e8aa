#pragma once

// Exhaustive survey of every valid code on n <= 4 neurons.
//
// A code's id is its word set read as a bitset over the 2^n subsets: bit s
// is set iff the subset with mask s is a codeword. Ids 0 (empty) and
// 2^(2^n) - 1 (full) are skipped.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "neuralcode/code.hpp"

namespace neuralcode {

inline constexpr int kSurveyCap = 4;

struct SurveyRow {
  std::uint64_t id = 0;
  int maximal_codewords = 0;
  int maximal_intervals = 0;
  int cf_size = 0;
  int cf_non_monomials = 0;
  bool ic = false;
  bool mic = false;
};

struct SurveySummary {
  int n = 0;
  std::uint64_t codes = 0;
  std::uint64_t ic_codes = 0;
  std::uint64_t mic_codes = 0;
  /// Largest non-monomial CF count seen, keyed by number of maximal codewords.
  std::map<int, int> max_non_monomials;
};

struct SurveyResult {
  std::vector<SurveyRow> rows;
  SurveySummary summary;
};

std::uint64_t code_id(const Code& code);
/// Throws InvalidCode for the empty or full id.
Code code_from_id(int n, std::uint64_t id);

/// Runs all three IC and all three MIC deciders; throws std::logic_error
/// naming the code if any two disagree.
SurveyRow survey_row(const Code& code);

/// Rows in id order. Throws CapExceeded for n outside [1, kSurveyCap].
SurveyResult survey(int n, unsigned threads = 0);

std::string render_survey_text(const SurveyResult& result);
nlohmann::json survey_json(const SurveyResult& result);

}  // namespace neuralcode
