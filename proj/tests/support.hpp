#pragma once

// Small builders and renderers shared by the test binaries.

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "neuralcode/code.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/format.hpp"
#include "neuralcode/ideal.hpp"

namespace neuralcode::testing {

/// "12" -> {1,2}; "" or "{}" -> empty set. Digits only, n <= 9.
inline Codeword cw(std::string_view digits) {
  Mask bits = 0;
  for (char c : digits)
    if (c >= '1' && c <= '9') bits |= neuron_bit(c - '0');
  return Codeword{bits};
}

inline Code make_code(int n, std::initializer_list<std::string_view> words) {
  std::vector<Codeword> ws;
  for (auto w : words) ws.push_back(cw(w));
  return Code(n, std::move(ws));
}

/// "123~1" -> x = {1,2,3}, y = {1}.
inline PolarVertexSet face(std::string_view text) {
  PolarVertexSet f;
  bool barred = false;
  for (char c : text) {
    if (c == '~') {
      barred = true;
      continue;
    }
    if (c < '1' || c > '9') continue;
    (barred ? f.y : f.x) |= neuron_bit(c - '0');
    barred = false;
  }
  return f;
}

/// sigma and tau from digit strings.
inline Pseudomonomial pm(std::string_view sigma, std::string_view tau) {
  return Pseudomonomial(cw(sigma).bits, cw(tau).bits);
}

/// The running example {0, 2, 3, 12, 13} and its complement {1, 23, 123}.
inline Code running_code() { return make_code(3, {"", "2", "3", "12", "13"}); }
inline Code running_complement() { return make_code(3, {"1", "23", "123"}); }

inline std::string render(const std::vector<Pseudomonomial>& ps) {
  return format_pseudomonomials(ps);
}

inline std::string render(const std::vector<Interval>& ivs, int n) {
  std::string out;
  for (const auto& iv : ivs) out += (out.empty() ? "" : " ") + format_interval(iv, n);
  return out;
}

inline std::string render(const std::vector<PolarVertexSet>& faces, int n) {
  std::string out;
  for (const auto& f : faces) out += (out.empty() ? "" : " ") + format_face(f, n);
  return out;
}

inline std::string render_sets(const std::vector<Mask>& sets, int n) {
  std::string out;
  for (Mask s : sets) out += (out.empty() ? "" : " ") + format_set(s, n);
  return out;
}

inline std::string render_codewords(const std::vector<Codeword>& ws, int n) {
  std::string out;
  for (Codeword w : ws) out += (out.empty() ? "" : " ") + format_codeword(w, n);
  return out;
}

inline std::string render_monomials(const std::vector<Mask>& gens, VertexUniverse u, int n) {
  std::string out;
  for (Mask g : gens) out += (out.empty() ? "" : " ") + format_monomial(g, u, n);
  return out;
}

/// Each subset of [n] independently with probability 1/2; empty and full
/// draws are redrawn.
inline Code random_code(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::vector<Codeword> ws;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (coin(rng)) ws.emplace_back(m);
    if (ws.empty() || ws.size() == (std::size_t{1} << n)) continue;
    return Code(n, std::move(ws));
  }
}

/// Every valid code on n neurons (n <= 4), in code-id order.
inline std::vector<Code> all_codes(int n) {
  std::vector<Code> out;
  const std::uint64_t last = (std::uint64_t{1} << (1u << n)) - 1;
  for (std::uint64_t id = 1; id < last; ++id) {
    std::vector<Codeword> ws;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if ((id >> m) & 1) ws.emplace_back(m);
    out.emplace_back(n, std::move(ws));
  }
  return out;
}

}  // namespace neuralcode::testing
