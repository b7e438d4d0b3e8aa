#include "neuralcode/format.hpp"

namespace neuralcode {

namespace {

std::string join_indices(Mask set, int n, const char* prefix) {
  std::string out;
  for_each_bit(set, [&](int b) {
    if (n > 9 && !out.empty()) out += ',';
    out += prefix;
    out += std::to_string(b + 1);
  });
  return out;
}

}  // namespace

std::string format_set(Mask set, int n) {
  if (set == 0) return "{}";
  if (n <= 9) return join_indices(set, n, "");
  return "{" + join_indices(set, n, "") + "}";
}

std::string format_codeword(Codeword w, int n) { return format_set(w.bits, n); }

std::string format_code_inline(const Code& code) {
  std::string out = "{";
  for (std::size_t i = 0; i < code.words().size(); ++i) {
    if (i) out += ',';
    out += format_codeword(code.words()[i], code.n());
  }
  return out + "}";
}

std::string format_interval(const Interval& iv, int n) {
  return "[" + format_codeword(iv.lo(), n) + "," + format_codeword(iv.hi(), n) + "]";
}

std::string format_pseudomonomial(const Pseudomonomial& p) {
  if (p.is_unit()) return "1";
  std::string out;
  auto factor = [&](std::string f) {
    if (!out.empty()) out += '*';
    out += f;
  };
  for_each_bit(p.sigma(), [&](int b) { factor("x" + std::to_string(b + 1)); });
  for_each_bit(p.tau(), [&](int b) { factor("(1-x" + std::to_string(b + 1) + ")"); });
  return out;
}

std::string format_pseudomonomials(std::span<const Pseudomonomial> ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += format_pseudomonomial(ps[i]);
  }
  return out + "}";
}

std::string format_prime(const PrimePseudoIdeal& p) {
  if ((p.pos | p.neg) == 0) return "<0>";
  std::string out;
  auto gen = [&](std::string g) {
    if (!out.empty()) out += ',';
    out += g;
  };
  for_each_bit(p.pos, [&](int b) { gen("x" + std::to_string(b + 1)); });
  for_each_bit(p.neg, [&](int b) { gen("1-x" + std::to_string(b + 1)); });
  return "<" + out + ">";
}

std::string format_variable_prime(Mask vars) {
  return format_prime(PrimePseudoIdeal{vars, 0});
}

std::string format_face(const PolarVertexSet& face, int n) {
  if ((face.x | face.y) == 0) return "{}";
  std::string plain = join_indices(face.x, n, "");
  std::string barred = join_indices(face.y, n, "~");
  if (n > 9 && !plain.empty() && !barred.empty()) plain += ',';
  return plain + barred;
}

std::string format_monomial(Mask support, VertexUniverse universe, int n) {
  if (support == 0) return "1";
  std::string out;
  auto var = [&](char name, int b) {
    if (!out.empty()) out += '*';
    out += name;
    out += std::to_string(b + 1);
  };
  if (universe == VertexUniverse::plain) {
    for_each_bit(support, [&](int b) { var('x', b); });
  } else {
    PolarVertexSet s = PolarVertexSet::unpack(support, n);
    for_each_bit(s.x, [&](int b) { var('x', b); });
    for_each_bit(s.y, [&](int b) { var('y', b); });
  }
  return out;
}

}  // namespace neuralcode
