#pragma once

// Plain-text rendering. Sets of neurons print as digit strings when n <= 9
// ("12", empty set "{}") and as brace lists otherwise ("{2,11}"). Barred
// vertices print as "~i".

#include <span>
#include <string>

#include "neuralcode/code.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/ideal.hpp"

namespace neuralcode {

std::string format_set(Mask set, int n);
std::string format_codeword(Codeword w, int n);
/// "{{},2,3,12,13}"
std::string format_code_inline(const Code& code);
/// "[2,12]"
std::string format_interval(const Interval& iv, int n);
/// "x1*(1-x2)*(1-x3)"; the unit renders as "1".
std::string format_pseudomonomial(const Pseudomonomial& p);
/// "{x2*x3, x1*(1-x2)*(1-x3)}" in the given order.
std::string format_pseudomonomials(std::span<const Pseudomonomial> ps);
/// "<x2,x3,1-x1>"
std::string format_prime(const PrimePseudoIdeal& p);
/// "<x2>" for a prime generated by variables; the zero ideal is "<0>".
std::string format_variable_prime(Mask vars);
/// "123~1": plain vertices ascending, then barred ascending.
std::string format_face(const PolarVertexSet& face, int n);
/// "x1*y2*y3" for a polar support, "x2*x3" for a plain one; empty is "1".
std::string format_monomial(Mask support, VertexUniverse universe, int n);

}  // namespace neuralcode
